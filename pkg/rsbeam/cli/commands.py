# Copyright (C) 2019-2025 Cognizant Digital Business, Evolutionary AI.
# All Rights Reserved.
# Issued under the Academic Public License.
#
# You can be released from the terms, and requirements of the Academic Public
# License by purchasing a commercial license.
# Purchase of a commercial license is mandatory for any use of the
# rsbeam SDK Software in commercial settings.
#
# END COPYRIGHT
"""
Bodies of the rsbeam subcommands.  Each takes the resolved settings of its
subcommand and a ProgressReporter, and returns the process exit status.
"""

import csv
import logging
import os

from typing import Any
from typing import Dict

from rsbeam.bench.benchmark import Benchmark
from rsbeam.bench.benchmark import parse_model_paths
from rsbeam.bench.benchmark_config import BenchmarkConfig
from rsbeam.bench.benchmark_config import canonical_scheme
from rsbeam.bench.benchmark_csv_writer import BenchmarkCsvWriter
from rsbeam.bench.blackbox_trainer import train_blackbox
from rsbeam.bench.complexity import FP_HFPI
from rsbeam.bench.fp_hfpi_runner import FpHfpiRunner
from rsbeam.bench.scheme_evaluator import evaluate_scheme
from rsbeam.data.channel_generator import ChannelGenerator
from rsbeam.data.channel_params import ChannelParams
from rsbeam.data.label_generator import LabelGenerator
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.hfpi.hfpi_config import HfpiConfig
from rsbeam.log_utils.message_type import MessageType
from rsbeam.log_utils.structured_message import log_structured
from rsbeam.model.system_config import SystemConfig
from rsbeam.persistence.binary_file_persistence import BinaryFilePersistence
from rsbeam.progress.progress_reporter import ProgressReporter
from rsbeam.rsbnn.train_config import TrainConfig
from rsbeam.rsbnn.unfold_config import UnfoldConfig
from rsbeam.rsbnn.unfold_trainer import train_unfolded
from rsbeam.serialization.blackbox_model_serialization_format import BlackboxModelSerializationFormat
from rsbeam.serialization.dataset_serialization_format import DatasetSerializationFormat
from rsbeam.serialization.label_serialization_format import LabelSerializationFormat
from rsbeam.serialization.unfold_model_serialization_format import UnfoldModelSerializationFormat


Settings = Dict[str, Any]


def hfpi_config(settings: Settings) -> HfpiConfig:
    """
    :return: The HfpiConfig named by the settings
    """
    return HfpiConfig(rho=settings["rho"],
                      inner_tol=settings["inner_tol"],
                      outer_tol=settings["outer_tol"],
                      max_inner=settings["max_inner"],
                      max_outer=settings["max_outer"],
                      inner_metric=settings["inner_metric"],
                      outer_metric=settings["outer_metric"])


def train_config(settings: Settings) -> TrainConfig:
    """
    :return: The TrainConfig named by the settings
    """
    return TrainConfig(batch_size=settings["batch"],
                       learning_rate=settings["lr"],
                       supervised_epochs=settings["sup_epochs"],
                       unsupervised_epochs=settings["unsup_epochs"],
                       patience=settings["patience"],
                       seed=settings["seed"],
                       validation_fraction=settings["validation_fraction"])


def read_dataset(path: str):
    """
    :param path: A dataset file
    :return: The ChannelDataset
    """
    return BinaryFilePersistence(DatasetSerializationFormat()).restore(path)


def gen_data(settings: Settings, progress: ProgressReporter) -> int:
    """
    gen-data: draws a channel dataset and writes it.
    """
    cfg = SystemConfig.from_snr_db(num_tx_antennas=settings["nt"],
                                   num_users=settings["k"],
                                   snr_db=settings["snr_db"])
    cparams = ChannelParams(cell_radius=settings["radius"],
                            ref_distance=settings["d0"],
                            pathloss_exponent=settings["alpha"],
                            min_distance=settings["min_distance"])
    generator = ChannelGenerator(cparams, workers=settings["workers"], progress=progress)
    dataset = generator.generate(cfg, settings["samples"], settings["seed"])
    BinaryFilePersistence(DatasetSerializationFormat()).persist(dataset, settings["out"])
    return 0


def labels(settings: Settings, progress: ProgressReporter) -> int:
    """
    labels: runs FP-HFPI over a dataset and writes the dual-variable labels,
    and optionally the beamformers.
    """
    logger = logging.getLogger(__name__)
    dataset = read_dataset(settings["data"])
    generator = LabelGenerator(hfpi_config(settings), workers=settings["workers"], progress=progress)
    result = generator.generate(dataset)

    BinaryFilePersistence(LabelSerializationFormat()).persist(result.labels, settings["out"])
    if settings["beams_out"] is not None:
        BinaryFilePersistence(LabelSerializationFormat(beams=True)).persist(result.beam_labels,
                                                                             settings["beams_out"])
    log_structured("rsbeam.labels", "labels written", logger, message_type=MessageType.Metrics,
                   extra_properties={"labeled": len(result.labels), "excluded": len(result.excluded)})
    return 0


def solve(settings: Settings, progress: ProgressReporter) -> int:
    """
    solve: runs FP-HFPI on every sample and writes one CSV row per sample.
    """
    logger = logging.getLogger(__name__)
    if canonical_scheme(settings["algo"]) != FP_HFPI:
        raise RejectedInputError(f"solve only runs {FP_HFPI}, got '{settings['algo']}'")

    dataset = read_dataset(settings["data"])
    runner = FpHfpiRunner(hfpi_config(settings))
    evaluation = evaluate_scheme(runner, dataset, settings["warmup"], progress)

    path = settings["report"]
    dirs = os.path.dirname(path)
    if dirs:
        os.makedirs(dirs, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as csv_file:
        writer = None
        for index, diagnostics in enumerate(runner.diagnostics):
            row = {"index": index, "sum_rate": repr(float(evaluation.sum_rates[index]))}
            row.update(diagnostics.to_row())
            if writer is None:
                writer = csv.DictWriter(csv_file, fieldnames=list(row.keys()))
                writer.writeheader()
            writer.writerow(row)

    log_structured("rsbeam.solve", "solve summary", logger, message_type=MessageType.Metrics,
                   extra_properties=evaluation.to_row())
    return 0


def train(settings: Settings, progress: ProgressReporter) -> int:
    """
    train: trains the unfolded network on a dataset and its labels.
    """
    dataset = read_dataset(settings["data"])
    label_set = BinaryFilePersistence(LabelSerializationFormat()).restore(settings["labels"])
    ucfg = UnfoldConfig(num_layers=settings["layers"],
                        hidden_dim=settings["hidden"],
                        epsilon=settings["epsilon"],
                        detach_aux=settings["detach_aux"])
    model, history = train_unfolded(dataset, label_set, ucfg, train_config(settings), progress)

    BinaryFilePersistence(UnfoldModelSerializationFormat()).persist(model, settings["model_out"])
    if settings["history_out"] is not None:
        history.write_csv(settings["history_out"])
    return 0


def train_blackbox_model(settings: Settings, progress: ProgressReporter) -> int:
    """
    train-blackbox: trains the dense black-box baseline on FP-HFPI beams.
    """
    dataset = read_dataset(settings["data"])
    beam_labels = BinaryFilePersistence(LabelSerializationFormat(beams=True)).restore(settings["labels_p"])
    hidden_dim = settings["hidden"] if settings["hidden"] > 0 else None
    model, history = train_blackbox(dataset, beam_labels, train_config(settings), progress, hidden_dim)

    BinaryFilePersistence(BlackboxModelSerializationFormat()).persist(model, settings["model_out"])
    if settings["history_out"] is not None:
        history.write_csv(settings["history_out"])
    return 0


def bench(settings: Settings, progress: ProgressReporter) -> int:
    """
    bench: evaluates the schemes on every dataset and appends CSV rows.
    """
    model_paths = parse_model_paths(settings["models"])
    schemes = settings["schemes"]
    if not schemes:
        schemes = [FP_HFPI] + sorted(model_paths.keys())

    bcfg = BenchmarkConfig(schemes=tuple(schemes), warmup=settings["warmup"])
    benchmark = Benchmark(bcfg, hfpi_config(settings), progress)

    datasets = [read_dataset(path) for path in settings["data"]]
    evaluations = benchmark.run(datasets, model_paths)
    BenchmarkCsvWriter(settings["out"]).write_rows([one.to_row() for one in evaluations])
    return 0


COMMANDS = {
    "gen-data": gen_data,
    "labels": labels,
    "solve": solve,
    "train": train,
    "train-blackbox": train_blackbox_model,
    "bench": bench,
}
