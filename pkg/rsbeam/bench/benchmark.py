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
See class comment for details
"""

import logging
import os

from typing import Dict
from typing import List
from typing import Sequence

from rsbeam.bench.benchmark_config import BenchmarkConfig
from rsbeam.bench.benchmark_config import canonical_scheme
from rsbeam.bench.blackbox_runner import BlackboxRunner
from rsbeam.bench.complexity import BLACKBOX_MLP
from rsbeam.bench.complexity import FP_HFPI
from rsbeam.bench.complexity import RS_BNN
from rsbeam.bench.fp_hfpi_runner import FpHfpiRunner
from rsbeam.bench.scheme_evaluation import SchemeEvaluation
from rsbeam.bench.scheme_evaluator import evaluate_scheme
from rsbeam.bench.scheme_runner import SchemeRunner
from rsbeam.bench.unfold_runner import UnfoldRunner
from rsbeam.data.channel_dataset import ChannelDataset
from rsbeam.errors.missing_model_error import MissingModelError
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.hfpi.hfpi_config import HfpiConfig
from rsbeam.log_utils.message_type import MessageType
from rsbeam.log_utils.structured_message import log_structured
from rsbeam.persistence.binary_file_persistence import BinaryFilePersistence
from rsbeam.progress.progress_reporter import ProgressReporter
from rsbeam.serialization.blackbox_model_serialization_format import BlackboxModelSerializationFormat
from rsbeam.serialization.unfold_model_serialization_format import UnfoldModelSerializationFormat


LEARNED_SCHEME_FORMATS = {
    RS_BNN: UnfoldModelSerializationFormat,
    BLACKBOX_MLP: BlackboxModelSerializationFormat,
}

LEARNED_SCHEME_RUNNERS = {
    RS_BNN: UnfoldRunner,
    BLACKBOX_MLP: BlackboxRunner,
}


def parse_model_paths(specs: Sequence[str]) -> Dict[str, str]:
    """
    Reads "scheme=path" entries.  A bare path is matched to a scheme by its
    file extension.

    :param specs: Model references as given on the command line
    :return: A dictionary of canonical scheme name to path
    """
    extension_to_scheme = {
        UnfoldModelSerializationFormat().get_file_extension(): RS_BNN,
        BlackboxModelSerializationFormat().get_file_extension(): BLACKBOX_MLP,
    }

    paths = {}
    for spec in specs:
        spec = spec.strip()
        if not spec:
            continue
        if "=" in spec:
            scheme, path = spec.split("=", 1)
            scheme = canonical_scheme(scheme)
        else:
            path = spec
            scheme = extension_to_scheme.get(os.path.splitext(path)[1].lower())
            if scheme is None:
                raise RejectedInputError(f"Cannot tell which scheme model {path} is for; "
                                         f"use scheme=path")
        if scheme not in LEARNED_SCHEME_FORMATS:
            raise RejectedInputError(f"Scheme '{scheme}' does not take a model file")
        paths[scheme] = path
    return paths


class Benchmark:
    """
    Evaluates every requested scheme on every dataset, one row per pair.

    Learned schemes need a model file.  All model files are loaded before the
    first sample is solved so a bad path fails fast.
    """

    def __init__(self, bcfg: BenchmarkConfig = None, hcfg: HfpiConfig = None,
                 progress: ProgressReporter = None):
        """
        Constructor.

        :param bcfg: The BenchmarkConfig. Default of None uses the defaults.
        :param hcfg: The HfpiConfig of the fp-hfpi scheme
        :param progress: Optional ProgressReporter
        """
        self.bcfg = bcfg if bcfg is not None else BenchmarkConfig()
        self.hcfg = hcfg
        self.progress = progress

    def make_runners(self, model_paths: Dict[str, str]) -> List[SchemeRunner]:
        """
        :param model_paths: canonical scheme name to model file
        :return: A SchemeRunner per requested scheme, in request order
        """
        runners = []
        for scheme in self.bcfg.schemes:
            if scheme == FP_HFPI:
                runners.append(FpHfpiRunner(self.hcfg))
                continue

            path = model_paths.get(scheme)
            if path is None or not os.path.isfile(path):
                raise MissingModelError(scheme, str(path))
            persistence = BinaryFilePersistence(LEARNED_SCHEME_FORMATS[scheme]())
            model = persistence.restore(path)
            runners.append(LEARNED_SCHEME_RUNNERS[scheme](model))
        return runners

    def run(self, datasets: Sequence[ChannelDataset],
            model_paths: Dict[str, str] = None) -> List[SchemeEvaluation]:
        """
        :param datasets: The test datasets, e.g. one per SNR or per K=N_t point
        :param model_paths: canonical scheme name to model file, for learned schemes
        :return: One SchemeEvaluation per (dataset, scheme), datasets outermost
        """
        logger = logging.getLogger(__name__)
        runners = self.make_runners(model_paths or {})

        evaluations = []
        for dataset in datasets:
            for runner in runners:
                progress = None
                if self.progress is not None:
                    progress = self.progress.subcontext({"scheme": runner.name,
                                                         "K": dataset.num_users,
                                                         "N_t": dataset.num_tx_antennas,
                                                         "snr_db": dataset.snr_db})
                evaluation = evaluate_scheme(runner, dataset, self.bcfg.warmup, progress)
                log_structured("rsbeam.bench", "benchmark row", logger,
                               message_type=MessageType.Metrics,
                               extra_properties=evaluation.to_row())
                evaluations.append(evaluation)
        return evaluations
