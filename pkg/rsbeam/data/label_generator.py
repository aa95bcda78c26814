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

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List
from typing import Tuple

import numpy as np

from rsbeam.data.beam_label_set import BeamLabelSet
from rsbeam.data.channel_dataset import ChannelDataset
from rsbeam.data.label_set import LabelSet
from rsbeam.hfpi.fp_hfpi_solver import FpHfpiSolver
from rsbeam.hfpi.hfpi_config import HfpiConfig
from rsbeam.log_utils.message_type import MessageType
from rsbeam.log_utils.structured_message import log_structured
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.system_config import SystemConfig
from rsbeam.progress.progress_reporter import ProgressReporter


@dataclass(frozen=True)
class LabelResult:
    """
    Both label files of one dataset and the samples left out of them.
    """

    labels: LabelSet
    beam_labels: BeamLabelSet
    excluded: List[int]


def _solve_range(args) -> List[Tuple[int, bool, np.ndarray, np.ndarray, np.ndarray]]:
    cfg, hcfg, channels, start = args
    solver = FpHfpiSolver(hcfg)
    results = []
    for offset, sample_channels in enumerate(channels):
        beams, _, diagnostics = solver.solve(cfg, ChannelSample.from_channels(sample_channels))
        results.append((start + offset, diagnostics.labels_usable,
                        diagnostics.first_duals.xi, diagnostics.final_duals.xi, beams))
    return results


class LabelGenerator:
    """
    Runs FP-HFPI on every sample of a dataset and keeps the dual variables
    after the first AO iteration and at convergence as labels, plus the
    final beams.

    Samples where the solver hits its iteration cap, or where the inner loop
    of the first or last AO iteration did not converge, are excluded and
    counted.  Results are in sample order whatever the number of workers.
    """

    def __init__(self, hcfg: HfpiConfig = None, workers: int = 1,
                 progress: ProgressReporter = None, chunk_size: int = 50):
        """
        Constructor.

        :param hcfg: The HfpiConfig. Default of None uses HfpiConfig() defaults.
        :param workers: Number of worker processes; 1 solves in this process
        :param progress: An optional ProgressReporter, told after every chunk
        :param chunk_size: Samples per unit of work
        """
        self.hcfg = hcfg or HfpiConfig()
        self.workers = workers
        self.progress = progress
        self.chunk_size = chunk_size

    def generate(self, dataset: ChannelDataset) -> LabelResult:
        """
        :param dataset: The ChannelDataset to label
        :return: The LabelResult
        """
        logger = logging.getLogger(__name__)
        cfg: SystemConfig = dataset.system_config()
        tasks = [(cfg, self.hcfg, dataset.channels[start:start + self.chunk_size], start)
                 for start in range(0, len(dataset), self.chunk_size)]

        solved = []
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                for part in executor.map(_solve_range, tasks):
                    solved.extend(part)
                    self._report(len(solved), len(dataset))
        else:
            for task in tasks:
                solved.extend(_solve_range(task))
                self._report(len(solved), len(dataset))

        kept = [one for one in solved if one[1]]
        excluded = [one[0] for one in solved if not one[1]]
        if excluded:
            log_structured("rsbeam.labels", "Excluded samples where FP-HFPI did not converge", logger,
                           message_type=MessageType.Warning,
                           extra_properties={"excluded": len(excluded), "total": len(dataset)})

        num_streams = cfg.num_streams
        indices = np.array([one[0] for one in kept], dtype=np.int64)
        labels = LabelSet(num_users=cfg.num_users,
                          num_tx_antennas=cfg.num_tx_antennas,
                          dataset_count=len(dataset),
                          dataset_seed=dataset.seed,
                          indices=indices,
                          xi_first=np.array([one[2] for one in kept]).reshape(-1, num_streams),
                          xi_last=np.array([one[3] for one in kept]).reshape(-1, num_streams))
        beam_labels = BeamLabelSet(num_users=cfg.num_users,
                                   num_tx_antennas=cfg.num_tx_antennas,
                                   dataset_count=len(dataset),
                                   dataset_seed=dataset.seed,
                                   indices=indices,
                                   beams=np.array([one[4] for one in kept],
                                                  dtype=np.complex128).reshape(-1, cfg.num_tx_antennas,
                                                                               num_streams))
        logger.info("Labeled %d of %d samples", len(kept), len(dataset))
        return LabelResult(labels=labels, beam_labels=beam_labels, excluded=excluded)

    def _report(self, done: int, total: int):
        if self.progress is not None:
            self.progress.report({"message": "labels", "samples_done": done, "samples_total": total})


def generate_labels(dataset: ChannelDataset, hcfg: HfpiConfig = None, workers: int = 1) -> LabelSet:
    """
    Functional entry point, see LabelGenerator.generate().
    """
    return LabelGenerator(hcfg, workers=workers).generate(dataset).labels
