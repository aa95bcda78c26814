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
Shared inner routine of `rsbeam solve` and `rsbeam bench`.
"""

import logging
import time

import numpy as np

from rsbeam.bench.scheme_evaluation import SchemeEvaluation
from rsbeam.bench.scheme_runner import SchemeRunner
from rsbeam.data.channel_dataset import ChannelDataset
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.rate_calculator import rate_report
from rsbeam.progress.progress_reporter import ProgressReporter


def evaluate_scheme(runner: SchemeRunner, dataset: ChannelDataset, warmup: int = 3,
                    progress: ProgressReporter = None) -> SchemeEvaluation:
    """
    Solves every sample of the dataset with one scheme.

    Only the runner's solve() sits inside the wall-clock window; the sum rate
    is evaluated afterwards.  The first warmup samples still count towards
    the sum rate statistics.

    :param runner: The SchemeRunner
    :param dataset: The ChannelDataset
    :param warmup: Number of leading samples left out of the timing statistics
    :param progress: Optional ProgressReporter, told about every tenth sample
    :return: A SchemeEvaluation
    """
    if warmup < 0:
        raise RejectedInputError(f"warmup must be >= 0, got {warmup}")

    logger = logging.getLogger(__name__)
    cfg = dataset.system_config()
    count = len(dataset)
    if warmup >= count:
        logger.warning("Only %d samples with %d warm-up samples: %s timing will be empty",
                       count, warmup, runner.name)

    runner.reset()
    sum_rates = np.empty(count, dtype=np.float64)
    times = []
    for index in range(count):
        sample = dataset.sample(index)

        start = time.perf_counter()
        beams = runner.solve(cfg, sample)
        elapsed = time.perf_counter() - start

        if index >= warmup:
            times.append(elapsed)
        sum_rates[index] = rate_report(cfg, sample, beams).sum_rate

        if progress is not None and ((index + 1) % 10 == 0 or index + 1 == count):
            progress.report({"message": "evaluating", "scheme": runner.name,
                             "done": index + 1, "total": count})

    extra = {"samples": count, "timed": len(times)}
    extra.update(runner.summary(cfg))
    return SchemeEvaluation(scheme=runner.name,
                            num_users=cfg.num_users,
                            num_tx_antennas=cfg.num_tx_antennas,
                            snr_db=dataset.snr_db,
                            sum_rates=sum_rates,
                            times=np.asarray(times, dtype=np.float64),
                            extra=extra)
