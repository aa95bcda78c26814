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
from typing import Tuple

import numpy as np

from rsbeam.data.channel_dataset import ChannelDataset
from rsbeam.data.channel_params import ChannelParams
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.system_config import SystemConfig
from rsbeam.progress.progress_reporter import ProgressReporter


def sample_rng(master_seed: int, index: int) -> np.random.Generator:
    """
    :return: The generator of sample index, independent of every other index
    """
    return np.random.default_rng(np.random.SeedSequence(entropy=master_seed, spawn_key=(index,)))


def draw_sample(cparams: ChannelParams, num_users: int, num_tx_antennas: int,
                master_seed: int, index: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    :return: A tuple of (K x N_t channels, K distances, K large-scale gains)
    """
    rng = sample_rng(master_seed, index)
    inner = cparams.min_distance ** 2
    outer = cparams.cell_radius ** 2
    distances = np.sqrt(inner + (outer - inner) * rng.uniform(size=num_users))
    gains = cparams.large_scale_gain(distances)

    shape = (num_users, num_tx_antennas)
    small_scale = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
    channels = np.sqrt(gains)[:, np.newaxis] * small_scale
    return channels, distances, gains


def _draw_range(args) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    cparams, num_users, num_tx_antennas, master_seed, start, stop = args
    drawn = [draw_sample(cparams, num_users, num_tx_antennas, master_seed, index)
             for index in range(start, stop)]
    return (np.stack([one[0] for one in drawn]),
            np.stack([one[1] for one in drawn]),
            np.stack([one[2] for one in drawn]))


class ChannelGenerator:
    """
    Drops users and draws Rayleigh channels for a whole dataset.

    Sample i depends only on (master_seed, i), so the result does not
    change with the number of worker processes.
    """

    def __init__(self, cparams: ChannelParams = None, workers: int = 1,
                 progress: ProgressReporter = None, chunk_size: int = 1000):
        """
        Constructor.

        :param cparams: The ChannelParams. Default of None uses ChannelParams() defaults.
        :param workers: Number of worker processes; 1 draws in this process
        :param progress: An optional ProgressReporter, told after every chunk
        :param chunk_size: Samples per unit of work
        """
        self.cparams = cparams or ChannelParams()
        self.workers = workers
        self.progress = progress
        self.chunk_size = chunk_size

    def generate(self, cfg: SystemConfig, n_samples: int, master_seed: int) -> ChannelDataset:
        """
        :param cfg: The SystemConfig; its snr_db is recorded in the dataset
        :param n_samples: Number of samples, >= 1
        :param master_seed: The 64-bit master seed
        :return: The ChannelDataset
        """
        if n_samples < 1:
            raise RejectedInputError(f"n_samples must be >= 1, got {n_samples}")
        if cfg.snr_db is None:
            raise RejectedInputError("The SystemConfig must carry snr_db to be recorded in the dataset")
        logger = logging.getLogger(__name__)
        logger.info("Generating %d samples for K=%d, N_t=%d, seed=%d",
                    n_samples, cfg.num_users, cfg.num_tx_antennas, master_seed)

        tasks = [(self.cparams, cfg.num_users, cfg.num_tx_antennas, master_seed,
                  start, min(start + self.chunk_size, n_samples))
                 for start in range(0, n_samples, self.chunk_size)]

        parts = []
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                for part in executor.map(_draw_range, tasks):
                    parts.append(part)
                    self._report(len(parts), len(tasks))
        else:
            for task in tasks:
                parts.append(_draw_range(task))
                self._report(len(parts), len(tasks))

        return ChannelDataset(num_users=cfg.num_users,
                              num_tx_antennas=cfg.num_tx_antennas,
                              snr_db=cfg.snr_db,
                              seed=master_seed,
                              cparams=self.cparams,
                              channels=np.concatenate([part[0] for part in parts]),
                              distances=np.concatenate([part[1] for part in parts]),
                              large_scale_gains=np.concatenate([part[2] for part in parts]))

    def _report(self, done: int, total: int):
        if self.progress is not None:
            self.progress.report({"message": "channels", "chunks_done": done, "chunks_total": total})


def generate_channels(cfg: SystemConfig, cparams: ChannelParams, n_samples: int,
                      master_seed: int, workers: int = 1) -> ChannelDataset:
    """
    Functional entry point, see ChannelGenerator.generate().
    """
    return ChannelGenerator(cparams, workers=workers).generate(cfg, n_samples, master_seed)
