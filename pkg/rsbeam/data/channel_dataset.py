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

from dataclasses import dataclass

import numpy as np

from rsbeam.data.channel_params import ChannelParams
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.system_config import SystemConfig


@dataclass(frozen=True)
class ChannelDataset:
    """
    A batch of channel drops for one (K, N_t, SNR) system, together with
    the seed and drop model that produced it.

    channels is (N, K, N_t) complex, distances and large_scale_gains are
    (N, K).  The noise power is 1, so the SNR fixes P_t.
    """

    num_users: int
    num_tx_antennas: int
    snr_db: float
    seed: int
    cparams: ChannelParams
    channels: np.ndarray
    distances: np.ndarray
    large_scale_gains: np.ndarray

    def __post_init__(self):
        count = self.channels.shape[0] if self.channels.ndim == 3 else 0
        if count < 1:
            raise RejectedInputError("A dataset needs at least one sample")
        if self.channels.shape != (count, self.num_users, self.num_tx_antennas):
            raise RejectedInputError(f"channels have shape {self.channels.shape}, expected "
                                     f"({count}, {self.num_users}, {self.num_tx_antennas})")
        if self.distances.shape != (count, self.num_users) or self.large_scale_gains.shape != (count, self.num_users):
            raise RejectedInputError("distances and large_scale_gains need shape (N, K)")

    def __len__(self) -> int:
        return self.channels.shape[0]

    def sample(self, index: int) -> ChannelSample:
        """
        :param index: The sample index
        :return: The ChannelSample at that index
        """
        return ChannelSample(channels=self.channels[index],
                             large_scale_gains=self.large_scale_gains[index],
                             distances=self.distances[index])

    def system_config(self) -> SystemConfig:
        """
        :return: The SystemConfig the dataset was generated for
        """
        return SystemConfig.from_snr_db(num_tx_antennas=self.num_tx_antennas,
                                        num_users=self.num_users,
                                        snr_db=self.snr_db)
