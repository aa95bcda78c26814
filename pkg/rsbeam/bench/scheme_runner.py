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

from typing import Any
from typing import Dict

import numpy as np

from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.system_config import SystemConfig


class SchemeRunner:
    """
    Interface for one beamforming scheme as the benchmark drives it:
    one sample in, one beam matrix out.  Only solve() is timed.
    """

    @property
    def name(self) -> str:
        """
        :return: The scheme name written to the benchmark CSV
        """
        raise NotImplementedError

    def solve(self, cfg: SystemConfig, sample: ChannelSample) -> np.ndarray:
        """
        :param cfg: The SystemConfig
        :param sample: The ChannelSample
        :return: An N_t x (K+1) complex beam matrix
        """
        raise NotImplementedError

    def reset(self):
        """
        Forgets statistics gathered by earlier solve() calls.
        """

    def summary(self, cfg: SystemConfig) -> Dict[str, Any]:
        """
        :param cfg: The SystemConfig of the samples solved since reset()
        :return: Scheme-specific statistics for the CSV extra column
        """
        raise NotImplementedError

    @staticmethod
    def check_dimensions(scheme: str, num_users: int, num_tx_antennas: int, cfg: SystemConfig):
        """
        Rejects a model trained for another (K, N_t) system.
        """
        if (num_users, num_tx_antennas) != (cfg.num_users, cfg.num_tx_antennas):
            raise RejectedInputError(f"{scheme} model is for K={num_users}, N_t={num_tx_antennas} "
                                     f"but the data has K={cfg.num_users}, N_t={cfg.num_tx_antennas}")
