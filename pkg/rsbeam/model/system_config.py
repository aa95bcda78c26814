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

# Needed for SystemConfig self-typing in from_snr_db() below
from __future__ import annotations

import math

from dataclasses import dataclass

from rsbeam.errors.rejected_input_error import RejectedInputError


@dataclass(frozen=True)
class SystemConfig:
    """
    Data-only description of a MU-MISO downlink: how many transmit antennas
    the base station has, how many single-antenna users it serves and the
    power budget against the per-user noise floor.

    All powers are linear.  The SNR is informational; the convention used
    throughout is total_power = noise_power * 10^(snr_db / 10).
    """

    num_tx_antennas: int
    num_users: int
    total_power: float
    noise_power: float = 1.0
    snr_db: float = None

    def __post_init__(self):
        if self.num_tx_antennas < 1:
            raise RejectedInputError(f"num_tx_antennas must be >= 1, got {self.num_tx_antennas}")
        if self.num_users < 1:
            raise RejectedInputError(f"num_users must be >= 1, got {self.num_users}")
        if not self.total_power > 0.0:
            raise RejectedInputError(f"total_power must be > 0, got {self.total_power}")
        if not self.noise_power > 0.0:
            raise RejectedInputError(f"noise_power must be > 0, got {self.noise_power}")

    @classmethod
    def from_snr_db(cls, num_tx_antennas: int, num_users: int, snr_db: float,
                    noise_power: float = 1.0) -> SystemConfig:
        """
        :param num_tx_antennas: N_t
        :param num_users: K
        :param snr_db: The SNR in dB, defined as total power over per-user noise power
        :param noise_power: The per-user noise power. Default is 1.
        :return: A SystemConfig whose total power realizes the given SNR
        """
        total_power = noise_power * math.pow(10.0, snr_db / 10.0)
        return cls(num_tx_antennas=num_tx_antennas,
                   num_users=num_users,
                   total_power=total_power,
                   noise_power=noise_power,
                   snr_db=snr_db)

    @property
    def num_streams(self) -> int:
        """
        :return: The number of beamformer columns: one common plus K private
        """
        return self.num_users + 1
