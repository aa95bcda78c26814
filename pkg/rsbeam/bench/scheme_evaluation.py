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
from dataclasses import field
from typing import Any
from typing import Dict

import numpy as np


@dataclass
class SchemeEvaluation:
    """
    Per-sample results of one scheme on one dataset.

    sum_rates covers every sample; times only the samples after warm-up.
    """

    scheme: str
    num_users: int
    num_tx_antennas: int
    snr_db: float
    sum_rates: np.ndarray
    times: np.ndarray
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def mean_sr(self) -> float:
        """
        :return: The mean sum rate in bits/s/Hz
        """
        return float(np.mean(self.sum_rates))

    @property
    def std_sr(self) -> float:
        """
        :return: The population standard deviation of the sum rate
        """
        return float(np.std(self.sum_rates))

    @property
    def mean_time(self) -> float:
        """
        :return: The mean single-sample wall time in seconds, nan if nothing was timed
        """
        if self.times.size == 0:
            return float("nan")
        return float(np.mean(self.times))

    @property
    def median_time(self) -> float:
        """
        :return: The median single-sample wall time in seconds, nan if nothing was timed
        """
        if self.times.size == 0:
            return float("nan")
        return float(np.median(self.times))

    def to_row(self) -> Dict[str, Any]:
        """
        :return: A benchmark CSV row
        """
        extra = ";".join(f"{key}={value}" for key, value in self.extra.items())
        return {
            "scheme": self.scheme,
            "K": self.num_users,
            "N_t": self.num_tx_antennas,
            "snr_db": self.snr_db,
            "mean_sr": repr(self.mean_sr),
            "std_sr": repr(self.std_sr),
            "mean_time_s": repr(self.mean_time),
            "median_time_s": repr(self.median_time),
            "extra": extra,
        }
