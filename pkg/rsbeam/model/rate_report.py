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


@dataclass(frozen=True)
class RateReport:
    """
    Data-only breakdown of the achievable rates of one beamforming matrix,
    all in bits/s/Hz.

    The common stream has to be decodable by every user, so its rate is the
    worst of the per-user common rates.
    """

    common_rate: float
    private_rates: np.ndarray
    per_user_common_rates: np.ndarray
    sum_rate: float
