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
from typing import List
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class AdamState:
    """
    Moment estimates of the Adam optimizer, one array per parameter,
    and the number of steps taken so far.
    """

    step: int
    first_moments: List[np.ndarray]
    second_moments: List[np.ndarray]

    @staticmethod
    def zeros_like(params: Sequence[np.ndarray]) -> "AdamState":
        """
        :param params: The parameter arrays the state will track
        :return: A fresh state with zero moments
        """
        return AdamState(step=0,
                         first_moments=[np.zeros_like(param, dtype=np.float64) for param in params],
                         second_moments=[np.zeros_like(param, dtype=np.float64) for param in params])
