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

from rsbeam.errors.rejected_input_error import RejectedInputError


@dataclass(frozen=True)
class ChannelParams:
    """
    Geometry and path loss of the single-cell drop model.

    Users are dropped uniformly over the area of the annulus between
    min_distance and cell_radius around the base station.  The large-scale
    gain at distance d is 1 / (1 + (d / ref_distance)^pathloss_exponent).
    Every dataset header records these values.
    """

    cell_radius: float = 100.0
    ref_distance: float = 1.0
    pathloss_exponent: float = 3.0
    min_distance: float = 1.0

    def __post_init__(self):
        if not self.cell_radius > self.min_distance > 0.0:
            raise RejectedInputError(f"Need cell_radius > min_distance > 0, got {self.cell_radius} "
                                     f"and {self.min_distance}")
        if not self.ref_distance > 0.0:
            raise RejectedInputError(f"ref_distance must be > 0, got {self.ref_distance}")
        if not self.pathloss_exponent > 0.0:
            raise RejectedInputError(f"pathloss_exponent must be > 0, got {self.pathloss_exponent}")

    def large_scale_gain(self, distances) -> np.ndarray:
        """
        :param distances: Distances in meters, any shape
        :return: rho = 1 / (1 + (d / d_0)^alpha), same shape
        """
        ratio = np.asarray(distances, dtype=np.float64) / self.ref_distance
        return 1.0 / (1.0 + ratio ** self.pathloss_exponent)
