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

# Needed for ChannelSample self-typing in from_channels() below
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from rsbeam.errors.rejected_input_error import RejectedInputError


@dataclass(frozen=True)
class ChannelSample:
    """
    The channel state information for one drop of K users.

    Row k of channels is the complex vector h_k of length N_t, so that
    h_k^H p is channels[k].conj() @ p.  The large-scale gains and the
    distances they were derived from ride along as provenance.
    """

    channels: np.ndarray
    large_scale_gains: np.ndarray
    distances: np.ndarray

    def __post_init__(self):
        channels = np.asarray(self.channels, dtype=np.complex128)
        gains = np.asarray(self.large_scale_gains, dtype=np.float64)
        distances = np.asarray(self.distances, dtype=np.float64)

        if channels.ndim != 2:
            raise RejectedInputError(f"channels must be a K x N_t matrix, got shape {channels.shape}")
        num_users = channels.shape[0]
        if gains.shape != (num_users,) or distances.shape != (num_users,):
            raise RejectedInputError("large_scale_gains and distances need one entry per user")
        if not np.all(np.isfinite(channels)):
            raise RejectedInputError("channels contain non-finite entries")
        if not np.all(gains > 0.0):
            raise RejectedInputError("large_scale_gains must all be > 0")

        # Frozen dataclass, so go around __setattr__ to store the normalized arrays
        object.__setattr__(self, "channels", channels)
        object.__setattr__(self, "large_scale_gains", gains)
        object.__setattr__(self, "distances", distances)

    @classmethod
    def from_channels(cls, channels) -> ChannelSample:
        """
        Convenience for callers that only have the small-scale picture.

        :param channels: K x N_t complex matrix
        :return: A ChannelSample with unit large-scale gains and zero distances
        """
        channels = np.atleast_2d(np.asarray(channels, dtype=np.complex128))
        num_users = channels.shape[0]
        return cls(channels=channels,
                   large_scale_gains=np.ones(num_users),
                   distances=np.zeros(num_users))

    @property
    def num_users(self) -> int:
        """
        :return: K
        """
        return self.channels.shape[0]

    @property
    def num_tx_antennas(self) -> int:
        """
        :return: N_t
        """
        return self.channels.shape[1]
