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


def flatten_beams(beams: np.ndarray) -> np.ndarray:
    """
    :param beams: (..., N_t, K+1) complex beams
    :return: (..., 2 N_t (K+1)) reals: Re(P) column-major by stream, then Im(P)
    """
    streams = np.swapaxes(np.asarray(beams, dtype=np.complex128), -1, -2)
    flat = streams.reshape(streams.shape[:-2] + (-1,))
    return np.concatenate([flat.real, flat.imag], axis=-1)


def unflatten_beams(flat: np.ndarray, num_users: int, num_tx_antennas: int) -> np.ndarray:
    """
    :return: The inverse of flatten_beams()
    """
    flat = np.asarray(flat, dtype=np.float64)
    half = flat.shape[-1] // 2
    values = flat[..., :half] + 1j * flat[..., half:]
    streams = values.reshape(flat.shape[:-1] + (num_users + 1, num_tx_antennas))
    return np.swapaxes(streams, -1, -2)


@dataclass(frozen=True)
class BeamLabelSet:
    """
    FP-HFPI beamformers of the converged samples of one dataset, the
    regression targets of the black-box baseline.  beams is (n, N_t, K+1).
    """

    num_users: int
    num_tx_antennas: int
    dataset_count: int
    dataset_seed: int
    indices: np.ndarray
    beams: np.ndarray

    def __post_init__(self):
        expected = (self.indices.shape[0], self.num_tx_antennas, self.num_users + 1)
        if self.indices.ndim != 1 or self.beams.shape != expected:
            raise RejectedInputError(f"Expected beams of shape {expected}, got {self.beams.shape}")

    def __len__(self) -> int:
        return self.indices.shape[0]

    @property
    def width(self) -> int:
        """
        :return: 2 N_t (K+1), the length of one flattened record
        """
        return 2 * self.num_tx_antennas * (self.num_users + 1)

    def flattened(self) -> np.ndarray:
        """
        :return: (n, width) flattened beams
        """
        return flatten_beams(self.beams)

    def matches(self, dataset) -> bool:
        """
        :param dataset: A ChannelDataset
        :return: True if these beams were generated from that dataset
        """
        return (self.num_users == dataset.num_users and self.num_tx_antennas == dataset.num_tx_antennas
                and self.dataset_count == len(dataset) and self.dataset_seed == dataset.seed)
