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
class LabelSet:
    """
    FP-HFPI dual-variable labels for the samples of one dataset.

    indices[i] is the dataset sample that row i of xi_first and xi_last
    belongs to; samples the solver did not converge on are missing.
    dataset_count and dataset_seed tie the labels to their dataset.
    """

    num_users: int
    num_tx_antennas: int
    dataset_count: int
    dataset_seed: int
    indices: np.ndarray
    xi_first: np.ndarray
    xi_last: np.ndarray

    def __post_init__(self):
        count = self.indices.shape[0]
        expected = (count, self.num_users + 1)
        if self.indices.ndim != 1 or self.xi_first.shape != expected or self.xi_last.shape != expected:
            raise RejectedInputError(f"Expected {count} indices and labels of shape {expected}, got "
                                     f"{self.xi_first.shape} and {self.xi_last.shape}")
        if count > 0 and (np.min(self.indices) < 0 or np.max(self.indices) >= self.dataset_count):
            raise RejectedInputError("Label indices fall outside the dataset")

    def __len__(self) -> int:
        return self.indices.shape[0]

    def matches(self, dataset) -> bool:
        """
        :param dataset: A ChannelDataset
        :return: True if these labels were generated from that dataset
        """
        return (self.num_users == dataset.num_users and self.num_tx_antennas == dataset.num_tx_antennas
                and self.dataset_count == len(dataset) and self.dataset_seed == dataset.seed)
