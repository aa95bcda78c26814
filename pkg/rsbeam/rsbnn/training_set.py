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
class TrainingSet:
    """
    Channels and per-sample regression targets, aligned along the first axis.

    What the targets mean is up to the training phases: concatenated
    [xi_first, xi_last] for the unfolded network, flattened FP-HFPI beams
    for the black-box baseline.  Unsupervised phases ignore them.
    """

    channels: np.ndarray
    targets: np.ndarray

    def __post_init__(self):
        if self.channels.ndim != 3:
            raise RejectedInputError(f"Expected (N, K, N_t) channels, got shape {self.channels.shape}")
        if self.targets.shape[:1] != self.channels.shape[:1]:
            raise RejectedInputError(f"{self.channels.shape[0]} channel samples but "
                                     f"{self.targets.shape[0]} targets")

    def __len__(self) -> int:
        return self.channels.shape[0]

    def subset(self, indices: np.ndarray) -> "TrainingSet":
        """
        :param indices: Sample indices, in the order wanted
        :return: A new TrainingSet holding only those samples
        """
        return TrainingSet(channels=self.channels[indices], targets=self.targets[indices])
