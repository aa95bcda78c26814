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

from rsbeam.errors.rejected_input_error import RejectedInputError


MAX_SEED = 2 ** 64 - 1


@dataclass(frozen=True)
class TrainConfig:
    """
    Schedule of the two-phase training, shared by the unfolded network and
    the black-box baseline.  A phase with zero epochs is skipped.
    """

    batch_size: int = 1000
    learning_rate: float = 1e-4
    supervised_epochs: int = 50
    unsupervised_epochs: int = 150
    patience: int = 7
    seed: int = 0
    validation_fraction: float = 0.2

    def __post_init__(self):
        if self.batch_size < 1:
            raise RejectedInputError(f"batch_size must be >= 1, got {self.batch_size}")
        if not self.learning_rate > 0.0:
            raise RejectedInputError(f"learning_rate must be > 0, got {self.learning_rate}")
        if self.supervised_epochs < 0 or self.unsupervised_epochs < 0:
            raise RejectedInputError("Epoch counts must be >= 0")
        if self.patience < 1:
            raise RejectedInputError(f"patience must be >= 1, got {self.patience}")
        if not 0 <= self.seed <= MAX_SEED:
            raise RejectedInputError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if not 0.0 < self.validation_fraction < 1.0:
            raise RejectedInputError("validation_fraction must lie strictly between 0 and 1")
