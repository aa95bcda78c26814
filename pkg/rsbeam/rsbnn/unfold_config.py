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


@dataclass(frozen=True)
class UnfoldConfig:
    """
    Architecture of the unfolded network.

    epsilon floors every lambda after normalization.  detach_aux stops
    gradients at the auxiliary variables computed inside each layer.
    """

    num_layers: int = 5
    hidden_dim: int = 512
    epsilon: float = 0.01
    detach_aux: bool = False

    def __post_init__(self):
        if self.num_layers < 1:
            raise RejectedInputError(f"num_layers must be >= 1, got {self.num_layers}")
        if self.hidden_dim < 1:
            raise RejectedInputError(f"hidden_dim must be >= 1, got {self.hidden_dim}")
        if not self.epsilon > 0.0:
            raise RejectedInputError(f"epsilon must be > 0, got {self.epsilon}")
