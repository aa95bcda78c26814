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

from rsbeam.autodiff.complex_pair import ComplexPair
from rsbeam.autodiff.tensor import Tensor


@dataclass(frozen=True)
class UnfoldTrace:
    """
    Everything one forward pass of the unfolded network produced.

    xis[l] is the (B, K+1) [lambda, mu] of layer l and beams[l] the
    (B, N_t, K+1) beams after it, for l = 0..L.  beams[0] is the
    warm start.
    """

    xis: List[Tensor]
    beams: List[ComplexPair]

    @property
    def final_beams(self) -> ComplexPair:
        """
        :return: The beams of the last layer
        """
        return self.beams[-1]

    @property
    def first_xi(self) -> Tensor:
        """
        :return: The dual variables of layer 0
        """
        return self.xis[0]

    @property
    def last_xi(self) -> Tensor:
        """
        :return: The dual variables of layer L
        """
        return self.xis[-1]
