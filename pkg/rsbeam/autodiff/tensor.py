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

from typing import Tuple

import numpy as np


class Tensor:
    """
    A real-valued array that may take part in reverse-mode differentiation.

    Values are always float64.  A Tensor produced by a recorded Tape
    operation knows the Node that produced it; leaves (parameters and
    constants) have no node.
    """

    def __init__(self, values, requires_grad: bool = False, name: str = None, node=None):
        """
        Constructor.

        :param values: Anything numpy can turn into a float64 array
        :param requires_grad: True if gradients should flow back to this tensor
        :param name: An optional name used in error messages
        :param node: The Node that produced this tensor, if any
        """
        self.values = np.asarray(values, dtype=np.float64)
        self.requires_grad = requires_grad
        self.name = name
        self.node = node

    @property
    def shape(self) -> Tuple[int, ...]:
        """
        :return: The shape of the values
        """
        return self.values.shape

    @property
    def ndim(self) -> int:
        """
        :return: The number of dimensions of the values
        """
        return self.values.ndim

    @property
    def size(self) -> int:
        """
        :return: The number of entries
        """
        return int(self.values.size)

    def item(self) -> float:
        """
        :return: The single value of a scalar tensor as a python float
        """
        return float(self.values.item())

    def __repr__(self) -> str:
        return f"Tensor(name={self.name!r}, shape={self.shape}, requires_grad={self.requires_grad})"
