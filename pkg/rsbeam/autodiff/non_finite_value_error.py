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

from rsbeam.autodiff.autodiff_error import AutodiffError


class NonFiniteValueError(AutodiffError):
    """
    Raised when a forward pass produces a NaN or an infinity.
    """

    def __init__(self, node_name: str, node_index: int):
        """
        Constructor.

        :param node_name: The name of the operation that produced the value
        :param node_index: The position the node has (or would have had) on its Tape
        """
        super().__init__(f"Non-finite value produced by node {node_index} ('{node_name}')")
        self.node_name = node_name
        self.node_index = node_index
