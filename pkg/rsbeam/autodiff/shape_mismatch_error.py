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


class ShapeMismatchError(AutodiffError, ValueError):
    """
    Raised when the operands of a primitive have incompatible shapes.
    """
