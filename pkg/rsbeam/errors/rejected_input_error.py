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

from rsbeam.errors.rsbeam_error import RsBeamError


class RejectedInputError(RsBeamError, ValueError):
    """
    Raised when arguments violate a documented precondition:
    mismatched dimensions, non-positive powers or multipliers,
    empty datasets and the like.
    """
