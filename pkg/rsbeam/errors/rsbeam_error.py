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


class RsBeamError(Exception):
    """
    Root of all errors raised deliberately by the rsbeam library.
    The command line maps anything deriving from here to a one-line
    log message and a non-zero exit status.
    """
