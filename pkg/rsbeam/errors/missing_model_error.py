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


class MissingModelError(RsBeamError, FileNotFoundError):
    """
    Raised when a learned scheme is requested but its model file is absent.
    """

    def __init__(self, scheme: str, path: str):
        """
        Constructor.

        :param scheme: The scheme name that needed the model
        :param path: The path that was looked for
        """
        super().__init__(f"Model file for scheme '{scheme}' not found: {path}")
        self.scheme = scheme
        self.path = path
