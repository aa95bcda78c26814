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


class FormatError(RsBeamError):
    """
    Raised when a binary file does not follow its documented layout.
    """

    def __init__(self, message: str, offset: int,
                 expected_bytes: int = None, actual_bytes: int = None):
        """
        Constructor.

        :param message: Human readable description of the problem
        :param offset: Byte offset into the file at which the problem was detected
        :param expected_bytes: For truncation, the number of bytes the header promised.
                    Default is None, meaning not a truncation problem.
        :param actual_bytes: For truncation, the number of bytes actually present.
        """
        full_message = f"{message} (at byte offset {offset})"
        if expected_bytes is not None:
            full_message = f"{full_message}: expected {expected_bytes} bytes, got {actual_bytes}"
        super().__init__(full_message)
        self.offset = offset
        self.expected_bytes = expected_bytes
        self.actual_bytes = actual_bytes
