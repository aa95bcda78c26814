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
See class comment for details.
"""

import io


class SerializationFormat:
    """
    Interface of the rsbeam binary file formats.  Each format starts with
    an 8-byte magic, stores little-endian integers and reals, and owns one
    file extension.
    """

    def from_object(self, obj) -> io.BytesIO:
        """
        :param obj: A dataset, label set or model
        :return: A BytesIO holding the encoded file, rewound to offset 0
        """
        raise NotImplementedError

    def to_object(self, fileobj):
        """
        :param fileobj: A binary file-like object positioned at the magic.
                The caller keeps ownership and closes it.
        :return: The decoded object.  FormatError names the byte offset
                of a bad magic, version or truncation.
        """
        raise NotImplementedError

    def get_file_extension(self) -> str:
        """
        :return: The extension of files in this format, dot included, e.g. ".rsd"
        """
        raise NotImplementedError
