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

import struct

from typing import Tuple

import numpy as np

from rsbeam.errors.format_error import FormatError


FLOAT64 = np.dtype("<f8")
UINT64 = np.dtype("<u8")


class BinaryReader:
    """
    Sequential reader over the bytes of one little-endian file that reports
    every layout problem as a FormatError carrying the byte offset.
    """

    def __init__(self, data: bytes):
        """
        Constructor.

        :param data: The whole file contents
        """
        self.data = data
        self.offset = 0

    def read(self, count: int, what: str) -> bytes:
        """
        :param count: Number of bytes
        :param what: What is being read, for the error message
        :return: The next count bytes
        """
        end = self.offset + count
        if end > len(self.data):
            raise FormatError(f"Truncated {what}", self.offset,
                              expected_bytes=end, actual_bytes=len(self.data))
        chunk = self.data[self.offset:end]
        self.offset = end
        return chunk

    def expect_magic(self, magic: bytes, what: str):
        """
        :param magic: The bytes the file must start with
        :param what: The kind of file, for the error message
        """
        start = self.offset
        found = self.read(len(magic), f"{what} magic")
        if found != magic:
            raise FormatError(f"Not a {what} file: magic {found!r}, expected {magic!r}", start)

    def unpack(self, fmt: str, what: str) -> Tuple:
        """
        :param fmt: A struct format, little-endian
        :param what: What is being read, for the error message
        :return: The unpacked values
        """
        return struct.unpack(fmt, self.read(struct.calcsize(fmt), what))

    def read_array(self, shape: Tuple[int, ...], what: str, dtype: np.dtype = FLOAT64) -> np.ndarray:
        """
        :param shape: The shape of the array
        :param what: What is being read, for the error message
        :param dtype: A little-endian numpy dtype
        :return: A native-endian copy of the array
        """
        count = int(np.prod(shape, dtype=np.int64))
        chunk = self.read(count * dtype.itemsize, what)
        return np.frombuffer(chunk, dtype=dtype).reshape(shape).astype(dtype.newbyteorder("="))

    def require_size(self, expected_total: int, what: str):
        """
        Checks up front that the file holds exactly as many bytes as its
        header promises.

        :param expected_total: The total file size the header implies
        :param what: The kind of file, for the error message
        """
        actual = len(self.data)
        if actual < expected_total:
            raise FormatError(f"Truncated {what}", actual,
                              expected_bytes=expected_total, actual_bytes=actual)
        if actual > expected_total:
            raise FormatError(f"Trailing bytes after {what}", expected_total,
                              expected_bytes=expected_total, actual_bytes=actual)
