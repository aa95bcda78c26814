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
import os
import struct

from rsbeam.bench.blackbox_model import BlackboxModel
from rsbeam.errors.format_error import FormatError
from rsbeam.serialization.binary_reader import BinaryReader
from rsbeam.serialization.serialization_format import SerializationFormat
from rsbeam.serialization.unfold_model_serialization_format import VERSION
from rsbeam.serialization.unfold_model_serialization_format import expect_version
from rsbeam.serialization.unfold_model_serialization_format import parameter_bytes
from rsbeam.serialization.unfold_model_serialization_format import read_network
from rsbeam.serialization.unfold_model_serialization_format import write_networks


MAGIC = b"RSBBXMDL"
HEADER = "<III"


class BlackboxModelSerializationFormat(SerializationFormat):
    """
    Binary layout of a BlackboxModel, all little-endian:

        8 bytes   magic "RSBBXMDL"
        u8        version (1)
        u32 K, u32 N_t, u32 hidden_dim
        then W1, b1, W2, b2, W3, b3 as f64
    """

    def from_object(self, obj: BlackboxModel) -> io.BytesIO:
        """
        :param obj: The BlackboxModel
        :return: A BytesIO positioned at the start of the serialized bytes
        """
        buffer = io.BytesIO()
        buffer.write(MAGIC)
        buffer.write(struct.pack("<B", VERSION))
        buffer.write(struct.pack(HEADER, obj.num_users, obj.num_tx_antennas, obj.hidden_dim))
        write_networks(buffer, [obj.network])
        buffer.seek(0, os.SEEK_SET)
        return buffer

    def to_object(self, fileobj) -> BlackboxModel:
        """
        :param fileobj: A binary file-like object at the start of the data
        :return: The BlackboxModel
        """
        reader = BinaryReader(fileobj.read())
        reader.expect_magic(MAGIC, "black-box model")
        expect_version(reader, "black-box model")
        header_offset = reader.offset
        num_users, num_tx, hidden_dim = reader.unpack(HEADER, "black-box model header")
        if min(num_users, num_tx, hidden_dim) == 0:
            raise FormatError("black-box model header holds a zero dimension", header_offset)

        sizes = [2 * num_users * num_tx, hidden_dim, hidden_dim, 2 * num_tx * (num_users + 1)]
        reader.require_size(reader.offset + parameter_bytes(sizes), "black-box model")
        network = read_network(reader, sizes, "blackbox")
        return BlackboxModel(num_users, num_tx, network)

    def get_file_extension(self) -> str:
        """
        :return: The conventional extension of black-box model files
        """
        return ".rsbbx"
