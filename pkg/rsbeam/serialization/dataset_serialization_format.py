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

import numpy as np

from rsbeam.data.channel_dataset import ChannelDataset
from rsbeam.data.channel_params import ChannelParams
from rsbeam.errors.format_error import FormatError
from rsbeam.serialization.binary_reader import BinaryReader
from rsbeam.serialization.binary_reader import FLOAT64
from rsbeam.serialization.serialization_format import SerializationFormat


MAGIC = b"RSBEAMv1"
HEADER = "<IIQdQ"
PROVENANCE = "<dddd"


class DatasetSerializationFormat(SerializationFormat):
    """
    Binary layout of a ChannelDataset, all little-endian:

        8 bytes   magic "RSBEAMv1"
        u32 K, u32 N_t, u64 sample_count, f64 snr_db, u64 seed
        f64 cell_radius, f64 ref_distance, f64 pathloss_exponent, f64 min_distance
        then per sample:
            K*N_t f64 Re(H) user-major, K*N_t f64 Im(H), K f64 d_k, K f64 rho_k
    """

    def from_object(self, obj: ChannelDataset) -> io.BytesIO:
        """
        :param obj: The ChannelDataset
        :return: A BytesIO positioned at the start of the serialized bytes
        """
        cparams = obj.cparams
        count = len(obj)
        buffer = io.BytesIO()
        buffer.write(MAGIC)
        buffer.write(struct.pack(HEADER, obj.num_users, obj.num_tx_antennas, count, obj.snr_db, obj.seed))
        buffer.write(struct.pack(PROVENANCE, cparams.cell_radius, cparams.ref_distance,
                                 cparams.pathloss_exponent, cparams.min_distance))

        records = np.concatenate([obj.channels.real.reshape(count, -1),
                                  obj.channels.imag.reshape(count, -1),
                                  obj.distances, obj.large_scale_gains], axis=1)
        buffer.write(records.astype(FLOAT64).tobytes())
        buffer.seek(0, os.SEEK_SET)
        return buffer

    def to_object(self, fileobj) -> ChannelDataset:
        """
        :param fileobj: A binary file-like object at the start of the data
        :return: The ChannelDataset
        """
        reader = BinaryReader(fileobj.read())
        reader.expect_magic(MAGIC, "dataset")
        header_offset = reader.offset
        num_users, num_tx, count, snr_db, seed = reader.unpack(HEADER, "dataset header")
        radius, ref_distance, exponent, min_distance = reader.unpack(PROVENANCE, "dataset provenance")
        if count == 0 or num_users == 0 or num_tx == 0:
            raise FormatError("Dataset header has a zero count or dimension", header_offset)

        record = 2 * num_users * num_tx + 2 * num_users
        reader.require_size(reader.offset + count * record * FLOAT64.itemsize, "dataset")
        records = reader.read_array((count, record), "dataset samples")

        block = num_users * num_tx
        channels = (records[:, :block] + 1j * records[:, block:2 * block]).reshape(count, num_users, num_tx)
        return ChannelDataset(num_users=num_users,
                              num_tx_antennas=num_tx,
                              snr_db=snr_db,
                              seed=seed,
                              cparams=ChannelParams(cell_radius=radius, ref_distance=ref_distance,
                                                    pathloss_exponent=exponent, min_distance=min_distance),
                              channels=channels,
                              distances=records[:, 2 * block:2 * block + num_users].copy(),
                              large_scale_gains=records[:, 2 * block + num_users:].copy())

    def get_file_extension(self) -> str:
        """
        :return: The conventional extension of dataset files
        """
        return ".rsd"
