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

from typing import Tuple

import numpy as np

from rsbeam.data.beam_label_set import BeamLabelSet
from rsbeam.data.beam_label_set import flatten_beams
from rsbeam.data.beam_label_set import unflatten_beams
from rsbeam.data.label_set import LabelSet
from rsbeam.errors.format_error import FormatError
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.serialization.binary_reader import BinaryReader
from rsbeam.serialization.binary_reader import FLOAT64
from rsbeam.serialization.serialization_format import SerializationFormat


HEADER = "<IIQQQI"

XI_MAGIC = b"RSLABLv1"
BEAM_MAGIC = b"RSBMLBv1"


class LabelSerializationFormat(SerializationFormat):
    """
    Binary layout of a LabelSet (or, with beams=True, a BeamLabelSet),
    all little-endian:

        8 bytes   magic "RSLABLv1" (beams: "RSBMLBv1")
        u32 K, u32 N_t, u64 dataset_count, u64 dataset_seed, u64 record_count, u32 width
        then per record:
            u64 dataset sample index, width f64 values

    For dual-variable labels width is 2(K+1) and the values are xi_first
    then xi_last.  For beam labels width is 2 N_t (K+1) and the values are
    Re(P) column-major by stream, then Im(P).
    """

    def __init__(self, beams: bool = False):
        """
        Constructor.

        :param beams: True for BeamLabelSets
        """
        self.beams = beams
        self.magic = BEAM_MAGIC if beams else XI_MAGIC
        self.what = "beam label" if beams else "label"

    def _width(self, num_users: int, num_tx: int) -> int:
        if self.beams:
            return 2 * num_tx * (num_users + 1)
        return 2 * (num_users + 1)

    def _values(self, obj) -> np.ndarray:
        if self.beams:
            if not isinstance(obj, BeamLabelSet):
                raise RejectedInputError("Beam label format needs a BeamLabelSet")
            return flatten_beams(obj.beams)
        if not isinstance(obj, LabelSet):
            raise RejectedInputError("Label format needs a LabelSet")
        return np.concatenate([obj.xi_first, obj.xi_last], axis=1)

    def from_object(self, obj) -> io.BytesIO:
        """
        :param obj: The LabelSet or BeamLabelSet
        :return: A BytesIO positioned at the start of the serialized bytes
        """
        values = self._values(obj).reshape(len(obj), -1)
        width = self._width(obj.num_users, obj.num_tx_antennas)

        record_dtype = np.dtype([("index", "<u8"), ("values", "<f8", (width,))])
        records = np.zeros(len(obj), dtype=record_dtype)
        records["index"] = obj.indices
        records["values"] = values

        buffer = io.BytesIO()
        buffer.write(self.magic)
        buffer.write(struct.pack(HEADER, obj.num_users, obj.num_tx_antennas, obj.dataset_count,
                                 obj.dataset_seed, len(obj), width))
        buffer.write(records.tobytes())
        buffer.seek(0, os.SEEK_SET)
        return buffer

    def _read(self, fileobj) -> Tuple[Tuple[int, ...], np.ndarray, np.ndarray]:
        reader = BinaryReader(fileobj.read())
        reader.expect_magic(self.magic, self.what)
        header_offset = reader.offset
        header = reader.unpack(HEADER, f"{self.what} header")
        num_users, num_tx, _, _, count, width = header
        if width != self._width(num_users, num_tx):
            raise FormatError(f"{self.what} record width {width} does not fit K={num_users}, N_t={num_tx}",
                              header_offset)

        record_dtype = np.dtype([("index", "<u8"), ("values", "<f8", (width,))])
        reader.require_size(reader.offset + count * record_dtype.itemsize, f"{self.what} file")
        records = np.frombuffer(reader.read(count * record_dtype.itemsize, f"{self.what} records"),
                                dtype=record_dtype)
        indices = records["index"].astype(np.int64)
        values = records["values"].astype(FLOAT64.newbyteorder("=")).reshape(count, width)
        return header, indices, values

    def to_object(self, fileobj):
        """
        :param fileobj: A binary file-like object at the start of the data
        :return: The LabelSet or BeamLabelSet
        """
        header, indices, values = self._read(fileobj)
        num_users, num_tx, dataset_count, dataset_seed, _, _ = header
        if self.beams:
            return BeamLabelSet(num_users=num_users, num_tx_antennas=num_tx,
                                dataset_count=dataset_count, dataset_seed=dataset_seed,
                                indices=indices, beams=unflatten_beams(values, num_users, num_tx))
        half = num_users + 1
        return LabelSet(num_users=num_users, num_tx_antennas=num_tx,
                        dataset_count=dataset_count, dataset_seed=dataset_seed,
                        indices=indices, xi_first=values[:, :half].copy(), xi_last=values[:, half:].copy())

    def get_file_extension(self) -> str:
        """
        :return: The conventional extension of label files
        """
        return ".rsp" if self.beams else ".rsl"
