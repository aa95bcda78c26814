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

from typing import List
from typing import Sequence

import numpy as np

from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.format_error import FormatError
from rsbeam.rsbnn.dense_network import DenseNetwork
from rsbeam.rsbnn.feature_builder import feature_dim
from rsbeam.rsbnn.unfold_config import UnfoldConfig
from rsbeam.rsbnn.unfold_model import UnfoldModel
from rsbeam.serialization.binary_reader import BinaryReader
from rsbeam.serialization.binary_reader import FLOAT64
from rsbeam.serialization.serialization_format import SerializationFormat


MAGIC = b"RSBNNMDL"
VERSION = 1
HEADER = "<IIIId"


def write_networks(buffer: io.BytesIO, networks: Sequence[DenseNetwork]):
    """
    Writes every parameter of every network as little-endian f64, network by
    network, each in W1, b1, W2, b2, ... order.
    """
    for network in networks:
        for param in network.parameters():
            buffer.write(param.values.astype(FLOAT64).tobytes())


def read_network(reader: BinaryReader, layer_sizes: Sequence[int], name: str) -> DenseNetwork:
    """
    :return: A DenseNetwork of the given layer sizes read from reader
    """
    weights: List[Tensor] = []
    biases: List[Tensor] = []
    for index, (fan_in, fan_out) in enumerate(zip(layer_sizes[:-1], layer_sizes[1:])):
        weights.append(Tensor(reader.read_array((fan_out, fan_in), f"{name} W{index + 1}"),
                              requires_grad=True, name=f"{name}.W{index + 1}"))
        biases.append(Tensor(reader.read_array((fan_out,), f"{name} b{index + 1}"),
                             requires_grad=True, name=f"{name}.b{index + 1}"))
    return DenseNetwork(weights, biases)


def parameter_bytes(layer_sizes: Sequence[int]) -> int:
    """
    :return: The number of bytes one network with these layer sizes takes
    """
    count = sum((fan_in + 1) * fan_out for fan_in, fan_out in zip(layer_sizes[:-1], layer_sizes[1:]))
    return count * FLOAT64.itemsize


def expect_version(reader: BinaryReader, what: str):
    """
    Reads the version byte and rejects versions this code does not know.
    """
    offset = reader.offset
    (version,) = reader.unpack("<B", f"{what} version")
    if version != VERSION:
        raise FormatError(f"Unsupported {what} version {version}, expected {VERSION}", offset)


class UnfoldModelSerializationFormat(SerializationFormat):
    """
    Binary layout of an UnfoldModel, all little-endian:

        8 bytes   magic "RSBNNMDL"
        u8        version (1)
        u32 K, u32 N_t, u32 L, u32 M, f64 epsilon
        then for each of the L+1 networks: W1 (M x D), b1 (M), W2 ((K+1) x M), b2 (K+1) as f64

    detach_aux is a training switch and is not stored.
    """

    def from_object(self, obj: UnfoldModel) -> io.BytesIO:
        """
        :param obj: The UnfoldModel
        :return: A BytesIO positioned at the start of the serialized bytes
        """
        ucfg = obj.ucfg
        buffer = io.BytesIO()
        buffer.write(MAGIC)
        buffer.write(struct.pack("<B", VERSION))
        buffer.write(struct.pack(HEADER, obj.num_users, obj.num_tx_antennas, ucfg.num_layers,
                                 ucfg.hidden_dim, ucfg.epsilon))
        write_networks(buffer, obj.networks)
        buffer.seek(0, os.SEEK_SET)
        return buffer

    def to_object(self, fileobj) -> UnfoldModel:
        """
        :param fileobj: A binary file-like object at the start of the data
        :return: The UnfoldModel
        """
        reader = BinaryReader(fileobj.read())
        reader.expect_magic(MAGIC, "RS-BNN model")
        expect_version(reader, "RS-BNN model")
        header_offset = reader.offset
        num_users, num_tx, num_layers, hidden_dim, epsilon = reader.unpack(HEADER, "RS-BNN model header")
        if min(num_users, num_tx, num_layers, hidden_dim) == 0 or not epsilon > 0.0:
            raise FormatError("RS-BNN model header holds a zero dimension or a non-positive epsilon",
                              header_offset)

        ucfg = UnfoldConfig(num_layers=num_layers, hidden_dim=hidden_dim, epsilon=epsilon)
        sizes = [feature_dim(num_users, num_tx), hidden_dim, num_users + 1]
        reader.require_size(reader.offset + (num_layers + 1) * parameter_bytes(sizes), "RS-BNN model")
        networks = [read_network(reader, sizes, f"layer{index}") for index in range(num_layers + 1)]
        return UnfoldModel(num_users, num_tx, ucfg, networks)

    def get_file_extension(self) -> str:
        """
        :return: The conventional extension of RS-BNN model files
        """
        return ".rsbnn"
