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

from typing import List

import numpy as np

from rsbeam.autodiff.complex_pair import ComplexPair
from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.system_config import SystemConfig
from rsbeam.rsbnn.dense_network import DenseNetwork
from rsbeam.rsbnn.unfolded_blocks import rectify_power


SCHEME_NAME = "blackbox-mlp"


class BlackboxModel:
    """
    The purely data-driven baseline: a dense network from the channels
    straight to the beams, with no knowledge of the beamforming structure.

    Input is [Re(H), Im(H)] (2 K N_t), two relu hidden layers of width
    hidden_dim (4 times the input by default), and 2 N_t (K+1) outputs read
    as Re(P) then Im(P), column-major by stream.  Power rectification is the
    last activation, so every output uses exactly P_t.
    """

    def __init__(self, num_users: int, num_tx_antennas: int, network: DenseNetwork):
        """
        Constructor.

        :param num_users: K
        :param num_tx_antennas: N_t
        :param network: The DenseNetwork with three layers
        """
        self.num_users = num_users
        self.num_tx_antennas = num_tx_antennas
        self.network = network
        sizes = network.layer_sizes
        if (len(sizes) != 4 or sizes[0] != self.input_dim or sizes[-1] != self.output_dim
                or sizes[1] != sizes[2]):
            raise RejectedInputError(f"Network layer sizes {sizes} do not fit a black-box model for "
                                     f"K={num_users}, N_t={num_tx_antennas}")

    @staticmethod
    def initialize(num_users: int, num_tx_antennas: int, seed: int, hidden_dim: int = None) -> "BlackboxModel":
        """
        :param num_users: K
        :param num_tx_antennas: N_t
        :param seed: Seed of the weight initialization
        :param hidden_dim: Width of both hidden layers. Default of None means 4 * 2 K N_t.
        :return: A freshly initialized BlackboxModel
        """
        input_dim = 2 * num_users * num_tx_antennas
        if hidden_dim is None:
            hidden_dim = 4 * input_dim
        output_dim = 2 * num_tx_antennas * (num_users + 1)
        network = DenseNetwork.initialize([input_dim, hidden_dim, hidden_dim, output_dim],
                                          np.random.default_rng(seed), name="blackbox")
        return BlackboxModel(num_users, num_tx_antennas, network)

    @property
    def input_dim(self) -> int:
        """
        :return: 2 K N_t
        """
        return 2 * self.num_users * self.num_tx_antennas

    @property
    def output_dim(self) -> int:
        """
        :return: 2 N_t (K+1)
        """
        return 2 * self.num_tx_antennas * (self.num_users + 1)

    @property
    def hidden_dim(self) -> int:
        """
        :return: The width of the hidden layers
        """
        return self.network.layer_sizes[1]

    def parameters(self) -> List[Tensor]:
        """
        :return: W1, b1, W2, b2, W3, b3
        """
        return self.network.parameters()

    def forward(self, tape: Tape, cfg: SystemConfig, channels: np.ndarray) -> ComplexPair:
        """
        :param tape: The Tape to record on
        :param cfg: The SystemConfig
        :param channels: (B, K, N_t) complex channels
        :return: (B, N_t, K+1) beams using exactly P_t each
        """
        channels = np.asarray(channels, dtype=np.complex128)
        if channels.ndim != 3 or channels.shape[1:] != (self.num_users, self.num_tx_antennas):
            raise RejectedInputError(f"Expected channels of shape (B, {self.num_users}, "
                                     f"{self.num_tx_antennas}), got {channels.shape}")
        batch = channels.shape[0]
        features = tape.constant(np.concatenate([channels.real.reshape(batch, -1),
                                                 channels.imag.reshape(batch, -1)], axis=1), name="features")
        outputs = self.network.forward(tape, features)

        half = self.output_dim // 2
        stream_shape = (batch, self.num_users + 1, self.num_tx_antennas)
        real = tape.swapaxes(tape.reshape(tape.getitem(outputs, (Ellipsis, slice(0, half))), stream_shape))
        imag = tape.swapaxes(tape.reshape(tape.getitem(outputs, (Ellipsis, slice(half, None))), stream_shape))
        return rectify_power(tape, ComplexPair(real, imag), cfg.total_power)

    def infer(self, cfg: SystemConfig, channels: np.ndarray) -> np.ndarray:
        """
        :param channels: (B, K, N_t) complex channels
        :return: (B, N_t, K+1) beams, without recording gradients
        """
        return self.forward(Tape(record=False), cfg, channels).to_complex()
