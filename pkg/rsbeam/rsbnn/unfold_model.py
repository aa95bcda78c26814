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
from typing import Sequence

import numpy as np

from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.rsbnn.dense_network import DenseNetwork
from rsbeam.rsbnn.feature_builder import feature_dim
from rsbeam.rsbnn.unfold_config import UnfoldConfig


class UnfoldModel:
    """
    Parameters of the unfolded network for one (K, N_t) system.

    networks[0] predicts the initial dual variables from the warm-start
    beams; networks[1..L] are the unfolded layers.  Every network maps the
    D features to K+1 outputs through one hidden layer of width M, so the
    output size does not depend on N_t.
    """

    def __init__(self, num_users: int, num_tx_antennas: int, ucfg: UnfoldConfig,
                 networks: Sequence[DenseNetwork]):
        """
        Constructor.

        :param num_users: K
        :param num_tx_antennas: N_t
        :param ucfg: The UnfoldConfig the networks were built for
        :param networks: L+1 DenseNetworks
        """
        self.num_users = num_users
        self.num_tx_antennas = num_tx_antennas
        self.ucfg = ucfg
        self.networks = list(networks)

        if len(self.networks) != ucfg.num_layers + 1:
            raise RejectedInputError(f"Expected {ucfg.num_layers + 1} networks, got {len(self.networks)}")
        expected = [self.input_dim, ucfg.hidden_dim, num_users + 1]
        for index, network in enumerate(self.networks):
            if network.layer_sizes != expected:
                raise RejectedInputError(f"Network {index} has layer sizes {network.layer_sizes}, "
                                         f"expected {expected}")

    @staticmethod
    def initialize(num_users: int, num_tx_antennas: int, ucfg: UnfoldConfig, seed: int) -> "UnfoldModel":
        """
        :param num_users: K
        :param num_tx_antennas: N_t
        :param ucfg: The UnfoldConfig
        :param seed: Seed of the weight initialization
        :return: A freshly initialized UnfoldModel
        """
        rng = np.random.default_rng(seed)
        sizes = [feature_dim(num_users, num_tx_antennas), ucfg.hidden_dim, num_users + 1]
        networks = [DenseNetwork.initialize(sizes, rng, name=f"layer{index}")
                    for index in range(ucfg.num_layers + 1)]
        return UnfoldModel(num_users, num_tx_antennas, ucfg, networks)

    @property
    def input_dim(self) -> int:
        """
        :return: D, the feature length
        """
        return feature_dim(self.num_users, self.num_tx_antennas)

    def parameters(self) -> List[Tensor]:
        """
        :return: All parameters, network by network, each in W1, b1, W2, b2 order
        """
        result = []
        for network in self.networks:
            result.extend(network.parameters())
        return result
