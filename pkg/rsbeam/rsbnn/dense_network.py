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

from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.rejected_input_error import RejectedInputError


class DenseNetwork:
    """
    A stack of dense layers with relu between them and a linear last layer.

    Layer i holds a weight of shape (out_i, in_i) and a bias of shape (out_i,).
    parameters() lists them in layer order W1, b1, W2, b2, ... which is
    also the order they are serialized in.
    """

    def __init__(self, weights: Sequence[Tensor], biases: Sequence[Tensor]):
        """
        Constructor.

        :param weights: One (out, in) weight Tensor per layer
        :param biases: One (out,) bias Tensor per layer
        """
        if len(weights) != len(biases) or len(weights) == 0:
            raise RejectedInputError("Need one bias per weight and at least one layer")
        for index, (weight, bias) in enumerate(zip(weights, biases)):
            if weight.ndim != 2 or bias.shape != weight.shape[:1]:
                raise RejectedInputError(f"Layer {index}: weight {weight.shape} and bias {bias.shape} disagree")
            if index > 0 and weights[index - 1].shape[0] != weight.shape[1]:
                raise RejectedInputError(f"Layer {index} expects {weight.shape[1]} inputs, "
                                         f"previous layer gives {weights[index - 1].shape[0]}")
            if not (np.all(np.isfinite(weight.values)) and np.all(np.isfinite(bias.values))):
                raise RejectedInputError(f"Layer {index} has non-finite parameters")
        self.weights = list(weights)
        self.biases = list(biases)

    @staticmethod
    def initialize(layer_sizes: Sequence[int], rng: np.random.Generator,
                   name: str = "dense") -> "DenseNetwork":
        """
        Glorot-uniform weights, zero biases.

        :param layer_sizes: [input_dim, hidden_1, ..., output_dim]
        :param rng: The random generator the weights are drawn from
        :param name: Prefix of the parameter names
        :return: A new DenseNetwork
        """
        weights = []
        biases = []
        for index, (fan_in, fan_out) in enumerate(zip(layer_sizes[:-1], layer_sizes[1:])):
            limit = np.sqrt(6.0 / (fan_in + fan_out))
            weights.append(Tensor(rng.uniform(-limit, limit, size=(fan_out, fan_in)),
                                  requires_grad=True, name=f"{name}.W{index + 1}"))
            biases.append(Tensor(np.zeros(fan_out), requires_grad=True, name=f"{name}.b{index + 1}"))
        return DenseNetwork(weights, biases)

    @property
    def input_dim(self) -> int:
        """
        :return: The width of the input layer
        """
        return self.weights[0].shape[1]

    @property
    def output_dim(self) -> int:
        """
        :return: The width of the output layer
        """
        return self.weights[-1].shape[0]

    @property
    def layer_sizes(self) -> List[int]:
        """
        :return: [input_dim, hidden_1, ..., output_dim]
        """
        return [self.input_dim] + [weight.shape[0] for weight in self.weights]

    def parameters(self) -> List[Tensor]:
        """
        :return: W1, b1, W2, b2, ...
        """
        result = []
        for weight, bias in zip(self.weights, self.biases):
            result.extend([weight, bias])
        return result

    def forward(self, tape: Tape, features: Tensor) -> Tensor:
        """
        :param tape: The Tape to record on
        :param features: (..., input_dim) inputs
        :return: (..., output_dim) raw outputs
        """
        activations = features
        last = len(self.weights) - 1
        for index, (weight, bias) in enumerate(zip(self.weights, self.biases)):
            activations = tape.affine(activations, weight, bias, name=f"{weight.name}.affine")
            if index < last:
                activations = tape.relu(activations, name=f"{weight.name}.relu")
        return activations
