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
Training losses.  Every loss is a batch mean, so evaluating a set in
batches and weighting by batch size gives the loss of the whole set.
"""

import numpy as np

from rsbeam.autodiff.complex_pair import ComplexPair
from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.rsbnn.unfold_trace import UnfoldTrace
from rsbeam.rsbnn.unfolded_blocks import sum_rates


def _squared_distance(tape: Tape, prediction: Tensor, target: np.ndarray) -> Tensor:
    difference = tape.subtract(prediction, target)
    return tape.sum(tape.multiply(difference, difference), axis=-1)


def supervised_loss(tape: Tape, trace: UnfoldTrace, xi_first: np.ndarray, xi_last: np.ndarray) -> Tensor:
    """
    Only the first and last layer are tied to labels; the layers in between
    are free.

    :param trace: The UnfoldTrace of the batch
    :param xi_first: (B, K+1) labels for layer 0
    :param xi_last: (B, K+1) labels for layer L
    :return: mean over the batch of |xi^[0] - xi_first|^2 + |xi^[L] - xi_last|^2
    """
    per_sample = tape.add(_squared_distance(tape, trace.first_xi, xi_first),
                          _squared_distance(tape, trace.last_xi, xi_last))
    return tape.mean(per_sample, name="supervised_loss")


def unsupervised_loss(tape: Tape, channels: ComplexPair, beams: ComplexPair, noise_power: float) -> Tensor:
    """
    :param channels: (B, K, N_t) channels
    :param beams: (B, N_t, K+1) beams
    :param noise_power: sigma^2
    :return: minus the mean sum rate over the batch
    """
    rates = sum_rates(tape, channels, beams, noise_power)
    return tape.scale(tape.mean(rates), -1.0, name="unsupervised_loss")


def mse_loss(tape: Tape, prediction: Tensor, target: np.ndarray) -> Tensor:
    """
    :param prediction: (B, ...) predictions
    :param target: Targets shaped like prediction
    :return: The mean of the squared differences over every entry
    """
    difference = tape.subtract(prediction, target)
    return tape.mean(tape.multiply(difference, difference), name="mse_loss")
