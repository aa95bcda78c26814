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
Input features of the per-layer networks.

The order is fixed: Re(H) row-major by user, Im(H), Re(P) column-major by
stream (p_0 first, then p_1 ... p_K), Im(P), the K lambdas and finally mu.
"""

import numpy as np

from rsbeam.autodiff.complex_pair import ComplexPair
from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.rejected_input_error import RejectedInputError


def feature_dim(num_users: int, num_tx_antennas: int) -> int:
    """
    :return: 2 K N_t + 2 (K+1) N_t + (K+1)
    """
    num_streams = num_users + 1
    return 2 * num_users * num_tx_antennas + 2 * num_streams * num_tx_antennas + num_streams


def build_features(channels: np.ndarray, beams: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """
    Single-sample numpy reference of the feature layout.  Networks are fed
    by batch_features(); this one documents the order for one sample.

    :param channels: K x N_t complex channels
    :param beams: N_t x (K+1) complex beam matrix of the previous layer
    :param xi: length K+1 [lambda, mu] of the previous layer
    :return: The length-D real feature vector
    """
    channels = np.asarray(channels, dtype=np.complex128)
    beams = np.asarray(beams, dtype=np.complex128)
    xi = np.asarray(xi, dtype=np.float64)
    num_users, num_tx = channels.shape
    if beams.shape != (num_tx, num_users + 1) or xi.shape != (num_users + 1,):
        raise RejectedInputError(f"channels {channels.shape}, beams {beams.shape} and xi {xi.shape} "
                                 "do not describe the same system")
    streams = beams.T
    return np.concatenate([channels.real.ravel(), channels.imag.ravel(),
                           streams.real.ravel(), streams.imag.ravel(), xi])


def batch_features(tape: Tape, channels: ComplexPair, beams: ComplexPair, xi: Tensor) -> Tensor:
    """
    The differentiable counterpart of build_features over a leading batch axis.

    :param tape: The Tape to record on
    :param channels: (B, K, N_t) channels
    :param beams: (B, N_t, K+1) beams
    :param xi: (B, K+1) dual variables
    :return: (B, D) features
    """
    batch = channels.shape[:-2]
    num_users, num_tx = channels.shape[-2:]
    if beams.shape != batch + (num_tx, num_users + 1) or xi.shape != batch + (num_users + 1,):
        raise RejectedInputError(f"channels {channels.shape}, beams {beams.shape} and xi {xi.shape} "
                                 "do not describe the same batch")

    def flatten(tensor: Tensor) -> Tensor:
        return tape.reshape(tensor, batch + (-1,))

    parts = [flatten(channels.real), flatten(channels.imag),
             flatten(tape.swapaxes(beams.real)), flatten(tape.swapaxes(beams.imag)), xi]
    return tape.concatenate(parts, axis=-1, name="features")
