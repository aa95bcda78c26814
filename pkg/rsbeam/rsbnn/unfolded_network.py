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
Forward pass of the unfolded network.

    xi^[0] = F_0(H, P^[0], xi_uniform)
    for l = 1..L:
        aux    = update_aux(P^[l-1])
        xi^[l] = normalize(F_l(H, P^[l-1], xi^[l-1]))
        P^[l]  = rectify(OBS(aux, xi^[l]))

P^[0] is the warm start FP-HFPI uses as well.
"""

from typing import Tuple

import numpy as np

from rsbeam.autodiff.complex_pair import ComplexPair
from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.hfpi.beamformer_initializer import batch_init_beamformers
from rsbeam.model.rate_calculator import power_used
from rsbeam.model.system_config import SystemConfig
from rsbeam.rsbnn.dense_network import DenseNetwork
from rsbeam.rsbnn.feature_builder import batch_features
from rsbeam.rsbnn import unfolded_blocks
from rsbeam.rsbnn.unfold_model import UnfoldModel
from rsbeam.rsbnn.unfold_trace import UnfoldTrace


MU_FLOOR = 1e-6


def layer_forward(tape: Tape, network: DenseNetwork, channels: ComplexPair,
                  beams: ComplexPair, xi: Tensor) -> Tuple[Tensor, Tensor]:
    """
    :param tape: The Tape to record on
    :param network: The layer's DenseNetwork
    :param channels: (B, K, N_t) channels
    :param beams: (B, N_t, K+1) beams of the previous layer
    :param xi: (B, K+1) dual variables of the previous layer
    :return: A tuple of (B, K) raw lambdas in (0, 1) and (B,) positive mu
    """
    num_users = channels.shape[-2]
    outputs = network.forward(tape, batch_features(tape, channels, beams, xi))
    raw_lambdas = tape.sigmoid(tape.getitem(outputs, (Ellipsis, slice(0, num_users))), name="raw_lambda")
    mu = tape.add(tape.abs(tape.getitem(outputs, (Ellipsis, num_users))), MU_FLOOR, name="mu")
    return raw_lambdas, mu


def layer_xi(tape: Tape, network: DenseNetwork, channels: ComplexPair, beams: ComplexPair,
             xi: Tensor, epsilon: float) -> Tensor:
    """
    :return: (B, K+1) normalized [lambda, mu] of one layer
    """
    raw_lambdas, mu = layer_forward(tape, network, channels, beams, xi)
    lambdas = unfolded_blocks.normalize_lambda(tape, raw_lambdas, epsilon)
    return tape.concatenate([lambdas, tape.reshape(mu, mu.shape + (1,))], axis=-1, name="xi")


def uniform_xi(num_users: int, total_power: float) -> np.ndarray:
    """
    :return: (1/K, ..., 1/K, K/P_t), the dual variables layer 0 starts from
    """
    return np.append(np.full(num_users, 1.0 / num_users), num_users / total_power)


def unfold_forward(tape: Tape, model: UnfoldModel, cfg: SystemConfig, channels: np.ndarray) -> UnfoldTrace:
    """
    :param tape: The Tape to record on; a non-recording Tape for inference
    :param model: The UnfoldModel
    :param cfg: The SystemConfig; its K and N_t must match the model
    :param channels: (B, K, N_t) complex channels
    :return: The UnfoldTrace with L+1 dual variables and beams
    """
    channels = np.asarray(channels, dtype=np.complex128)
    if (model.num_users, model.num_tx_antennas) != (cfg.num_users, cfg.num_tx_antennas):
        raise RejectedInputError(f"Model is for K={model.num_users}, N_t={model.num_tx_antennas}; "
                                 f"config has K={cfg.num_users}, N_t={cfg.num_tx_antennas}")
    if channels.ndim != 3 or channels.shape[1:] != (cfg.num_users, cfg.num_tx_antennas):
        raise RejectedInputError(f"Expected channels of shape (B, {cfg.num_users}, {cfg.num_tx_antennas}), "
                                 f"got {channels.shape}")

    batch = channels.shape[0]
    epsilon = model.ucfg.epsilon
    channel_pair = ComplexPair.from_complex(channels, name="channels")
    beams = ComplexPair.from_complex(batch_init_beamformers(channels, cfg.total_power), name="beams0")
    start = tape.constant(np.tile(uniform_xi(cfg.num_users, cfg.total_power), (batch, 1)), name="xi_uniform")

    xi = layer_xi(tape, model.networks[0], channel_pair, beams, start, epsilon)
    xis = [xi]
    all_beams = [beams]
    for network in model.networks[1:]:
        aux = unfolded_blocks.update_aux(tape, channel_pair, beams, cfg.noise_power,
                                         detach=model.ucfg.detach_aux)
        xi = layer_xi(tape, network, channel_pair, beams, xi, epsilon)
        lambdas = tape.getitem(xi, (Ellipsis, slice(0, cfg.num_users)))
        mu = tape.getitem(xi, (Ellipsis, cfg.num_users))
        structured = unfolded_blocks.obs_beamformers(tape, channel_pair, aux, lambdas, mu)
        beams = unfolded_blocks.rectify_power(tape, structured, cfg.total_power)
        xis.append(xi)
        all_beams.append(beams)

    return UnfoldTrace(xis=xis, beams=all_beams)


def unfold_infer(model: UnfoldModel, cfg: SystemConfig, channels: np.ndarray) -> np.ndarray:
    """
    :param channels: (B, K, N_t) complex channels
    :return: (B, N_t, K+1) beams of the last layer, without recording gradients
    """
    trace = unfold_forward(Tape(record=False), model, cfg, channels)
    return trace.final_beams.to_complex()


def normalize_lambda(raw_lambdas: np.ndarray, epsilon: float) -> np.ndarray:
    """
    Single-sample numpy reference of unfolded_blocks.normalize_lambda.
    The forward pass does not call it; tests hold the layer against it.

    :param raw_lambdas: K non-negative values
    :param epsilon: The floor, > 0
    :return: (raw + eps) / (sum(raw) + K eps)
    """
    raw_lambdas = np.asarray(raw_lambdas, dtype=np.float64)
    return (raw_lambdas + epsilon) / (np.sum(raw_lambdas) + raw_lambdas.size * epsilon)


def rectify_power(beams: np.ndarray, total_power: float) -> np.ndarray:
    """
    Single-sample numpy reference of unfolded_blocks.rectify_power,
    kept for checking the layer outside a Tape.

    :param beams: A non-zero complex beam matrix
    :param total_power: P_t
    :return: beams scaled so that trace(P P^H) = P_t
    """
    used = power_used(beams)
    if used == 0.0:
        raise RejectedInputError("Cannot rescale an all-zero beam matrix to the power budget")
    return np.sqrt(total_power / used) * np.asarray(beams, dtype=np.complex128)
