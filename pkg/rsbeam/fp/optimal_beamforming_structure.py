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
Closed-form beamformers from auxiliary and dual variables.

    p_0 = (sum_j lambda_j |beta_{0,j}|^2 h_j h_j^H + mu I)^-1
              sum_j sqrt(1 + alpha_{0,j}) beta_{0,j} lambda_j h_j
    p_k = (sum_j (|beta_j|^2 + lambda_j |beta_{0,j}|^2) h_j h_j^H + mu I)^-1
              sqrt(1 + alpha_k) beta_k h_k
"""

import numpy as np

from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.fp.aux_state import AuxState
from rsbeam.fp.dual_state import DualState
from rsbeam.fp.hermitian_solver import hermitian_solve
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.system_config import SystemConfig


def weighted_gram(channels: np.ndarray, weights: np.ndarray, mu: float) -> np.ndarray:
    """
    :param channels: K x N_t channels, h_k in row k
    :param weights: length-K real weights c_j
    :param mu: The diagonal loading
    :return: sum_j c_j h_j h_j^H + mu I
    """
    num_tx = channels.shape[1]
    gram = channels.T @ (weights[:, np.newaxis] * np.conj(channels))
    return gram + mu * np.eye(num_tx)


def obs_beamformers(cfg: SystemConfig, sample: ChannelSample, aux: AuxState,
                    duals: DualState) -> np.ndarray:
    """
    :param cfg: The SystemConfig
    :param sample: The ChannelSample
    :param aux: The auxiliary variables
    :param duals: The dual variables
    :return: The N_t x (K+1) beam matrix of the optimal beamforming structure
    """
    if not duals.mu > 0.0:
        raise RejectedInputError(f"mu must be > 0 for the structure to be well defined, got {duals.mu}")
    if duals.num_users != cfg.num_users or sample.num_users != cfg.num_users:
        raise RejectedInputError("duals, channels and config disagree on the number of users")

    channels = sample.channels
    lambdas = duals.lambdas
    common_power = np.abs(aux.beta_common) ** 2
    private_power = np.abs(aux.beta_private) ** 2

    common_matrix = weighted_gram(channels, lambdas * common_power, duals.mu)
    common_weights = np.sqrt(1.0 + aux.alpha_common) * aux.beta_common * lambdas
    common_rhs = channels.T @ common_weights

    private_matrix = weighted_gram(channels, private_power + lambdas * common_power, duals.mu)
    private_weights = np.sqrt(1.0 + aux.alpha_private) * aux.beta_private
    private_rhs = channels.T * private_weights[np.newaxis, :]

    beams = np.empty((cfg.num_tx_antennas, cfg.num_streams), dtype=np.complex128)
    beams[:, 0] = hermitian_solve(common_matrix, common_rhs[:, np.newaxis])[:, 0]
    beams[:, 1:] = hermitian_solve(private_matrix, private_rhs)
    return beams
