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
Fractional programming surrogate of the 1-layer rate-splitting sum rate.

For stream i decoded at user k the surrogate is

    g_{i,k} = ln(1 + alpha) - alpha + 2 sqrt(1 + alpha) Re{conj(beta) h_k^H p_i}
              - |beta|^2 (sum_{j in {i} u K} |h_k^H p_j|^2 + sigma^2)

evaluated in nats and handed out in bits after a single division by ln 2.
With the nat form the surrogate is tight at the optimal auxiliary variables
and a lower bound on the rate everywhere else.  The union {i} u K is a set,
so for a private stream the desired beam is counted once.
"""

import math

from typing import Tuple

import numpy as np

from rsbeam.fp.aux_state import AuxState
from rsbeam.fp.dual_state import DualState
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.rate_calculator import stream_gains
from rsbeam.model.rate_calculator import validate_beams
from rsbeam.model.system_config import SystemConfig


LN2 = math.log(2.0)


def _denominators(gains: np.ndarray, noise_power: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    :param gains: K x (K+1) array of h_k^H p_i
    :param noise_power: sigma^2
    :return: (common, private) length-K arrays of the surrogate denominators
    """
    powers = np.abs(gains) ** 2
    private = np.sum(powers[:, 1:], axis=1) + noise_power
    common = private + powers[:, 0]
    return common, private


def update_aux(cfg: SystemConfig, sample: ChannelSample, beams: np.ndarray) -> AuxState:
    """
    Optimal auxiliary variables for fixed beams.

    :param cfg: The SystemConfig
    :param sample: The ChannelSample
    :param beams: N_t x (K+1) beam matrix
    :return: The AuxState maximizing the surrogate at these beams
    """
    beams = validate_beams(cfg, sample, beams)
    gains = stream_gains(sample.channels, beams)
    powers = np.abs(gains) ** 2
    common_total, private_total = _denominators(gains, cfg.noise_power)

    desired_gains = np.diagonal(gains[:, 1:])
    desired = np.abs(desired_gains) ** 2
    off_diagonal = 1.0 - np.eye(cfg.num_users)
    interference = np.sum(powers[:, 1:] * off_diagonal, axis=1) + cfg.noise_power

    alpha_common = powers[:, 0] / private_total
    alpha_private = desired / interference

    beta_common = np.sqrt(1.0 + alpha_common) * gains[:, 0] / common_total
    beta_private = np.sqrt(1.0 + alpha_private) * desired_gains / private_total

    return AuxState(alpha_common=alpha_common,
                    alpha_private=alpha_private,
                    beta_common=beta_common,
                    beta_private=beta_private)


def g_values_nats(cfg: SystemConfig, sample: ChannelSample, beams: np.ndarray,
                  aux: AuxState) -> Tuple[np.ndarray, np.ndarray]:
    """
    :param cfg: The SystemConfig
    :param sample: The ChannelSample
    :param beams: N_t x (K+1) beam matrix
    :param aux: The auxiliary variables
    :return: (g_common, g_private) length-K arrays in nats
    """
    beams = validate_beams(cfg, sample, beams)
    gains = stream_gains(sample.channels, beams)
    common_total, private_total = _denominators(gains, cfg.noise_power)

    desired_gains = np.diagonal(gains[:, 1:])

    g_common = (np.log1p(aux.alpha_common) - aux.alpha_common
                + 2.0 * np.sqrt(1.0 + aux.alpha_common) * np.real(np.conj(aux.beta_common) * gains[:, 0])
                - np.abs(aux.beta_common) ** 2 * common_total)
    g_private = (np.log1p(aux.alpha_private) - aux.alpha_private
                 + 2.0 * np.sqrt(1.0 + aux.alpha_private) * np.real(np.conj(aux.beta_private) * desired_gains)
                 - np.abs(aux.beta_private) ** 2 * private_total)
    return g_common, g_private


def g_values(cfg: SystemConfig, sample: ChannelSample, beams: np.ndarray,
             aux: AuxState) -> Tuple[np.ndarray, np.ndarray]:
    """
    :param cfg: The SystemConfig
    :param sample: The ChannelSample
    :param beams: N_t x (K+1) beam matrix
    :param aux: The auxiliary variables
    :return: (g_common, g_private) length-K arrays in bits
    """
    g_common, g_private = g_values_nats(cfg, sample, beams, aux)
    return g_common / LN2, g_private / LN2


def worst_common_g(cfg: SystemConfig, sample: ChannelSample, beams: np.ndarray,
                   aux: AuxState) -> float:
    """
    :return: min_k g_{0,k} in bits, the value the slack variable y takes
            at the optimum of the slack-variable subproblem
    """
    g_common, _ = g_values(cfg, sample, beams, aux)
    return float(np.min(g_common))


def fp_objective(cfg: SystemConfig, sample: ChannelSample, beams: np.ndarray,
                 aux: AuxState) -> float:
    """
    :param cfg: The SystemConfig
    :param sample: The ChannelSample
    :param beams: N_t x (K+1) beam matrix
    :param aux: The auxiliary variables
    :return: min_k g_{0,k} + sum_k g_k in bits
    """
    g_common, g_private = g_values(cfg, sample, beams, aux)
    return float(np.min(g_common) + np.sum(g_private))


def lagrangian_nats(cfg: SystemConfig, sample: ChannelSample, beams: np.ndarray,
                    aux: AuxState, duals: DualState) -> float:
    """
    Lagrangian of the slack-variable subproblem with the slack eliminated.
    Because the lambdas sum to one the y terms cancel, leaving

        sum_k g_k + sum_k lambda_k g_{0,k} - mu (trace(P P^H) - P_t)

    all in nats.  The optimal beamforming structure is its stationary point.

    :return: The Lagrangian value
    """
    g_common, g_private = g_values_nats(cfg, sample, beams, aux)
    used = float(np.vdot(beams, beams).real)
    return float(np.sum(g_private) + np.dot(duals.lambdas, g_common)
                 - duals.mu * (used - cfg.total_power))


def stationarity_residual(cfg: SystemConfig, sample: ChannelSample, beams: np.ndarray,
                          aux: AuxState, duals: DualState, step: float = 1e-6) -> float:
    """
    Central finite-difference gradient of lagrangian_nats with respect to the
    real and imaginary part of every beam entry.

    :param step: The finite-difference step
    :return: max |dL/dx| over all real coordinates, divided by
            max(1, max |P_ij|)
    """
    beams = np.asarray(beams, dtype=np.complex128)
    largest = 0.0
    for direction in (1.0, 1.0j):
        for index in np.ndindex(beams.shape):
            plus = beams.copy()
            minus = beams.copy()
            plus[index] += step * direction
            minus[index] -= step * direction
            derivative = (lagrangian_nats(cfg, sample, plus, aux, duals)
                          - lagrangian_nats(cfg, sample, minus, aux, duals)) / (2.0 * step)
            largest = max(largest, abs(derivative))
    scale = max(1.0, float(np.max(np.abs(beams))))
    return largest / scale
