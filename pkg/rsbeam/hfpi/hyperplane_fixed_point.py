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
Hyperplane fixed-point iteration for the dual variables.

Each step moves lambda mass toward the user with the worst common-stream
surrogate and rescales mu by how far the used power is from the budget:

    lambda_k   <- (h_min + rho) / (h_k + rho) * lambda_k             k != k_min
    lambda_min <- lambda_min + sum_k (1 - (h_min + rho) / (h_k + rho)) lambda_k
    mu         <- (trace(P P^H) + rho) / (P_t + rho) * mu

The lambda update keeps the simplex sum by construction.  The inner loop
hands the step surrogates shifted by shift_surrogates(), so h + rho stays
positive whenever rho > 0.
"""

import logging

from dataclasses import dataclass

import numpy as np

from rsbeam.fp.aux_state import AuxState
from rsbeam.fp.dual_state import DualState
from rsbeam.fp.fractional_transform import g_values_nats
from rsbeam.fp.optimal_beamforming_structure import obs_beamformers
from rsbeam.hfpi.hfpi_config import HfpiConfig
from rsbeam.hfpi.hfpi_config import RELATIVE
from rsbeam.hfpi.hfpi_step_error import HfpiStepError
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.rate_calculator import power_used
from rsbeam.model.system_config import SystemConfig


# Keeps a lambda that keeps losing mass from underflowing to exactly zero
LAMBDA_FLOOR = np.finfo(np.float64).tiny

RELATIVE_CHANGE_GUARD = 1e-12


@dataclass(frozen=True)
class InnerLoopResult:
    """
    Outcome of one HFPI inner loop.
    """

    duals: DualState
    beams: np.ndarray
    iters: int
    converged: bool


def hfpi_step(duals: DualState, g_common: np.ndarray, used_power: float,
              total_power: float, rho: float) -> DualState:
    """
    :param duals: The current dual variables
    :param g_common: length-K common-stream surrogate values at the current beams
    :param used_power: trace(P P^H) of the current beams
    :param total_power: P_t
    :param rho: The damping constant
    :return: The updated DualState
    """
    g_common = np.asarray(g_common, dtype=np.float64)
    shifted = g_common + rho
    not_positive = np.flatnonzero(~(shifted > 0.0))
    if not_positive.size > 0:
        index = int(not_positive[0])
        raise HfpiStepError(index, float(shifted[index]))

    # np.argmin breaks ties toward the lowest index
    worst = int(np.argmin(g_common))
    ratios = shifted[worst] / shifted

    old_lambdas = duals.lambdas
    lambdas = ratios * old_lambdas
    lambdas[worst] = old_lambdas[worst] + np.sum((1.0 - ratios) * old_lambdas)
    lambdas = np.maximum(lambdas, LAMBDA_FLOOR)

    mu = (used_power + rho) / (total_power + rho) * duals.mu
    return DualState(lambdas=lambdas, mu=mu)


def shift_surrogates(g_common: np.ndarray) -> np.ndarray:
    """
    Moves the surrogate values up so that none is negative while keeping
    their order: g - min(g) + |min(g)|.  Values that are already all
    non-negative come back unchanged.

    :param g_common: length-K common-stream surrogate values
    :return: The shifted values
    """
    g_common = np.asarray(g_common, dtype=np.float64)
    lowest = float(np.min(g_common))
    return g_common - lowest + abs(lowest)


def relative_change(old_xi: np.ndarray, new_xi: np.ndarray) -> float:
    """
    :return: max_j |new_j - old_j| / (|old_j| + 1e-12)
    """
    return float(np.max(np.abs(new_xi - old_xi) / (np.abs(old_xi) + RELATIVE_CHANGE_GUARD)))


def dual_residual(old: DualState, new: DualState, used_power: float, total_power: float) -> float:
    """
    How far the duals are from the fixed point: the power-constraint
    violation weighted by mu plus the lambda mass moved by the step.

    :param old: The duals before a step
    :param new: The duals after it
    :param used_power: trace(P P^H) of the beams the step was taken at
    :param total_power: P_t
    :return: |used / P_t - 1| * mu_new + 0.5 * ||lambda_new - lambda_old||_1
    """
    moved = 0.5 * float(np.sum(np.abs(new.lambdas - old.lambdas)))
    return abs(used_power / total_power - 1.0) * new.mu + moved


def hfpi_inner_loop(cfg: SystemConfig, sample: ChannelSample, aux: AuxState,
                    duals_init: DualState, hcfg: HfpiConfig) -> InnerLoopResult:
    """
    Alternates the optimal beamforming structure with HFPI steps until xi settles.
    The nat-valued surrogates go through shift_surrogates() before each step, so a
    negative g only lowers that user's weight instead of ending the loop.

    :param cfg: The SystemConfig
    :param sample: The ChannelSample
    :param aux: The auxiliary variables, fixed for the whole loop
    :param duals_init: Where the dual variables start
    :param hcfg: The HfpiConfig
    :return: An InnerLoopResult whose beams are the structure at the returned duals
    """
    logger = logging.getLogger(__name__)

    duals = duals_init
    converged = False
    iters = 0
    while iters < hcfg.max_inner:
        iters += 1
        beams = obs_beamformers(cfg, sample, aux, duals)
        g_common, _ = g_values_nats(cfg, sample, beams, aux)
        used = power_used(beams)
        try:
            updated = hfpi_step(duals, shift_surrogates(g_common), used, cfg.total_power, hcfg.rho)
        except HfpiStepError as exception:
            # Only reachable with rho == 0 and a zero shifted surrogate
            logger.warning("Stopping inner loop after %d iterations: %s", iters, str(exception))
            return InnerLoopResult(duals=duals, beams=beams, iters=iters, converged=False)

        if hcfg.inner_metric == RELATIVE:
            change = relative_change(duals.xi, updated.xi)
        else:
            change = dual_residual(duals, updated, used, cfg.total_power)
        duals = updated
        if change < hcfg.inner_tol:
            converged = True
            break

    if not converged:
        logger.debug("Inner loop hit max_inner=%d without converging", hcfg.max_inner)

    beams = obs_beamformers(cfg, sample, aux, duals)
    return InnerLoopResult(duals=duals, beams=beams, iters=iters, converged=converged)
