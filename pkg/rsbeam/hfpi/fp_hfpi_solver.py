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

import logging
import time

from typing import Tuple

import numpy as np

from rsbeam.fp.dual_state import DualState
from rsbeam.fp.fractional_transform import fp_objective
from rsbeam.fp.fractional_transform import update_aux
from rsbeam.hfpi.beamformer_initializer import init_beamformers
from rsbeam.hfpi.hfpi_config import HfpiConfig
from rsbeam.hfpi.hfpi_config import RELATIVE
from rsbeam.hfpi.hyperplane_fixed_point import hfpi_inner_loop
from rsbeam.hfpi.solve_diagnostics import SolveDiagnostics
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.rate_calculator import power_used
from rsbeam.model.rate_calculator import rate_report
from rsbeam.model.rate_report import RateReport
from rsbeam.model.system_config import SystemConfig


SR_GUARD = 1e-12


class FpHfpiSolver:
    """
    The model-based two-loop solver.

    Each AO iteration refreshes the auxiliary variables at the current beams,
    runs the HFPI inner loop to get the dual variables for that surrogate,
    and takes the optimal beamforming structure at those duals, scaled onto
    the power budget, as the next beams.  Duals are warm-started from one
    AO iteration to the next.

    A solve only counts as converged when the outer loop met its tolerance
    and the inner loop of the last AO iteration converged too.
    """

    def __init__(self, hcfg: HfpiConfig = None):
        """
        Constructor.

        :param hcfg: The HfpiConfig. Default of None uses HfpiConfig() defaults.
        """
        self.hcfg = hcfg
        if self.hcfg is None:
            self.hcfg = HfpiConfig()

    def solve(self, cfg: SystemConfig,
              sample: ChannelSample) -> Tuple[np.ndarray, RateReport, SolveDiagnostics]:
        """
        :param cfg: The SystemConfig
        :param sample: The ChannelSample
        :return: A tuple of (beams, RateReport, SolveDiagnostics).
                The beams use exactly the power budget.
        """
        logger = logging.getLogger(__name__)
        start = time.perf_counter()
        hcfg = self.hcfg
        diagnostics = SolveDiagnostics()

        beams = init_beamformers(cfg, sample)
        duals = DualState.uniform(cfg.num_users, cfg.total_power)
        previous_sr = rate_report(cfg, sample, beams).sum_rate

        outer_converged = False
        while diagnostics.outer_iters < hcfg.max_outer:
            aux = update_aux(cfg, sample, beams)
            inner = hfpi_inner_loop(cfg, sample, aux, duals, hcfg)
            duals = inner.duals
            beams = self.scale_to_budget(inner.beams, cfg.total_power)

            diagnostics.outer_iters += 1
            diagnostics.inner_iters_per_outer.append(inner.iters)
            if not inner.converged:
                diagnostics.inner_failures += 1
            if diagnostics.first_duals is None:
                diagnostics.first_duals = duals
                diagnostics.first_inner_converged = inner.converged
            diagnostics.last_inner_converged = inner.converged

            diagnostics.objective_trace.append(fp_objective(cfg, sample, beams,
                                                            update_aux(cfg, sample, beams)))
            current_sr = rate_report(cfg, sample, beams).sum_rate
            if self.sum_rate_change(previous_sr, current_sr) < hcfg.outer_tol:
                outer_converged = True
                break
            previous_sr = current_sr

        diagnostics.converged = outer_converged and diagnostics.last_inner_converged
        if not outer_converged:
            logger.info("FP-HFPI stopped at max_outer=%d without converging", hcfg.max_outer)
        elif not diagnostics.last_inner_converged:
            logger.info("FP-HFPI outer loop settled but its last inner loop did not converge")

        report = rate_report(cfg, sample, beams)

        diagnostics.final_duals = duals
        diagnostics.final_sr = report.sum_rate
        diagnostics.wall_time = time.perf_counter() - start
        return beams, report, diagnostics

    def sum_rate_change(self, previous_sr: float, current_sr: float) -> float:
        """
        :return: The change of the sum rate the outer_metric of the HfpiConfig asks for
        """
        change = abs(current_sr - previous_sr)
        if self.hcfg.outer_metric == RELATIVE:
            change /= max(previous_sr, SR_GUARD)
        return change

    @staticmethod
    def scale_to_budget(beams: np.ndarray, total_power: float) -> np.ndarray:
        """
        :param beams: A beam matrix
        :param total_power: P_t
        :return: The beams scaled so that trace(P P^H) == P_t.
                All-zero beams come back unchanged.
        """
        used = power_used(beams)
        if used <= 0.0:
            return beams
        return beams * np.sqrt(total_power / used)


def fp_hfpi_solve(cfg: SystemConfig, sample: ChannelSample,
                  hcfg: HfpiConfig = None) -> Tuple[np.ndarray, RateReport, SolveDiagnostics]:
    """
    Functional entry point, see FpHfpiSolver.solve().
    """
    return FpHfpiSolver(hcfg).solve(cfg, sample)
