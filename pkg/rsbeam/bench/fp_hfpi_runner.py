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

from typing import Any
from typing import Dict
from typing import List

import numpy as np

from rsbeam.bench.complexity import FP_HFPI
from rsbeam.bench.complexity import complexity_estimate
from rsbeam.bench.scheme_runner import SchemeRunner
from rsbeam.hfpi.fp_hfpi_solver import FpHfpiSolver
from rsbeam.hfpi.hfpi_config import HfpiConfig
from rsbeam.hfpi.solve_diagnostics import SolveDiagnostics
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.system_config import SystemConfig


class FpHfpiRunner(SchemeRunner):
    """
    Runs the model-based solver and keeps its iteration statistics.
    """

    def __init__(self, hcfg: HfpiConfig = None):
        """
        Constructor.

        :param hcfg: The HfpiConfig. Default of None uses the defaults.
        """
        self._solver = FpHfpiSolver(hcfg)
        self._diagnostics: List[SolveDiagnostics] = []

    @property
    def name(self) -> str:
        return FP_HFPI

    def solve(self, cfg: SystemConfig, sample: ChannelSample) -> np.ndarray:
        beams, _, diagnostics = self._solver.solve(cfg, sample)
        self._diagnostics.append(diagnostics)
        return beams

    @property
    def diagnostics(self) -> List[SolveDiagnostics]:
        """
        :return: The SolveDiagnostics of every solve() since reset(), in order
        """
        return list(self._diagnostics)

    def reset(self):
        self._diagnostics = []

    def summary(self, cfg: SystemConfig) -> Dict[str, Any]:
        outer = float(np.mean([one.outer_iters for one in self._diagnostics])) if self._diagnostics else 0.0
        inner = float(np.mean([one.mean_inner_iters for one in self._diagnostics])) if self._diagnostics else 0.0
        not_converged = sum(1 for one in self._diagnostics if not one.converged)
        return {
            "mean_outer_iters": round(outer, 3),
            "mean_inner_iters": round(inner, 3),
            "not_converged": not_converged,
            "complexity": complexity_estimate(FP_HFPI, cfg.num_users, cfg.num_tx_antennas,
                                              outer_iters=outer, inner_iters=inner),
        }
