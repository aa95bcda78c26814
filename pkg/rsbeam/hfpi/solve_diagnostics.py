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

from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Dict
from typing import List

import numpy as np

from rsbeam.fp.dual_state import DualState


@dataclass
class SolveDiagnostics:
    """
    What happened during one FP-HFPI solve.

    objective_trace holds the FP objective after every AO iteration and
    inner_iters_per_outer the inner-loop count of each, so both have
    outer_iters entries.  converged needs both the outer tolerance and a
    converged last inner loop.  The duals of the first and last AO iterations
    are only fit to be labels when their inner loops converged.
    """

    outer_iters: int = 0
    inner_iters_per_outer: List[int] = field(default_factory=list)
    final_sr: float = 0.0
    objective_trace: List[float] = field(default_factory=list)
    wall_time: float = 0.0
    converged: bool = False
    inner_failures: int = 0
    first_inner_converged: bool = False
    last_inner_converged: bool = False
    first_duals: DualState = None
    final_duals: DualState = None

    @property
    def mean_inner_iters(self) -> float:
        """
        :return: The average inner-loop iteration count, 0 if nothing ran
        """
        if not self.inner_iters_per_outer:
            return 0.0
        return float(np.mean(self.inner_iters_per_outer))

    @property
    def labels_usable(self) -> bool:
        """
        :return: True if first_duals and final_duals can serve as training labels
        """
        return self.converged and self.first_inner_converged and self.last_inner_converged

    def to_row(self) -> Dict[str, Any]:
        """
        :return: A flat dictionary suitable for a CSV row
        """
        return {
            "outer_iters": self.outer_iters,
            "mean_inner_iters": self.mean_inner_iters,
            "final_sr": self.final_sr,
            "wall_time_s": self.wall_time,
            "converged": self.converged,
            "inner_failures": self.inner_failures,
            "labels_usable": self.labels_usable,
        }
