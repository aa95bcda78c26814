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

from rsbeam.errors.rejected_input_error import RejectedInputError


DUAL_RESIDUAL = "dual-residual"
RELATIVE = "relative"
ABSOLUTE = "absolute"

INNER_METRICS = (DUAL_RESIDUAL, RELATIVE)
OUTER_METRICS = (ABSOLUTE, RELATIVE)


@dataclass(frozen=True)
class HfpiConfig:
    """
    Knobs of the two-loop FP-HFPI solver.

    rho damps the multiplicative dual updates.  The inner loop ends once its
    inner_metric falls below inner_tol: "dual-residual" is the mu-weighted
    power-constraint violation plus the lambda mass moved by the last step,
    "relative" the largest relative change of xi = [lambda, mu].  The outer
    loop ends once the change of the sum rate between AO iterations falls
    below outer_tol, in bits for "absolute" or relative for "relative".
    The iteration caps are safety nets only.
    """

    rho: float = 0.1
    inner_tol: float = 1e-5
    outer_tol: float = 1e-4
    max_inner: int = 1000
    max_outer: int = 2000
    inner_metric: str = DUAL_RESIDUAL
    outer_metric: str = ABSOLUTE

    def __post_init__(self):
        if self.rho < 0.0:
            raise RejectedInputError(f"rho must be >= 0, got {self.rho}")
        if not (self.inner_tol > 0.0 and self.outer_tol > 0.0):
            raise RejectedInputError("Tolerances must be > 0")
        if self.max_inner < 1 or self.max_outer < 1:
            raise RejectedInputError("Iteration caps must be >= 1")
        if self.inner_metric not in INNER_METRICS:
            raise RejectedInputError(f"inner_metric must be one of {INNER_METRICS}, got {self.inner_metric!r}")
        if self.outer_metric not in OUTER_METRICS:
            raise RejectedInputError(f"outer_metric must be one of {OUTER_METRICS}, got {self.outer_metric!r}")
