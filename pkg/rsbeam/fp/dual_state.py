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

# Needed for DualState self-typing in the factory methods below
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from rsbeam.errors.rejected_input_error import RejectedInputError


SIMPLEX_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DualState:
    """
    Lagrangian multipliers of the slack-variable subproblem.

    lambdas weigh the per-user common-rate constraints and live on the
    open simplex.  mu prices the total power constraint and is on the
    natural-log scale of the surrogate, which is the scale the optimal
    beamforming structure is written in.

    The concatenation [lambdas, mu] is called xi throughout.
    """

    lambdas: np.ndarray
    mu: float

    def __post_init__(self):
        lambdas = np.asarray(self.lambdas, dtype=np.float64)
        if lambdas.ndim != 1 or lambdas.size < 1:
            raise RejectedInputError(f"lambdas must be a non-empty vector, got shape {lambdas.shape}")
        if not np.all(np.isfinite(lambdas)) or np.any(lambdas <= 0.0):
            raise RejectedInputError(f"lambdas must all be finite and > 0, got {lambdas}")
        if abs(float(np.sum(lambdas)) - 1.0) > SIMPLEX_TOLERANCE:
            raise RejectedInputError(f"lambdas must sum to 1, got {np.sum(lambdas)!r}")
        if not (np.isfinite(self.mu) and self.mu > 0.0):
            raise RejectedInputError(f"mu must be finite and > 0, got {self.mu}")

        object.__setattr__(self, "lambdas", lambdas)
        object.__setattr__(self, "mu", float(self.mu))

    @classmethod
    def uniform(cls, num_users: int, total_power: float) -> DualState:
        """
        :param num_users: K
        :param total_power: P_t
        :return: lambdas uniform on the simplex and mu = K / P_t
        """
        return cls(lambdas=np.full(num_users, 1.0 / num_users),
                   mu=num_users / total_power)

    @classmethod
    def from_xi(cls, xi) -> DualState:
        """
        :param xi: A vector [lambda_1 .. lambda_K, mu]
        :return: The corresponding DualState
        """
        xi = np.asarray(xi, dtype=np.float64)
        return cls(lambdas=xi[:-1], mu=float(xi[-1]))

    @property
    def xi(self) -> np.ndarray:
        """
        :return: The concatenated vector [lambdas, mu]
        """
        return np.append(self.lambdas, self.mu)

    @property
    def num_users(self) -> int:
        """
        :return: K
        """
        return self.lambdas.size
