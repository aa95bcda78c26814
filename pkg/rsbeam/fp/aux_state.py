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

# Needed for AuxState self-typing in zeros() below
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from rsbeam.errors.rejected_input_error import RejectedInputError


@dataclass(frozen=True)
class AuxState:
    """
    The auxiliary variables of the fractional programming transform.

    The alphas stand in for the SINRs, the betas decouple the ratios.
    The common stream keeps one (alpha, beta) per decoding user;
    private stream k only ever needs the pair for user k.
    """

    alpha_common: np.ndarray
    alpha_private: np.ndarray
    beta_common: np.ndarray
    beta_private: np.ndarray

    def __post_init__(self):
        alpha_common = np.asarray(self.alpha_common, dtype=np.float64)
        alpha_private = np.asarray(self.alpha_private, dtype=np.float64)
        beta_common = np.asarray(self.beta_common, dtype=np.complex128)
        beta_private = np.asarray(self.beta_private, dtype=np.complex128)

        for alphas in (alpha_common, alpha_private):
            if not np.all(np.isfinite(alphas)) or np.any(alphas < 0.0):
                raise RejectedInputError("alpha values must be finite and >= 0")
        for betas in (beta_common, beta_private):
            if not np.all(np.isfinite(betas)):
                raise RejectedInputError("beta values must be finite")

        object.__setattr__(self, "alpha_common", alpha_common)
        object.__setattr__(self, "alpha_private", alpha_private)
        object.__setattr__(self, "beta_common", beta_common)
        object.__setattr__(self, "beta_private", beta_private)

    @classmethod
    def zeros(cls, num_users: int) -> AuxState:
        """
        :param num_users: K
        :return: An AuxState with every variable zero
        """
        return cls(alpha_common=np.zeros(num_users),
                   alpha_private=np.zeros(num_users),
                   beta_common=np.zeros(num_users, dtype=np.complex128),
                   beta_private=np.zeros(num_users, dtype=np.complex128))
