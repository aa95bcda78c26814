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

from unittest import TestCase

import numpy as np

from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.fp.dual_state import DualState
from rsbeam.fp.hermitian_solver import HermitianFactorization
from rsbeam.fp.hermitian_solver import hermitian_solve


class TestDualState(TestCase):
    """
    Tests the dual variables and the Hermitian solver they feed.
    """

    def test_uniform(self):
        """
        Uniform lambdas and mu = K / P_t
        """
        duals = DualState.uniform(4, 8.0)
        np.testing.assert_allclose(duals.lambdas, 0.25)
        self.assertEqual(duals.mu, 0.5)
        np.testing.assert_allclose(duals.xi, [0.25, 0.25, 0.25, 0.25, 0.5])
        np.testing.assert_array_equal(DualState.from_xi(duals.xi).xi, duals.xi)

    def test_invariants(self):
        """
        Off-simplex lambdas and a non-positive mu are rejected
        """
        with self.assertRaises(RejectedInputError):
            DualState(lambdas=[0.5, 0.6], mu=1.0)
        with self.assertRaises(RejectedInputError):
            DualState(lambdas=[1.0, 0.0], mu=1.0)
        with self.assertRaises(RejectedInputError):
            DualState(lambdas=[1.0], mu=0.0)

    def test_hermitian_solve(self):
        """
        Single and stacked Hermitian systems are solved
        """
        rng = np.random.default_rng(5)
        factor = rng.standard_normal((3, 4, 4)) + 1j * rng.standard_normal((3, 4, 4))
        matrices = factor @ np.conj(np.swapaxes(factor, -1, -2)) + np.eye(4)
        rhs = rng.standard_normal((3, 4, 2)) + 1j * rng.standard_normal((3, 4, 2))

        stacked = hermitian_solve(matrices, rhs)
        np.testing.assert_allclose(matrices @ stacked, rhs, atol=1e-10)

        single = HermitianFactorization(matrices[1]).solve(rhs[1])
        np.testing.assert_allclose(single, stacked[1], atol=1e-10)

    def test_not_positive_definite(self):
        """
        An indefinite matrix is rejected
        """
        with self.assertRaises(RejectedInputError):
            hermitian_solve(np.diag([1.0, -1.0]), np.ones((2, 1)))
