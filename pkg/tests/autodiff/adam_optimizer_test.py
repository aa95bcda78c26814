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

from rsbeam.autodiff.adam_optimizer import AdamOptimizer
from rsbeam.autodiff.adam_optimizer import adam_step
from rsbeam.autodiff.adam_state import AdamState
from rsbeam.autodiff.gradient import gradient
from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.rejected_input_error import RejectedInputError


class AdamOptimizerTest(TestCase):
    """
    Tests the bias-corrected Adam update.
    """

    def test_first_step_moves_by_learning_rate(self):
        """
        After bias correction the first step is lr * sign(grad)
        """
        params = [np.array([1.0, -2.0, 0.5])]
        grads = [np.array([0.3, -4.0, 1e-3])]
        new_params, state = adam_step(params, grads, AdamState.zeros_like(params), learning_rate=0.01)
        np.testing.assert_allclose(new_params[0], params[0] - 0.01 * np.sign(grads[0]), atol=1e-6)
        self.assertEqual(state.step, 1)
        np.testing.assert_array_equal(params[0], [1.0, -2.0, 0.5])

    def test_minimizes_quadratic(self):
        """
        AdamOptimizer drives a quadratic to its minimum
        """
        target = np.array([1.5, -0.5])
        weight = Tensor(np.zeros(2), requires_grad=True)
        optimizer = AdamOptimizer([weight], learning_rate=0.01)
        for _ in range(3000):
            tape = Tape()
            difference = tape.subtract(weight, target)
            loss = tape.sum(tape.multiply(difference, difference))
            optimizer.step(gradient(tape, loss, [weight]))
        np.testing.assert_allclose(weight.values, target, atol=1e-2)
        self.assertEqual(optimizer.state.step, 3000)

    def test_rejects_bad_input(self):
        """
        Length and shape mismatches and a non-positive learning rate are rejected
        """
        params = [np.zeros(2)]
        with self.assertRaises(RejectedInputError):
            adam_step(params, [np.zeros(3)], AdamState.zeros_like(params), 0.1)
        with self.assertRaises(RejectedInputError):
            adam_step(params, [], AdamState.zeros_like(params), 0.1)
        with self.assertRaises(RejectedInputError):
            AdamOptimizer([Tensor(np.zeros(2))], learning_rate=0.0)
