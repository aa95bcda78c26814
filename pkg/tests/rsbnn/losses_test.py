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

from rsbeam.autodiff.gradient import gradient
from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.model.system_config import SystemConfig
from rsbeam.rsbnn.losses import supervised_loss
from rsbeam.rsbnn.unfold_config import UnfoldConfig
from rsbeam.rsbnn.unfold_model import UnfoldModel
from rsbeam.rsbnn.unfold_trace import UnfoldTrace
from rsbeam.rsbnn.unfolded_network import unfold_forward


def trace_of(*xis: np.ndarray) -> UnfoldTrace:
    """
    :return: An UnfoldTrace holding the given dual variables as leaves, without beams
    """
    return UnfoldTrace(xis=[Tensor(xi, requires_grad=True, name=f"xi{index}") for index, xi in enumerate(xis)],
                       beams=[])


class LossesTest(TestCase):
    """
    Tests the label-matching loss on its own and through the network.
    """

    def test_supervised_loss_zero_at_labels(self):
        """
        Predictions equal to the labels cost nothing, whatever the middle layers do
        """
        first = np.array([[0.25, 0.75, 0.3]])
        last = np.array([[0.6, 0.4, 0.1]])
        loss = supervised_loss(Tape(), trace_of(first, np.array([[0.9, 0.1, 5.0]]), last), first, last)
        self.assertEqual(loss.item(), 0.0)

    def test_supervised_loss_example(self):
        """
        The first layer off by 0.1 in one coordinate, the last one exact: 0.01
        """
        labels = np.array([[0.5, 0.5, 0.2]])
        first = labels + np.array([[0.0, 0.0, 0.1]])
        loss = supervised_loss(Tape(), trace_of(first, labels), labels, labels)
        self.assertAlmostEqual(loss.item(), 0.01, places=14)

    def test_supervised_loss_gradient(self):
        """
        The gradient at the last layer is 2 (xi - label) divided by the batch size
        """
        rng = np.random.default_rng(0)
        first_labels = rng.uniform(size=(3, 4))
        last_labels = rng.uniform(size=(3, 4))
        trace = trace_of(rng.uniform(size=(3, 4)), rng.uniform(size=(3, 4)))
        tape = Tape()
        loss = supervised_loss(tape, trace, first_labels, last_labels)
        first_grad, last_grad = gradient(tape, loss, [trace.first_xi, trace.last_xi])
        np.testing.assert_allclose(last_grad.values, 2.0 * (trace.last_xi.values - last_labels) / 3.0,
                                   rtol=1e-12)
        np.testing.assert_allclose(first_grad.values, 2.0 * (trace.first_xi.values - first_labels) / 3.0,
                                   rtol=1e-12)

    def test_supervised_loss_finite_difference(self):
        """
        Through a two-layer model the gradient of every first and last output bias
        agrees with a central difference
        """
        cfg = SystemConfig.from_snr_db(num_tx_antennas=2, num_users=2, snr_db=10.0)
        model = UnfoldModel.initialize(2, 2, UnfoldConfig(num_layers=2, hidden_dim=8), seed=3)
        rng = np.random.default_rng(1)
        channels = rng.standard_normal((3, 2, 2)) + 1j * rng.standard_normal((3, 2, 2))
        xi_first = np.tile([0.4, 0.6, 0.5], (3, 1))
        xi_last = np.tile([0.7, 0.3, 0.2], (3, 1))

        def loss_value() -> float:
            tape = Tape(record=False)
            trace = unfold_forward(tape, model, cfg, channels)
            return supervised_loss(tape, trace, xi_first, xi_last).item()

        for network in (model.networks[0], model.networks[-1]):
            bias = network.parameters()[-1]
            tape = Tape()
            trace = unfold_forward(tape, model, cfg, channels)
            loss = supervised_loss(tape, trace, xi_first, xi_last)
            analytic = gradient(tape, loss, [bias])[0].values

            step = 1e-6
            for index in range(bias.values.size):
                original = bias.values[index]
                bias.values[index] = original + step
                plus = loss_value()
                bias.values[index] = original - step
                minus = loss_value()
                bias.values[index] = original
                numeric = (plus - minus) / (2.0 * step)
                self.assertAlmostEqual(analytic[index], numeric, delta=1e-5 * max(1.0, abs(numeric)))
