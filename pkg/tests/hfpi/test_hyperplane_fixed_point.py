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

from rsbeam.fp.dual_state import DualState
from rsbeam.fp.fractional_transform import g_values
from rsbeam.fp.fractional_transform import stationarity_residual
from rsbeam.fp.fractional_transform import update_aux
from rsbeam.hfpi.beamformer_initializer import init_beamformers
from rsbeam.hfpi.hfpi_config import HfpiConfig
from rsbeam.hfpi.hfpi_step_error import HfpiStepError
from rsbeam.hfpi.hyperplane_fixed_point import dual_residual
from rsbeam.hfpi.hyperplane_fixed_point import hfpi_inner_loop
from rsbeam.hfpi.hyperplane_fixed_point import hfpi_step
from rsbeam.hfpi.hyperplane_fixed_point import relative_change
from rsbeam.hfpi.hyperplane_fixed_point import shift_surrogates
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.rate_calculator import power_used
from rsbeam.model.system_config import SystemConfig


class TestHyperplaneFixedPoint(TestCase):
    """
    Tests the dual update and the inner loop built on it.
    """

    def test_equal_g_keeps_lambdas(self):
        """
        All g_common equal: lambda unchanged.  used power = P_t: mu unchanged
        """
        duals = DualState(lambdas=[0.2, 0.3, 0.5], mu=0.7)
        updated = hfpi_step(duals, np.array([1.5, 1.5, 1.5]), used_power=4.0, total_power=4.0, rho=0.1)
        np.testing.assert_allclose(updated.lambdas, duals.lambdas, rtol=1e-15)
        self.assertEqual(updated.mu, duals.mu)

    def test_two_user_example(self):
        """
        lambda=(0.5,0.5), g=(1,2), rho=0.1 moves mass to user 1
        """
        duals = DualState(lambdas=[0.5, 0.5], mu=1.0)
        updated = hfpi_step(duals, np.array([1.0, 2.0]), used_power=1.0, total_power=1.0, rho=0.1)
        self.assertAlmostEqual(updated.lambdas[1], 0.5 * 1.1 / 2.1, places=12)
        self.assertAlmostEqual(updated.lambdas[0], 1.0 - 0.5 * 1.1 / 2.1, places=12)
        self.assertAlmostEqual(float(np.sum(updated.lambdas)), 1.0, places=12)
        self.assertAlmostEqual(updated.lambdas[1], 0.261905, places=6)

    def test_mu_scales_with_power(self):
        """
        mu follows (used + rho) / (P_t + rho) and stays positive
        """
        duals = DualState(lambdas=[1.0], mu=2.0)
        updated = hfpi_step(duals, np.array([0.0]), used_power=0.0, total_power=9.9, rho=0.1)
        self.assertAlmostEqual(updated.mu, 2.0 * 0.1 / 10.0, places=14)
        self.assertGreater(updated.mu, 0.0)

    def test_ties_break_to_lowest_index(self):
        """
        With two worst users the first one collects the mass
        """
        duals = DualState(lambdas=[0.25, 0.25, 0.5], mu=1.0)
        updated = hfpi_step(duals, np.array([1.0, 1.0, 3.0]), used_power=1.0, total_power=1.0, rho=0.1)
        self.assertGreater(updated.lambdas[0], 0.25)
        self.assertAlmostEqual(updated.lambdas[1], 0.25, places=14)

    def test_simplex_kept_over_many_steps(self):
        """
        Random steps keep the lambdas on the simplex
        """
        rng = np.random.default_rng(3)
        duals = DualState.uniform(5, 10.0)
        for _ in range(200):
            duals = hfpi_step(duals, rng.uniform(0.0, 4.0, 5), rng.uniform(5.0, 15.0), 10.0, 0.1)
            self.assertAlmostEqual(float(np.sum(duals.lambdas)), 1.0, places=12)
            self.assertGreater(duals.mu, 0.0)

    def test_non_positive_shift_aborts(self):
        """
        g_common + rho <= 0 raises HfpiStepError naming the user
        """
        duals = DualState(lambdas=[0.5, 0.5], mu=1.0)
        with self.assertRaises(HfpiStepError) as context:
            hfpi_step(duals, np.array([1.0, -0.5]), 1.0, 1.0, 0.1)
        self.assertEqual(context.exception.user_index, 1)

    def test_relative_change(self):
        """
        Largest relative change over the entries
        """
        self.assertAlmostEqual(relative_change(np.array([1.0, 2.0]), np.array([1.1, 2.0])), 0.1, places=10)

    def test_shift_surrogates(self):
        """
        Negative surrogates are lifted above zero in the same order, non-negative ones are left alone
        """
        shifted = shift_surrogates(np.array([-0.5, 1.0, 0.2]))
        np.testing.assert_allclose(shifted, [0.5, 2.0, 1.2], rtol=1e-14)
        self.assertEqual(list(np.argsort(shifted)), [0, 2, 1])

        np.testing.assert_allclose(shift_surrogates(np.array([0.25, 1.5])), [0.25, 1.5], rtol=1e-14)

    def test_shifted_negative_surrogates_keep_stepping(self):
        """
        A surrogate far below -rho no longer ends the step once shifted
        """
        duals = DualState(lambdas=[0.5, 0.5], mu=1.0)
        updated = hfpi_step(duals, shift_surrogates(np.array([1.0, -0.5])), 1.0, 1.0, 0.1)
        self.assertGreater(updated.lambdas[1], 0.5)
        self.assertAlmostEqual(float(np.sum(updated.lambdas)), 1.0, places=12)

    def test_dual_residual(self):
        """
        mu-weighted power violation plus the lambda mass that moved
        """
        old = DualState(lambdas=[0.5, 0.5], mu=1.0)
        new = DualState(lambdas=[0.7, 0.3], mu=2.0)
        self.assertAlmostEqual(dual_residual(old, new, used_power=11.0, total_power=10.0), 0.4, places=12)
        self.assertEqual(dual_residual(new, new, used_power=10.0, total_power=10.0), 0.0)

    def test_relative_metric_inner_loop(self):
        """
        The relative-change stopping rule still ends a single-user loop
        """
        cfg = SystemConfig.from_snr_db(num_tx_antennas=2, num_users=1, snr_db=0.0)
        rng = np.random.default_rng(9)
        sample = ChannelSample.from_channels(rng.standard_normal((1, 2)) + 1j * rng.standard_normal((1, 2)))
        aux = update_aux(cfg, sample, init_beamformers(cfg, sample))
        result = hfpi_inner_loop(cfg, sample, aux, DualState.uniform(1, cfg.total_power),
                                 HfpiConfig(max_inner=5000, inner_metric="relative"))
        self.assertTrue(result.converged)
        self.assertLess(abs(power_used(result.beams) / cfg.total_power - 1.0), 1e-3)

    def test_inner_loop_converges_with_six_users(self):
        """
        K=N_t=6 at 20 dB: the inner loop converges from uniform duals
        """
        cfg = SystemConfig.from_snr_db(num_tx_antennas=6, num_users=6, snr_db=20.0)
        rng = np.random.default_rng(13)
        shape = (6, 6)
        sample = ChannelSample.from_channels((rng.standard_normal(shape) + 1j * rng.standard_normal(shape))
                                             / np.sqrt(2.0))
        aux = update_aux(cfg, sample, init_beamformers(cfg, sample))
        result = hfpi_inner_loop(cfg, sample, aux, DualState.uniform(6, cfg.total_power), HfpiConfig())
        self.assertTrue(result.converged)
        self.assertLess(result.iters, HfpiConfig().max_inner)
        self.assertAlmostEqual(float(np.sum(result.duals.lambdas)), 1.0, places=9)

    def test_single_user_inner_loop(self):
        """
        K=1: lambda stays at 1 and mu settles where the power budget is met
        """
        cfg = SystemConfig.from_snr_db(num_tx_antennas=3, num_users=1, snr_db=10.0)
        rng = np.random.default_rng(4)
        sample = ChannelSample.from_channels(rng.standard_normal((1, 3)) + 1j * rng.standard_normal((1, 3)))
        beams = init_beamformers(cfg, sample)
        aux = update_aux(cfg, sample, beams)
        result = hfpi_inner_loop(cfg, sample, aux, DualState.uniform(1, cfg.total_power),
                                 HfpiConfig(max_inner=5000))

        self.assertTrue(result.converged)
        np.testing.assert_array_equal(result.duals.lambdas, [1.0])
        self.assertLess(abs(power_used(result.beams) - cfg.total_power) / (cfg.total_power + 0.1), 1e-3)

    def test_two_user_fixed_point(self):
        """
        At a converged inner loop the budget is met and the structure is stationary
        """
        cfg = SystemConfig.from_snr_db(num_tx_antennas=2, num_users=2, snr_db=10.0)
        rng = np.random.default_rng(12)
        sample = ChannelSample.from_channels(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        aux = update_aux(cfg, sample, init_beamformers(cfg, sample))
        hcfg = HfpiConfig(max_inner=5000)
        result = hfpi_inner_loop(cfg, sample, aux, DualState.uniform(2, cfg.total_power), hcfg)

        self.assertAlmostEqual(float(np.sum(result.duals.lambdas)), 1.0, places=12)
        self.assertLess(stationarity_residual(cfg, sample, result.beams, aux, result.duals), 1e-4)

        if not result.converged:
            return
        self.assertLess(abs(power_used(result.beams) - cfg.total_power) / (cfg.total_power + hcfg.rho), 1e-3)
        g_common, _ = g_values(cfg, sample, result.beams, aux)
        active = result.duals.lambdas > 1e-3
        if np.count_nonzero(active) > 1:
            spread = np.max(g_common[active]) - np.min(g_common[active])
            self.assertLess(spread, 1e-2 * (np.max(np.abs(g_common)) + hcfg.rho))
