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

import math

from unittest import TestCase

import numpy as np

from rsbeam.fp.aux_state import AuxState
from rsbeam.fp.fractional_transform import fp_objective
from rsbeam.fp.fractional_transform import g_values
from rsbeam.fp.fractional_transform import update_aux
from rsbeam.fp.fractional_transform import worst_common_g
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.rate_calculator import rate_report
from rsbeam.model.system_config import SystemConfig


def instance(seed: int, num_users: int = 2, num_tx: int = 2):
    """
    :return: a fixed-seed (cfg, sample, beams) triple
    """
    rng = np.random.default_rng(seed)
    cfg = SystemConfig(num_tx_antennas=num_tx, num_users=num_users, total_power=10.0)
    channels = rng.standard_normal((num_users, num_tx)) + 1j * rng.standard_normal((num_users, num_tx))
    beams = rng.standard_normal((num_tx, num_users + 1)) + 1j * rng.standard_normal((num_tx, num_users + 1))
    return cfg, ChannelSample.from_channels(channels), beams


class TestFractionalTransform(TestCase):
    """
    Tests the auxiliary variables and the surrogate objective.
    """

    def test_zero_beams(self):
        """
        Zero beams give zero auxiliaries and a zero surrogate
        """
        cfg, sample, beams = instance(1)
        zeros = np.zeros_like(beams)
        aux = update_aux(cfg, sample, zeros)
        np.testing.assert_array_equal(aux.alpha_common, 0.0)
        np.testing.assert_array_equal(aux.alpha_private, 0.0)
        np.testing.assert_array_equal(aux.beta_common, 0.0)
        np.testing.assert_array_equal(aux.beta_private, 0.0)

        g_common, g_private = g_values(cfg, sample, zeros, AuxState.zeros(cfg.num_users))
        np.testing.assert_array_equal(g_common, 0.0)
        np.testing.assert_array_equal(g_private, 0.0)
        self.assertEqual(fp_objective(cfg, sample, zeros, AuxState.zeros(cfg.num_users)), 0.0)

    def test_single_user_scalar(self):
        """
        K=1, h=1, p_1=1: alpha_1 = 1 and beta_1 = sqrt(2) / 2
        """
        cfg = SystemConfig(num_tx_antennas=1, num_users=1, total_power=1.0)
        sample = ChannelSample.from_channels([[1.0]])
        aux = update_aux(cfg, sample, np.array([[0.0, 1.0]]))
        self.assertAlmostEqual(aux.alpha_private[0], 1.0, places=14)
        self.assertAlmostEqual(aux.beta_private[0].real, 1.0 / math.sqrt(2.0), places=14)
        self.assertAlmostEqual(aux.beta_private[0].imag, 0.0, places=14)

    def test_beta_matches_scalar_loop(self):
        """
        betas agree with a loop over the definition
        """
        cfg, sample, beams = instance(7)
        aux = update_aux(cfg, sample, beams)
        channels = sample.channels
        for k in range(cfg.num_users):
            gains = [np.vdot(channels[k], beams[:, i]) for i in range(cfg.num_streams)]
            powers = [abs(gain) ** 2 for gain in gains]
            common_total = sum(powers) + cfg.noise_power
            private_total = sum(powers[1:]) + cfg.noise_power
            alpha_common = powers[0] / private_total
            alpha_private = powers[k + 1] / (private_total - powers[k + 1])
            self.assertAlmostEqual(aux.alpha_common[k], alpha_common, places=12)
            self.assertAlmostEqual(aux.alpha_private[k], alpha_private, places=12)
            beta_common = math.sqrt(1.0 + alpha_common) * gains[0] / common_total
            beta_private = math.sqrt(1.0 + alpha_private) * gains[k + 1] / private_total
            self.assertAlmostEqual(abs(aux.beta_common[k] - beta_common), 0.0, places=12)
            self.assertAlmostEqual(abs(aux.beta_private[k] - beta_private), 0.0, places=12)

    def test_tightness(self):
        """
        At the optimal auxiliaries the surrogate equals the rates
        """
        for seed in range(5):
            cfg, sample, beams = instance(seed, num_users=3, num_tx=4)
            aux = update_aux(cfg, sample, beams)
            report = rate_report(cfg, sample, beams)
            g_common, g_private = g_values(cfg, sample, beams, aux)
            np.testing.assert_allclose(g_common, report.per_user_common_rates, rtol=1e-10)
            np.testing.assert_allclose(g_private, report.private_rates, rtol=1e-10)
            self.assertAlmostEqual(fp_objective(cfg, sample, beams, aux), report.sum_rate, places=9)
            self.assertAlmostEqual(worst_common_g(cfg, sample, beams, aux), report.common_rate, places=9)

    def test_lower_bound_under_perturbed_beta(self):
        """
        Perturbing beta at the optimal alpha never raises the surrogate above the rate
        """
        cfg, sample, beams = instance(13)
        aux = update_aux(cfg, sample, beams)
        report = rate_report(cfg, sample, beams)
        rng = np.random.default_rng(99)
        for _ in range(20):
            noise = rng.standard_normal((2, cfg.num_users)) + 1j * rng.standard_normal((2, cfg.num_users))
            perturbed = AuxState(alpha_common=aux.alpha_common,
                                 alpha_private=aux.alpha_private,
                                 beta_common=aux.beta_common + 0.1 * noise[0],
                                 beta_private=aux.beta_private + 0.1 * noise[1])
            g_common, g_private = g_values(cfg, sample, beams, perturbed)
            self.assertTrue(np.all(g_common <= report.per_user_common_rates + 1e-12))
            self.assertTrue(np.all(g_private <= report.private_rates + 1e-12))

    def test_aux_refresh_never_lowers_objective(self):
        """
        The optimal auxiliaries maximize the surrogate over the auxiliary block
        """
        cfg, sample, beams = instance(17)
        _, _, other_beams = instance(18)
        stale = update_aux(cfg, sample, other_beams)
        fresh = update_aux(cfg, sample, beams)
        self.assertGreaterEqual(fp_objective(cfg, sample, beams, fresh),
                                fp_objective(cfg, sample, beams, stale) - 1e-12)

    def test_objective_composition(self):
        """
        fp_objective is min of the common values plus the private sum
        """
        cfg, sample, beams = instance(4)
        aux = update_aux(cfg, sample, 0.5 * beams)
        g_common, g_private = g_values(cfg, sample, beams, aux)
        self.assertAlmostEqual(fp_objective(cfg, sample, beams, aux),
                               float(np.min(g_common) + np.sum(g_private)), places=12)
