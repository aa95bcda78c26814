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
import os

from unittest import TestCase

import numpy as np
import pytest

from rsbeam.hfpi.beamformer_initializer import batch_init_beamformers
from rsbeam.hfpi.beamformer_initializer import init_beamformers
from rsbeam.hfpi.fp_hfpi_solver import FpHfpiSolver
from rsbeam.hfpi.fp_hfpi_solver import fp_hfpi_solve
from rsbeam.hfpi.hfpi_config import HfpiConfig
from rsbeam.hfpi.projected_gradient_oracle import ProjectedGradientOracle
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.rate_calculator import power_used
from rsbeam.model.system_config import SystemConfig


RUN_SLOW = os.environ.get("RSBEAM_RUN_SLOW") == "1"

TIGHT = HfpiConfig(inner_tol=1e-8, outer_tol=1e-8, max_inner=5000)


def random_sample(rng: np.random.Generator, num_users: int, num_tx: int) -> ChannelSample:
    """
    :return: A Rayleigh ChannelSample without path loss
    """
    shape = (num_users, num_tx)
    return ChannelSample.from_channels((rng.standard_normal(shape) + 1j * rng.standard_normal(shape))
                                       / math.sqrt(2.0))


class TestFpHfpiSolver(TestCase):
    """
    Tests the warm start and the two-loop solver.
    """

    def test_init_uses_full_power(self):
        """
        The warm start spends exactly P_t, private beams are matched filters
        """
        rng = np.random.default_rng(0)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=4, num_users=3, snr_db=15.0)
        for _ in range(5):
            beams = init_beamformers(cfg, random_sample(rng, 3, 4))
            self.assertAlmostEqual(power_used(beams) / cfg.total_power, 1.0, places=12)

        cfg = SystemConfig.from_snr_db(num_tx_antennas=3, num_users=1, snr_db=5.0)
        sample = random_sample(rng, 1, 3)
        private = init_beamformers(cfg, sample)[:, 1]
        channel = sample.channels[0]
        cosine = abs(np.vdot(channel, private)) / (np.linalg.norm(channel) * np.linalg.norm(private))
        self.assertAlmostEqual(cosine, 1.0, places=12)

    def test_batch_init_matches_single(self):
        """
        The batched warm start agrees with the per-sample one
        """
        rng = np.random.default_rng(1)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=2, num_users=2, snr_db=10.0)
        samples = [random_sample(rng, 2, 2) for _ in range(3)]
        batched = batch_init_beamformers(np.stack([one.channels for one in samples]), cfg.total_power)
        for index, sample in enumerate(samples):
            # eigenvectors are defined up to a phase
            single = init_beamformers(cfg, sample)
            np.testing.assert_allclose(batched[index][:, 1:], single[:, 1:], atol=1e-12)
            self.assertAlmostEqual(abs(np.vdot(batched[index][:, 0], single[:, 0])),
                                   cfg.total_power / 2.0, places=10)

    def test_single_user_optimum(self):
        """
        K=1 reaches log2(1 + P_t ||h||^2 / sigma^2)
        """
        rng = np.random.default_rng(2)
        for snr_db in (0.0, 10.0, 20.0):
            cfg = SystemConfig.from_snr_db(num_tx_antennas=4, num_users=1, snr_db=snr_db)
            sample = random_sample(rng, 1, 4)
            _, report, diagnostics = fp_hfpi_solve(cfg, sample, TIGHT)
            optimum = math.log2(1.0 + cfg.total_power * np.linalg.norm(sample.channels[0]) ** 2)
            self.assertLess(abs(report.sum_rate - optimum), 1e-3)
            self.assertEqual(diagnostics.final_sr, report.sum_rate)

    def test_monotone_and_feasible(self):
        """
        The FP objective never drops and the result respects the budget
        """
        rng = np.random.default_rng(3)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=3, num_users=3, snr_db=10.0)
        for _ in range(3):
            sample = random_sample(rng, 3, 3)
            beams, report, diagnostics = FpHfpiSolver(HfpiConfig()).solve(cfg, sample)
            self.assertLessEqual(power_used(beams), cfg.total_power * (1.0 + 1e-6))
            self.assertGreaterEqual(report.sum_rate, 0.0)
            trace = np.array(diagnostics.objective_trace)
            self.assertTrue(np.all(np.diff(trace) >= -1e-6 * np.max(np.abs(trace))))
            self.assertEqual(len(diagnostics.inner_iters_per_outer), diagnostics.outer_iters)
            self.assertEqual(len(diagnostics.objective_trace), diagnostics.outer_iters)
            self.assertIsNotNone(diagnostics.first_duals)
            self.assertAlmostEqual(float(np.sum(diagnostics.final_duals.lambdas)), 1.0, places=9)

    def test_deterministic(self):
        """
        Two solves of the same sample are bit-identical
        """
        rng = np.random.default_rng(4)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=2, num_users=2, snr_db=20.0)
        sample = random_sample(rng, 2, 2)
        first, first_report, _ = fp_hfpi_solve(cfg, sample)
        second, second_report, _ = fp_hfpi_solve(cfg, sample)
        np.testing.assert_array_equal(first, second)
        self.assertEqual(first_report.sum_rate, second_report.sum_rate)

    def test_iteration_caps_flag_non_convergence(self):
        """
        A one-iteration cap ends the solve without an exception
        """
        rng = np.random.default_rng(5)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=2, num_users=2, snr_db=20.0)
        _, _, diagnostics = fp_hfpi_solve(cfg, random_sample(rng, 2, 2), HfpiConfig(max_outer=1))
        self.assertEqual(diagnostics.outer_iters, 1)
        self.assertFalse(diagnostics.converged)

    def test_six_users_without_inner_failures(self):
        """
        N_t=K=6 at 20 dB: every inner loop converges and the objective climbs
        """
        rng = np.random.default_rng(10)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=6, num_users=6, snr_db=20.0)
        for _ in range(2):
            beams, _, diagnostics = fp_hfpi_solve(cfg, random_sample(rng, 6, 6))
            self.assertEqual(diagnostics.inner_failures, 0)
            self.assertTrue(diagnostics.converged)
            self.assertTrue(diagnostics.labels_usable)
            trace = np.array(diagnostics.objective_trace)
            self.assertTrue(np.all(np.diff(trace) >= -1e-5 * np.max(np.abs(trace))))
            self.assertAlmostEqual(power_used(beams) / cfg.total_power, 1.0, places=9)

    def test_inner_failures_block_labels(self):
        """
        Inner loops cut off after one step leave the duals unfit as labels
        """
        rng = np.random.default_rng(11)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=3, num_users=3, snr_db=10.0)
        _, _, diagnostics = fp_hfpi_solve(cfg, random_sample(rng, 3, 3), HfpiConfig(max_inner=1))
        self.assertFalse(diagnostics.first_inner_converged)
        self.assertGreater(diagnostics.inner_failures, 0)
        self.assertFalse(diagnostics.labels_usable)
        self.assertFalse(diagnostics.to_row()["labels_usable"])

    def test_scale_to_budget(self):
        """
        Beams above and below the budget land exactly on it, zero beams stay zero
        """
        beams = np.ones((2, 3), dtype=np.complex128)
        for total_power in (1.0, 100.0):
            scaled = FpHfpiSolver.scale_to_budget(beams, total_power)
            self.assertAlmostEqual(power_used(scaled), total_power, places=10)
        zeros = np.zeros((2, 3), dtype=np.complex128)
        np.testing.assert_array_equal(FpHfpiSolver.scale_to_budget(zeros, 1.0), zeros)

    def test_relative_outer_metric(self):
        """
        The relative sum rate rule stops no later than the absolute one at high rates
        """
        rng = np.random.default_rng(12)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=3, num_users=3, snr_db=20.0)
        sample = random_sample(rng, 3, 3)
        _, _, absolute = fp_hfpi_solve(cfg, sample)
        _, _, relative = fp_hfpi_solve(cfg, sample, HfpiConfig(outer_metric="relative"))
        self.assertTrue(relative.converged)
        self.assertLessEqual(relative.outer_iters, absolute.outer_iters)

    def test_oracle_small_search(self):
        """
        A small oracle search does not beat FP-HFPI by more than a few percent
        """
        rng = np.random.default_rng(6)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=2, num_users=2, snr_db=10.0)
        sample = random_sample(rng, 2, 2)
        _, report, _ = fp_hfpi_solve(cfg, sample)
        oracle = ProjectedGradientOracle(restarts=64, steps=100, seed=1, chunk_size=64).search(cfg, sample)
        self.assertLessEqual(power_used(oracle.beams), cfg.total_power * (1.0 + 1e-9))
        self.assertGreaterEqual(report.sum_rate, 0.95 * oracle.sum_rate)

    @pytest.mark.slow
    @pytest.mark.skipif(not RUN_SLOW, reason="set RSBEAM_RUN_SLOW=1")
    def test_oracle_equivalence(self):
        """
        N_t=K=2 at 20 dB: within 2% of 10,000 refined random restarts
        """
        rng = np.random.default_rng(7)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=2, num_users=2, snr_db=20.0)
        sample = random_sample(rng, 2, 2)
        _, report, _ = fp_hfpi_solve(cfg, sample)
        oracle = ProjectedGradientOracle(restarts=10000, steps=200, seed=0).search(cfg, sample)
        self.assertGreaterEqual(report.sum_rate, 0.98 * oracle.sum_rate)

    @pytest.mark.slow
    @pytest.mark.skipif(not RUN_SLOW, reason="set RSBEAM_RUN_SLOW=1")
    def test_iteration_counts_eight_users(self):
        """
        N_t=K=8 at 20 dB: iteration counts in the reported range
        """
        rng = np.random.default_rng(8)
        cfg = SystemConfig.from_snr_db(num_tx_antennas=8, num_users=8, snr_db=20.0)
        outer = []
        inner = []
        for _ in range(5):
            _, _, diagnostics = fp_hfpi_solve(cfg, random_sample(rng, 8, 8))
            outer.append(diagnostics.outer_iters)
            inner.append(diagnostics.mean_inner_iters)
        self.assertTrue(50 <= np.mean(outer) <= 800)
        self.assertTrue(5 <= np.mean(inner) <= 100)
