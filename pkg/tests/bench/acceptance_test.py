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

import os

from typing import Tuple
from unittest import TestCase

import pytest

from rsbeam.bench.blackbox_runner import BlackboxRunner
from rsbeam.bench.blackbox_trainer import train_blackbox
from rsbeam.bench.fp_hfpi_runner import FpHfpiRunner
from rsbeam.bench.scheme_evaluator import evaluate_scheme
from rsbeam.bench.unfold_runner import UnfoldRunner
from rsbeam.data.channel_dataset import ChannelDataset
from rsbeam.data.channel_generator import generate_channels
from rsbeam.data.channel_params import ChannelParams
from rsbeam.data.label_generator import LabelGenerator
from rsbeam.data.label_generator import LabelResult
from rsbeam.model.system_config import SystemConfig
from rsbeam.rsbnn.train_config import TrainConfig
from rsbeam.rsbnn.unfold_config import UnfoldConfig
from rsbeam.rsbnn.unfold_model import UnfoldModel
from rsbeam.rsbnn.unfold_trainer import train_unfolded


RUN_SLOW = os.environ.get("RSBEAM_RUN_SLOW") == "1"

WORKERS = max(1, min(8, os.cpu_count() or 1))

TRAIN_SEED = 101
TEST_SEED = 202


def labeled_data(num_users: int, num_tx: int, snr_db: float,
                 train_samples: int, test_samples: int) -> Tuple[ChannelDataset, LabelResult, ChannelDataset]:
    """
    :return: A tuple of (training dataset, its FP-HFPI labels, held-out dataset)
    """
    cfg = SystemConfig.from_snr_db(num_tx_antennas=num_tx, num_users=num_users, snr_db=snr_db)
    train = generate_channels(cfg, ChannelParams(), train_samples, TRAIN_SEED, workers=WORKERS)
    test = generate_channels(cfg, ChannelParams(), test_samples, TEST_SEED, workers=WORKERS)
    labels = LabelGenerator(workers=WORKERS).generate(train)
    return train, labels, test


class AcceptanceTest(TestCase):
    """
    Desk-scale training and benchmark runs.  Each takes minutes to hours.
    """

    @pytest.mark.slow
    @pytest.mark.skipif(not RUN_SLOW, reason="set RSBEAM_RUN_SLOW=1")
    def test_learning_parity(self):
        """
        K=N_t=4 at 20 dB: the trained network keeps 95% of the FP-HFPI sum rate on held-out samples
        """
        train, labels, test = labeled_data(4, 4, 20.0, 2000, 100)
        model, _ = train_unfolded(train, labels.labels, UnfoldConfig(), TrainConfig())

        fp_hfpi = evaluate_scheme(FpHfpiRunner(), test, warmup=0)
        rsbnn = evaluate_scheme(UnfoldRunner(model), test, warmup=0)
        self.assertGreaterEqual(rsbnn.mean_sr, 0.95 * fp_hfpi.mean_sr)

    @pytest.mark.slow
    @pytest.mark.skipif(not RUN_SLOW, reason="set RSBEAM_RUN_SLOW=1")
    def test_inference_speedup(self):
        """
        K=N_t=8: single-sample inference is at least 20 times faster than an FP-HFPI solve
        """
        cfg = SystemConfig.from_snr_db(num_tx_antennas=8, num_users=8, snr_db=20.0)
        test = generate_channels(cfg, ChannelParams(), 100, TEST_SEED)
        # inference cost does not depend on the trained weights
        model = UnfoldModel.initialize(8, 8, UnfoldConfig(), seed=0)

        fp_hfpi = evaluate_scheme(FpHfpiRunner(), test, warmup=3)
        rsbnn = evaluate_scheme(UnfoldRunner(model), test, warmup=3)
        self.assertLessEqual(rsbnn.mean_time, fp_hfpi.mean_time / 20.0)

    @pytest.mark.slow
    @pytest.mark.skipif(not RUN_SLOW, reason="set RSBEAM_RUN_SLOW=1")
    def test_beats_blackbox_baseline(self):
        """
        K=N_t=8 at 20 dB: the unfolded network beats the dense baseline by at least 1%
        """
        train, labels, test = labeled_data(8, 8, 20.0, 2000, 100)
        tcfg = TrainConfig()
        rsbnn_model, _ = train_unfolded(train, labels.labels, UnfoldConfig(), tcfg)
        blackbox_model, _ = train_blackbox(train, labels.beam_labels, tcfg)

        rsbnn = evaluate_scheme(UnfoldRunner(rsbnn_model), test, warmup=0)
        blackbox = evaluate_scheme(BlackboxRunner(blackbox_model), test, warmup=0)
        self.assertGreaterEqual(rsbnn.mean_sr, 1.01 * blackbox.mean_sr)
