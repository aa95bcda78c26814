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
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.system_config import SystemConfig


class TestSystemConfig(TestCase):
    """
    Tests the system description types.
    """

    def test_from_snr_db(self):
        """
        P_t = noise * 10^(snr/10)
        """
        cfg = SystemConfig.from_snr_db(num_tx_antennas=4, num_users=3, snr_db=20.0)
        self.assertAlmostEqual(cfg.total_power, 100.0, places=10)
        self.assertEqual(cfg.noise_power, 1.0)
        self.assertEqual(cfg.num_streams, 4)

        cfg = SystemConfig.from_snr_db(num_tx_antennas=1, num_users=1, snr_db=0.0, noise_power=2.0)
        self.assertAlmostEqual(cfg.total_power, 2.0, places=12)

    def test_invariants(self):
        """
        Non-positive sizes and powers are rejected
        """
        with self.assertRaises(RejectedInputError):
            SystemConfig(num_tx_antennas=0, num_users=1, total_power=1.0)
        with self.assertRaises(RejectedInputError):
            SystemConfig(num_tx_antennas=1, num_users=0, total_power=1.0)
        with self.assertRaises(RejectedInputError):
            SystemConfig(num_tx_antennas=1, num_users=1, total_power=0.0)
        with self.assertRaises(RejectedInputError):
            SystemConfig(num_tx_antennas=1, num_users=1, total_power=1.0, noise_power=-1.0)

    def test_channel_sample(self):
        """
        ChannelSample normalizes dtypes and rejects bad entries
        """
        sample = ChannelSample.from_channels([[1.0, 2.0], [3.0, 4.0]])
        self.assertEqual(sample.channels.dtype, np.complex128)
        self.assertEqual(sample.num_users, 2)
        self.assertEqual(sample.num_tx_antennas, 2)
        np.testing.assert_array_equal(sample.large_scale_gains, 1.0)

        with self.assertRaises(RejectedInputError):
            ChannelSample.from_channels([[np.nan, 1.0]])
        with self.assertRaises(RejectedInputError):
            ChannelSample(channels=np.ones((2, 2)), large_scale_gains=np.array([1.0, 0.0]),
                          distances=np.zeros(2))
        with self.assertRaises(RejectedInputError):
            ChannelSample(channels=np.ones((2, 2)), large_scale_gains=np.ones(3), distances=np.zeros(2))
