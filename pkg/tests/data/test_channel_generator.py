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

from rsbeam.data.channel_generator import ChannelGenerator
from rsbeam.data.channel_generator import generate_channels
from rsbeam.data.channel_params import ChannelParams
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.system_config import SystemConfig


class TestChannelGenerator(TestCase):
    """
    Tests the user drop, path loss and Rayleigh draws.
    """

    def setUp(self):
        self.cfg = SystemConfig.from_snr_db(num_tx_antennas=3, num_users=4, snr_db=10.0)

    def test_path_loss(self):
        """
        rho(0) = 1, rho(d_0) = 1/2 and the gain falls with distance
        """
        cparams = ChannelParams(ref_distance=2.0, pathloss_exponent=3.5)
        np.testing.assert_allclose(cparams.large_scale_gain([0.0, 2.0]), [1.0, 0.5])
        gains = cparams.large_scale_gain(np.linspace(1.0, 100.0, 50))
        self.assertTrue(np.all(np.diff(gains) < 0.0))

    def test_rejects_bad_geometry(self):
        """
        The annulus must be non-empty and the path loss positive
        """
        with self.assertRaises(RejectedInputError):
            ChannelParams(cell_radius=1.0, min_distance=1.0)
        with self.assertRaises(RejectedInputError):
            ChannelParams(pathloss_exponent=0.0)
        with self.assertRaises(RejectedInputError):
            ChannelParams(ref_distance=-1.0)

    def test_dataset_contents(self):
        """
        Shapes, the drop region and the recorded gains
        """
        cparams = ChannelParams(cell_radius=50.0, min_distance=5.0)
        dataset = generate_channels(self.cfg, cparams, 500, master_seed=9)
        self.assertEqual(len(dataset), 500)
        self.assertEqual(dataset.channels.shape, (500, 4, 3))
        self.assertEqual(dataset.seed, 9)
        self.assertEqual(dataset.snr_db, 10.0)
        self.assertTrue(np.all(dataset.distances >= 5.0))
        self.assertTrue(np.all(dataset.distances <= 50.0))
        np.testing.assert_allclose(dataset.large_scale_gains, cparams.large_scale_gain(dataset.distances))

        # uniform over the area: d^2 is uniform between the squared radii
        mean_squared = float(np.mean(dataset.distances ** 2))
        self.assertAlmostEqual(mean_squared, (25.0 + 2500.0) / 2.0, delta=100.0)

        sample = dataset.sample(7)
        np.testing.assert_array_equal(sample.channels, dataset.channels[7])
        self.assertEqual(dataset.system_config(), self.cfg)

    def test_small_scale_fading_power(self):
        """
        With the large-scale gain divided out, the mean of ||h_k||^2 is N_t
        """
        cfg = SystemConfig.from_snr_db(num_tx_antennas=4, num_users=2, snr_db=10.0)
        dataset = generate_channels(cfg, ChannelParams(), 2500, master_seed=17)
        small_scale = dataset.channels / np.sqrt(dataset.large_scale_gains)[:, :, np.newaxis]
        norms = np.sum(np.abs(small_scale) ** 2, axis=2)
        self.assertAlmostEqual(float(np.mean(norms)), 4.0, delta=0.03 * 4.0)
        self.assertLess(abs(complex(np.mean(small_scale))), 0.05)

    def test_same_draws_whatever_the_workers(self):
        """
        Sample i depends only on the master seed and i
        """
        serial = ChannelGenerator(workers=1, chunk_size=7).generate(self.cfg, 30, 123)
        parallel = ChannelGenerator(workers=2, chunk_size=4).generate(self.cfg, 30, 123)
        np.testing.assert_array_equal(serial.channels, parallel.channels)
        np.testing.assert_array_equal(serial.distances, parallel.distances)

        prefix = ChannelGenerator().generate(self.cfg, 10, 123)
        np.testing.assert_array_equal(prefix.channels, serial.channels[:10])

        other = ChannelGenerator().generate(self.cfg, 10, 124)
        self.assertFalse(np.array_equal(other.channels, prefix.channels))

    def test_rejects_bad_requests(self):
        """
        No samples, or a config without an SNR, cannot make a dataset
        """
        with self.assertRaises(RejectedInputError):
            ChannelGenerator().generate(self.cfg, 0, 1)
        no_snr = SystemConfig(num_tx_antennas=3, num_users=4, total_power=10.0)
        with self.assertRaises(RejectedInputError):
            ChannelGenerator().generate(no_snr, 5, 1)
