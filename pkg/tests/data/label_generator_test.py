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

from rsbeam.data.beam_label_set import flatten_beams
from rsbeam.data.beam_label_set import unflatten_beams
from rsbeam.data.label_generator import LabelGenerator
from rsbeam.data.label_generator import generate_labels
from rsbeam.hfpi.hfpi_config import HfpiConfig

from tests.rsbnn.rsbnn_fixtures import rayleigh_dataset


class LabelGeneratorTest(TestCase):
    """
    Tests FP-HFPI labeling of a dataset.
    """

    def test_single_user_labels(self):
        """
        With one user every lambda label is exactly 1
        """
        dataset = rayleigh_dataset(num_users=1, num_tx=2, count=4, seed=1)
        labels = generate_labels(dataset)
        self.assertTrue(labels.matches(dataset))
        self.assertEqual(len(labels), 4)
        np.testing.assert_array_equal(labels.indices, [0, 1, 2, 3])
        np.testing.assert_array_equal(labels.xi_first[:, 0], 1.0)
        np.testing.assert_array_equal(labels.xi_last[:, 0], 1.0)
        self.assertTrue(np.all(labels.xi_last[:, 1] > 0.0))

    def test_labels_and_beams(self):
        """
        Dual labels lie on the simplex, beam labels respect the budget,
        and the result does not depend on the number of workers
        """
        dataset = rayleigh_dataset(num_users=2, num_tx=2, count=6, seed=2)
        cfg = dataset.system_config()
        result = LabelGenerator(chunk_size=4).generate(dataset)
        labels = result.labels
        self.assertEqual(len(labels) + len(result.excluded), 6)
        np.testing.assert_allclose(np.sum(labels.xi_first[:, :2], axis=1), 1.0, rtol=1e-9)
        np.testing.assert_allclose(np.sum(labels.xi_last[:, :2], axis=1), 1.0, rtol=1e-9)

        beams = result.beam_labels
        self.assertTrue(beams.matches(dataset))
        np.testing.assert_array_equal(beams.indices, labels.indices)
        power = np.sum(np.abs(beams.beams) ** 2, axis=(1, 2))
        self.assertTrue(np.all(power <= cfg.total_power * (1.0 + 1e-6)))
        self.assertEqual(beams.flattened().shape, (len(beams), beams.width))

        parallel = LabelGenerator(workers=2, chunk_size=2).generate(dataset)
        np.testing.assert_array_equal(parallel.labels.xi_last, labels.xi_last)
        np.testing.assert_array_equal(parallel.beam_labels.beams, beams.beams)

    def test_non_converged_samples_excluded(self):
        """
        Samples that hit the outer iteration cap are left out and counted
        """
        dataset = rayleigh_dataset(num_users=2, num_tx=2, count=3, seed=5, snr_db=20.0)
        result = LabelGenerator(HfpiConfig(max_outer=1, outer_tol=1e-12)).generate(dataset)
        self.assertEqual(len(result.labels), 0)
        self.assertEqual(result.excluded, [0, 1, 2])
        self.assertEqual(result.labels.xi_first.shape, (0, 3))
        self.assertEqual(result.beam_labels.beams.shape, (0, 2, 3))

    def test_inner_failures_excluded(self):
        """
        Samples whose inner loops stop at the cap are left out even when the outer loop settles
        """
        dataset = rayleigh_dataset(num_users=2, num_tx=2, count=3, seed=6)
        result = LabelGenerator(HfpiConfig(max_inner=1)).generate(dataset)
        self.assertEqual(len(result.labels), 0)
        self.assertEqual(result.excluded, [0, 1, 2])

    def test_flattened_beam_layout(self):
        """
        Real parts stream by stream, then imaginary parts
        """
        beams = np.array([[1 + 2j, 3 + 4j],
                          [5 + 6j, 7 + 8j]])
        flat = flatten_beams(beams)
        np.testing.assert_array_equal(flat, [1, 5, 3, 7, 2, 6, 4, 8])
        np.testing.assert_array_equal(unflatten_beams(flat, num_users=1, num_tx_antennas=2), beams)
