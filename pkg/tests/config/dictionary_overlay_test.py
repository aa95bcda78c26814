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

from rsbeam.config.dictionary_overlay import DictionaryOverlay
from rsbeam.errors.rejected_input_error import RejectedInputError


class DictionaryOverlayTest(TestCase):
    """
    Test for DictionaryOverlay.
    """

    def setUp(self):
        self.overlay = DictionaryOverlay()

    def test_basis_none(self):
        """
        Tests for when basis dictionary is None
        """
        self.assertIsNone(self.overlay.overlay(None, None))

        overlay = {"layers": 3}
        result = self.overlay.overlay(None, overlay)
        self.assertEqual(result, {"layers": 3})
        self.assertIsNot(result, overlay)

    def test_shallow_key(self):
        """
        Tests stuff for non-nested dictionaries, including string conversion
        to the basis type as a properties file delivers them
        """
        basis = {"layers": 5, "lr": 1e-4, "detach_aux": False, "out": None}

        result = self.overlay.overlay(basis, {"layers": "3", "lr": "0.001", "detach_aux": " True "})
        self.assertEqual(result["layers"], 3)
        self.assertIsInstance(result["layers"], int)
        self.assertAlmostEqual(result["lr"], 1e-3)
        self.assertIs(result["detach_aux"], True)
        self.assertIsNone(result["out"])

        # basis is never modified
        self.assertEqual(basis["layers"], 5)

    def test_none_overlay_values_are_ignored(self):
        """
        Flags nobody typed arrive as None and must not hide the basis
        """
        basis = {"rho": 0.1, "data": "train.rsd"}
        result = self.overlay.overlay(basis, {"rho": None, "data": None})
        self.assertEqual(result, basis)

    def test_large_seed_survives(self):
        """
        A u64 seed given as a string keeps every digit
        """
        result = self.overlay.overlay({"seed": 0}, {"seed": "18446744073709551615"})
        self.assertEqual(result["seed"], 2 ** 64 - 1)

    def test_bad_string_is_rejected(self):
        """
        A string that is not a number for a numeric basis value is rejected
        """
        with self.assertRaises(RejectedInputError):
            self.overlay.overlay({"batch": 1000}, {"batch": "lots"})

    def test_deep_key_different_values(self):
        """
        Tests stuff for nested dictionaries
        """
        basis = {"train": {"layers": 5}}

        result = self.overlay.overlay(basis, {"train": {"layers": 2}})
        self.assertEqual(result, {"train": {"layers": 2}})

        result = self.overlay.overlay(basis, {"train": {"hidden": 64}})
        self.assertEqual(result, {"train": {"layers": 5, "hidden": 64}})

        result = self.overlay.overlay(basis, {"train": 3})
        self.assertEqual(result, {"train": 3})

    def test_keys_not_from_basis_dictionary(self):
        """
        Tests that we can detect keys not present
        in the basis dictionary and throw an exception.
        """
        self.assertRaises(ValueError, self.overlay.overlay, {"foo": 1}, {"foo1": 2}, False)
        self.assertRaises(RejectedInputError, self.overlay.overlay,
                          {"nested": {"foo": 1}}, {"nested": {"foo1": 2}}, False)
