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

from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.hfpi.hfpi_config import HfpiConfig


class HfpiConfigTest(TestCase):
    """
    Tests the solver knobs and their validation.
    """

    def test_defaults(self):
        """
        Defaults stop on the dual residual and on the absolute sum rate change
        """
        hcfg = HfpiConfig()
        self.assertEqual(hcfg.rho, 0.1)
        self.assertEqual(hcfg.inner_metric, "dual-residual")
        self.assertEqual(hcfg.outer_metric, "absolute")
        self.assertEqual(hcfg.max_inner, 1000)

    def test_rejects_bad_values(self):
        """
        Negative rho, zero tolerances, zero caps and unknown metrics are rejected
        """
        for kwargs in ({"rho": -0.1}, {"inner_tol": 0.0}, {"max_outer": 0},
                       {"inner_metric": "absolute"}, {"outer_metric": "dual-residual"}):
            with self.assertRaises(RejectedInputError):
                HfpiConfig(**kwargs)
