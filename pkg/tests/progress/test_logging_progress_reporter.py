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

import json

from unittest import TestCase

from rsbeam.log_utils.message_type import MessageType
from rsbeam.progress.logging_progress_reporter import LoggingProgressReporter


LOGGER_NAME = "rsbeam.progress.logging_progress_reporter"


class TestLoggingProgressReporter(TestCase):
    """
    Tests the NDJSON progress reports and their subcontext titles.
    """

    def test_report(self):
        """
        A report becomes one structured line
        """
        reporter = LoggingProgressReporter(source="rsbeam.labels")
        with self.assertLogs(LOGGER_NAME, level="INFO") as logs:
            reporter.report({"done": 10, "total": 100})
        parsed = json.loads(logs.records[0].getMessage())
        self.assertEqual(parsed["source"], "rsbeam.labels")
        self.assertEqual(parsed["message_type"], "Progress")
        self.assertEqual(parsed["message"], "Progress")
        self.assertEqual(parsed["extra_properties"], {"done": 10, "total": 100})

    def test_subcontext_titles(self):
        """
        Nested titles merge, innermost first, and the parent is unchanged
        """
        reporter = LoggingProgressReporter(source="rsbeam.bench", message_type=MessageType.Metrics)
        inner = reporter.subcontext({"scheme": "rs-bnn", "K": 4}).subcontext({"K": 8})
        with self.assertLogs(LOGGER_NAME, level="INFO") as logs:
            inner.report({"done": 3, "message": "samples"})
            reporter.report({"done": 1})
        first = json.loads(logs.records[0].getMessage())
        self.assertEqual(first["message"], "samples")
        self.assertEqual(first["message_type"], "Metrics")
        self.assertEqual(first["extra_properties"], {"scheme": "rs-bnn", "K": 8, "done": 3, "message": "samples"})
        second = json.loads(logs.records[1].getMessage())
        self.assertEqual(second["extra_properties"], {"done": 1})
