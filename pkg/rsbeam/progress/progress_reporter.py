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
See class comments.
"""

from __future__ import annotations

from typing import Any
from typing import Dict


class ProgressReporter:
    """
    Receives progress of the long rsbeam loops: channel and label
    generation, training epochs and benchmark rows.

    A loop only reports its own counters, e.g. {"done": 200, "total": 1000}.
    Whoever hands the loop its reporter decides where those counters sit,
    by giving it a subcontext titled with e.g. the scheme and dataset.
    """

    def report(self, progress: Dict[str, Any]):
        """
        :param progress: A flat dictionary of counters and metrics
        :return: Nothing
        """
        raise NotImplementedError

    def subcontext(self, progress: Dict[str, Any]) -> ProgressReporter:
        """
        :param progress: A flat dictionary naming the nested loop,
                e.g. {"phase": "supervised"}
        :return: The ProgressReporter to hand to that loop
        """
        raise NotImplementedError
