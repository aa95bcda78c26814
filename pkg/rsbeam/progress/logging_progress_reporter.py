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

import logging

from typing import Any
from typing import Dict

from rsbeam.log_utils.message_type import MessageType
from rsbeam.log_utils.structured_message import log_structured
from rsbeam.progress.progress_reporter import ProgressReporter


class LoggingProgressReporter(ProgressReporter):
    """
    A ProgressReporter that writes every report as one NDJSON log line.
    Titles of enclosing subcontexts are merged into each report.
    """

    def __init__(self, source: str = "rsbeam", title: Dict[str, Any] = None,
                 message_type: MessageType = MessageType.Progress):
        """
        Constructor

        :param source: The source field of the structured messages
        :param title: Properties of enclosing contexts merged into every report
        :param message_type: The MessageType the reports are logged with
        """
        self._source = source
        self._title = dict(title or {})
        self._message_type = message_type
        self._logger = logging.getLogger(__name__)

    def report(self, progress: Dict[str, Any]):
        """
        :param progress: A progress dictionary
        :return: Nothing
        """
        extra = dict(self._title)
        extra.update(progress)
        message = str(progress.get("message", self._message_type.value))
        log_structured(self._source, message, self._logger,
                       message_type=self._message_type, extra_properties=extra)

    def subcontext(self, progress: Dict[str, Any]) -> ProgressReporter:
        """
        :param progress: A progress dictionary acting as the title of the new scope
        :return: A LoggingProgressReporter that carries this title along
        """
        title = dict(self._title)
        title.update(progress)
        return LoggingProgressReporter(source=self._source, title=title,
                                       message_type=self._message_type)
