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
For structured logging.
"""

import datetime
import json
import logging

from typing import Any
from typing import Dict

import numpy as np

from rsbeam.log_utils.message_type import MessageType


def _to_json_compatible(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


class StructuredMessage:
    """
    Encapsulates the data required for a single structured log message, which will result in a single line in the
    output (usually stdout).
    This is in line with NDJSON. See: https://github.com/ndjson/ndjson-spec
    """

    def __init__(self, source: str, message: str, extra_properties: Dict[str, Any],
                 message_type: MessageType):
        self._source = source
        self._message_type = message_type
        self._message = message
        self._extra_properties = extra_properties

    def __str__(self):
        json_to_log = {
            'timestamp': datetime.datetime.now().isoformat(),
            'source': self._source,
            'message_type': self._message_type,
            'message': self._message,
        }
        if self._extra_properties:
            json_to_log['extra_properties'] = self._extra_properties
        # numpy scalars show up in metrics all the time
        return json.dumps(json_to_log, default=_to_json_compatible)


def log_structured(source: str, message: str, logger: logging.Logger,
                   message_type: MessageType = MessageType.Other, extra_properties: Dict[str, Any] = None):
    """
    Logs a message in structured format using the supplied logger at `INFO` level.

    :param source: Component that was the source of this message, for example "rsbeam.train"
    :param message: Human-readable message, for example "Epoch finished"
    :param logger: A `logger` from the standard Python `logging` package
    :param message_type: The MessageType
    :param extra_properties: Arbitrary properties logged along with the message, for example `{'epoch': 3}`
    """
    logger.info(str(StructuredMessage(source, message, extra_properties, message_type)))
