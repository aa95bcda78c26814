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
Represents the kinds of structured log messages rsbeam emits.
"""
from enum import Enum


class MessageType(str, Enum):
    """
    Represents the kinds of structured log messages rsbeam emits.
    """

    # pylint: disable=invalid-name
    # For messages that do not fit into any of the other categories
    Other = 'Other'

    # Warning only, e.g. an excluded label sample or a reverted training phase
    Warning = 'Warning'

    # Per-epoch losses, benchmark rows
    Metrics = 'Metrics'

    # Counters of long-running loops
    Progress = 'Progress'
