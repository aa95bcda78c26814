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

from dataclasses import dataclass


@dataclass(frozen=True)
class EpochRecord:
    """
    Losses and validation sum rate after one training epoch.
    """

    phase: str
    epoch: int
    train_loss: float
    validation_loss: float
    validation_mean_sr: float
