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
from typing import Callable

from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.rsbnn.training_set import TrainingSet


@dataclass(frozen=True)
class TrainingPhase:
    """
    One phase of training: a loss and an epoch budget.

    loss records the batch-mean loss of a TrainingSet on the given Tape.
    With non_worsening set, the phase is rolled back if it ends with a
    higher loss on the whole training set than it started with.
    """

    name: str
    epochs: int
    loss: Callable[[Tape, TrainingSet], Tensor]
    non_worsening: bool = False
