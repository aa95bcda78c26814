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
from typing import List
from typing import Optional
from typing import Sequence

import numpy as np

from rsbeam.autodiff.tensor import Tensor


@dataclass(eq=False)
class Node:
    """
    One recorded operation on a Tape.

    backward maps the gradient of the output to one gradient per input,
    in input order, each shaped like that input.  An entry may be None
    for an input that does not need a gradient.
    """

    index: int
    name: str
    inputs: List[Tensor]
    output: Tensor
    backward: Callable[[np.ndarray], Sequence[Optional[np.ndarray]]]
