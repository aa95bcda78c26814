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
from typing import Tuple

from rsbeam.bench.complexity import BLACKBOX_MLP
from rsbeam.bench.complexity import FP_HFPI
from rsbeam.bench.complexity import RS_BNN
from rsbeam.errors.rejected_input_error import RejectedInputError


KNOWN_SCHEMES = (FP_HFPI, RS_BNN, BLACKBOX_MLP)

# Names accepted on the command line for a known scheme
SCHEME_ALIASES = {
    "blackbox": BLACKBOX_MLP,
    "fp_hfpi": FP_HFPI,
    "rs_bnn": RS_BNN,
}


def canonical_scheme(name: str) -> str:
    """
    :param name: A scheme name as typed by a user
    :return: The canonical scheme name
    """
    cleaned = name.strip().lower()
    cleaned = SCHEME_ALIASES.get(cleaned, cleaned)
    if cleaned not in KNOWN_SCHEMES:
        raise RejectedInputError(f"Unknown scheme '{name}', expected one of {', '.join(KNOWN_SCHEMES)}")
    return cleaned


@dataclass(frozen=True)
class BenchmarkConfig:
    """
    How the benchmark measures.

    The first warmup samples of every (scheme, dataset) pair are solved and
    counted in the sum rate statistics but left out of the timing statistics.
    """

    schemes: Tuple[str, ...] = KNOWN_SCHEMES
    warmup: int = 3

    def __post_init__(self):
        if self.warmup < 0:
            raise RejectedInputError(f"warmup must be >= 0, got {self.warmup}")
        if not self.schemes:
            raise RejectedInputError("At least one scheme is needed")
        canonical = tuple(canonical_scheme(scheme) for scheme in self.schemes)
        if len(set(canonical)) != len(canonical):
            raise RejectedInputError(f"Schemes listed twice: {', '.join(self.schemes)}")
        object.__setattr__(self, "schemes", canonical)
