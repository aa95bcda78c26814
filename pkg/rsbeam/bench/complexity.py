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
Big-O operation counts of the benchmarked schemes, written next to the
measured times so a CSV row says what the timing should scale like.
"""

from rsbeam.errors.rejected_input_error import RejectedInputError


FP_HFPI = "fp-hfpi"
RS_BNN = "rs-bnn"
BLACKBOX_MLP = "blackbox-mlp"


# pylint: disable=too-many-arguments,too-many-positional-arguments
def complexity_estimate(scheme: str, num_users: int, num_tx_antennas: int,
                        num_layers: int = 5, hidden_dim: int = 512,
                        outer_iters: float = 1.0, inner_iters: float = 1.0,
                        blackbox_hidden_dim: int = None) -> int:
    """
    :param scheme: One of "fp-hfpi", "rs-bnn" or "blackbox-mlp"
    :param num_users: K
    :param num_tx_antennas: N_t
    :param num_layers: L, unfolded layers of rs-bnn
    :param hidden_dim: M, hidden width of each rs-bnn layer network
    :param outer_iters: Average AO iterations of fp-hfpi
    :param inner_iters: Average HFPI iterations per AO iteration of fp-hfpi
    :param blackbox_hidden_dim: Hidden width of the dense baseline.
                Default of None means 4 * 2 K N_t.
    :return: The operation count, leading constants dropped
    """
    k = num_users
    n = num_tx_antennas

    if scheme == RS_BNN:
        return int(num_layers * (hidden_dim * k * n + n * n * k + k * k * n))

    if scheme == FP_HFPI:
        return int(round(outer_iters * inner_iters * (n ** 3 + k * n * n + k * k * n)))

    if scheme == BLACKBOX_MLP:
        input_dim = 2 * k * n
        hidden = blackbox_hidden_dim if blackbox_hidden_dim is not None else 4 * input_dim
        output_dim = 2 * n * (k + 1)
        return int(input_dim * hidden + hidden * hidden + hidden * output_dim)

    raise RejectedInputError(f"No complexity expression for scheme '{scheme}'")
