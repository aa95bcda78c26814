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
Reverse sweep over a Tape.
"""

from typing import Dict
from typing import List
from typing import Sequence

import numpy as np

from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.rejected_input_error import RejectedInputError


def gradient(tape: Tape, loss: Tensor, params: Sequence[Tensor]) -> List[Tensor]:
    """
    :param tape: The Tape the loss was recorded on
    :param loss: A scalar Tensor
    :param params: The Tensors to differentiate with respect to.
            These may be leaves or any intermediate tensor of the tape.
    :return: One gradient Tensor per entry of params, shaped like it.
            Parameters the loss does not depend on get zeros.
    """
    if loss.size != 1:
        raise RejectedInputError(f"Loss must be a scalar, got shape {loss.shape}")
    if loss.node is not None and not tape.owns(loss.node):
        raise RejectedInputError("Loss was not recorded on this tape")

    # Keyed by id(); every tensor stays referenced by the tape while we run.
    grads: Dict[int, np.ndarray] = {id(loss): np.ones(loss.shape)}

    last = -1 if loss.node is None else loss.node.index
    for node in reversed(tape.nodes[:last + 1]):
        output_grad = grads.get(id(node.output))
        if output_grad is None:
            continue
        input_grads = node.backward(output_grad)
        for one_input, input_grad in zip(node.inputs, input_grads):
            if input_grad is None or not one_input.requires_grad:
                continue
            key = id(one_input)
            if key in grads:
                grads[key] = grads[key] + input_grad
            else:
                grads[key] = np.array(input_grad, dtype=np.float64)

    results = []
    for param in params:
        values = grads.get(id(param))
        if values is None:
            values = np.zeros(param.shape)
        results.append(Tensor(np.reshape(values, param.shape), name=f"grad({param.name})"))
    return results
