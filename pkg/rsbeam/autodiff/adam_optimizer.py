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

from typing import List
from typing import Sequence
from typing import Tuple

import numpy as np

from rsbeam.autodiff.adam_state import AdamState
from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.rejected_input_error import RejectedInputError


DEFAULT_BETA1 = 0.9
DEFAULT_BETA2 = 0.999
DEFAULT_EPSILON = 1e-8


def adam_step(params: Sequence[np.ndarray], grads: Sequence[np.ndarray], state: AdamState,
              learning_rate: float, beta1: float = DEFAULT_BETA1, beta2: float = DEFAULT_BETA2,
              epsilon: float = DEFAULT_EPSILON) -> Tuple[List[np.ndarray], AdamState]:
    """
    One bias-corrected Adam update.  Nothing is modified in place.

    :param params: Current parameter arrays
    :param grads: Gradients shaped like params
    :param state: The AdamState before this step
    :param learning_rate: The step size
    :param beta1: Decay of the first moment
    :param beta2: Decay of the second moment
    :param epsilon: Added to the root of the second moment
    :return: A tuple of (new parameter arrays, new AdamState)
    """
    if not len(params) == len(grads) == len(state.first_moments):
        raise RejectedInputError("params, grads and optimizer state differ in length")

    step = state.step + 1
    first_correction = 1.0 - beta1 ** step
    second_correction = 1.0 - beta2 ** step

    new_params = []
    first_moments = []
    second_moments = []
    for param, grad, first, second in zip(params, grads, state.first_moments, state.second_moments):
        if np.shape(param) != np.shape(grad):
            raise RejectedInputError(f"Gradient shape {np.shape(grad)} does not match "
                                     f"parameter shape {np.shape(param)}")
        first = beta1 * first + (1.0 - beta1) * grad
        second = beta2 * second + (1.0 - beta2) * grad * grad
        update = (first / first_correction) / (np.sqrt(second / second_correction) + epsilon)
        new_params.append(param - learning_rate * update)
        first_moments.append(first)
        second_moments.append(second)

    return new_params, AdamState(step=step, first_moments=first_moments, second_moments=second_moments)


class AdamOptimizer:
    """
    Applies adam_step to a fixed list of parameter Tensors, replacing their
    values after every step.
    """

    def __init__(self, params: Sequence[Tensor], learning_rate: float,
                 beta1: float = DEFAULT_BETA1, beta2: float = DEFAULT_BETA2,
                 epsilon: float = DEFAULT_EPSILON):
        """
        Constructor.

        :param params: The parameter Tensors to update
        :param learning_rate: The step size
        :param beta1: Decay of the first moment
        :param beta2: Decay of the second moment
        :param epsilon: Added to the root of the second moment
        """
        if learning_rate <= 0.0:
            raise RejectedInputError(f"learning_rate must be > 0, got {learning_rate}")
        self.params = list(params)
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.state = AdamState.zeros_like([param.values for param in self.params])

    def step(self, grads: Sequence[Tensor]):
        """
        :param grads: One gradient Tensor per parameter, as returned by gradient()
        """
        new_values, self.state = adam_step([param.values for param in self.params],
                                           [grad.values for grad in grads],
                                           self.state, self.learning_rate,
                                           self.beta1, self.beta2, self.epsilon)
        for param, values in zip(self.params, new_values):
            param.values = values
