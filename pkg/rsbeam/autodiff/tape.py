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

import math

from typing import Callable
from typing import List
from typing import Sequence
from typing import Tuple
from typing import Union

import numpy as np

from scipy.special import expit

from rsbeam.autodiff.node import Node
from rsbeam.autodiff.non_finite_value_error import NonFiniteValueError
from rsbeam.autodiff.shape_mismatch_error import ShapeMismatchError
from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.fp.hermitian_solver import HermitianFactorization


LN2 = math.log(2.0)

Operand = Union[Tensor, float, np.ndarray]


def unbroadcast(grad: np.ndarray, shape: Tuple[int, ...]) -> np.ndarray:
    """
    Sums a gradient over the axes numpy broadcasting added or stretched.

    :param grad: The gradient in the broadcast shape
    :param shape: The shape of the operand before broadcasting
    :return: The gradient reduced to shape
    """
    while grad.ndim > len(shape):
        grad = np.sum(grad, axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and grad.shape[axis] != 1:
            grad = np.sum(grad, axis=axis, keepdims=True)
    return grad


def _normalize_axes(axis, ndim: int) -> Tuple[int, ...]:
    if axis is None:
        return tuple(range(ndim))
    if isinstance(axis, int):
        axis = (axis,)
    return tuple(sorted(one_axis % ndim for one_axis in axis))


class Tape:
    """
    Records primitive operations on Tensors so that gradients can be
    obtained afterwards by a single reverse sweep (see gradient()).

    Every primitive is a method.  It computes its forward value with numpy,
    raises NonFiniteValueError if that value holds a NaN or an infinity, and
    records a Node only when recording is on and at least one input
    requires a gradient.  A Tape created with record=False is therefore a
    plain numpy evaluator, which is what inference uses.

    A Tape is single-writer.  Independent tapes may be used concurrently.
    """

    def __init__(self, record: bool = True):
        """
        Constructor.

        :param record: False to evaluate forward values only
        """
        self.record = record
        self.nodes: List[Node] = []

    def __len__(self) -> int:
        return len(self.nodes)

    def owns(self, node: Node) -> bool:
        """
        :param node: A Node
        :return: True if the node was recorded on this tape
        """
        return 0 <= node.index < len(self.nodes) and self.nodes[node.index] is node

    def _emit(self, name: str, values: np.ndarray, inputs: Sequence[Tensor],
              backward: Callable[[np.ndarray], Sequence[np.ndarray]]) -> Tensor:
        values = np.asarray(values, dtype=np.float64)
        index = len(self.nodes)
        if not np.all(np.isfinite(values)):
            raise NonFiniteValueError(name, index)

        requires_grad = self.record and any(one_input.requires_grad for one_input in inputs)
        output = Tensor(values, requires_grad=requires_grad, name=name)
        if requires_grad:
            node = Node(index=index, name=name, inputs=list(inputs), output=output, backward=backward)
            output.node = node
            self.nodes.append(node)
        return output

    def constant(self, values, name: str = "constant") -> Tensor:
        """
        :param values: Anything numpy can turn into a float64 array
        :param name: The name for error messages
        :return: A Tensor that never receives a gradient
        """
        values = np.asarray(values, dtype=np.float64)
        if not np.all(np.isfinite(values)):
            raise NonFiniteValueError(name, len(self.nodes))
        return Tensor(values, requires_grad=False, name=name)

    def _as_tensor(self, operand: Operand) -> Tensor:
        if isinstance(operand, Tensor):
            return operand
        return self.constant(operand)

    @staticmethod
    def _check_broadcast(name: str, first: Tensor, second: Tensor):
        try:
            np.broadcast_shapes(first.shape, second.shape)
        except ValueError as exception:
            raise ShapeMismatchError(f"{name}: cannot broadcast {first.shape} "
                                     f"against {second.shape}") from exception

    # Elementwise arithmetic

    def add(self, first: Operand, second: Operand, name: str = "add") -> Tensor:
        """
        :return: first + second with numpy broadcasting
        """
        first = self._as_tensor(first)
        second = self._as_tensor(second)
        self._check_broadcast(name, first, second)

        def backward(grad):
            return unbroadcast(grad, first.shape), unbroadcast(grad, second.shape)

        return self._emit(name, first.values + second.values, [first, second], backward)

    def subtract(self, first: Operand, second: Operand, name: str = "subtract") -> Tensor:
        """
        :return: first - second with numpy broadcasting
        """
        first = self._as_tensor(first)
        second = self._as_tensor(second)
        self._check_broadcast(name, first, second)

        def backward(grad):
            return unbroadcast(grad, first.shape), -unbroadcast(grad, second.shape)

        return self._emit(name, first.values - second.values, [first, second], backward)

    def multiply(self, first: Operand, second: Operand, name: str = "multiply") -> Tensor:
        """
        :return: first * second elementwise with numpy broadcasting
        """
        first = self._as_tensor(first)
        second = self._as_tensor(second)
        self._check_broadcast(name, first, second)

        def backward(grad):
            return (unbroadcast(grad * second.values, first.shape),
                    unbroadcast(grad * first.values, second.shape))

        return self._emit(name, first.values * second.values, [first, second], backward)

    def scale(self, tensor: Tensor, factor: float, name: str = "scale") -> Tensor:
        """
        :return: factor * tensor for a python scalar factor
        """
        def backward(grad):
            return (grad * factor,)

        return self._emit(name, tensor.values * factor, [tensor], backward)

    def abs_squared(self, real: Tensor, imag: Tensor, name: str = "abs_squared") -> Tensor:
        """
        :return: real^2 + imag^2, the squared magnitude of real + i imag
        """
        self._check_broadcast(name, real, imag)

        def backward(grad):
            return (unbroadcast(2.0 * real.values * grad, real.shape),
                    unbroadcast(2.0 * imag.values * grad, imag.shape))

        return self._emit(name, real.values ** 2 + imag.values ** 2, [real, imag], backward)

    def log2p1(self, tensor: Tensor, name: str = "log2p1") -> Tensor:
        """
        :return: log2(1 + tensor)
        """
        with np.errstate(divide="ignore", invalid="ignore"):
            values = np.log1p(tensor.values) / LN2

        def backward(grad):
            return (grad / ((1.0 + tensor.values) * LN2),)

        return self._emit(name, values, [tensor], backward)

    def sqrt(self, tensor: Tensor, name: str = "sqrt") -> Tensor:
        """
        :return: The elementwise square root
        """
        with np.errstate(invalid="ignore"):
            values = np.sqrt(tensor.values)

        def backward(grad):
            return (0.5 * grad / values,)

        return self._emit(name, values, [tensor], backward)

    def reciprocal(self, tensor: Tensor, name: str = "reciprocal") -> Tensor:
        """
        :return: 1 / tensor elementwise
        """
        with np.errstate(divide="ignore"):
            values = 1.0 / tensor.values

        def backward(grad):
            return (-grad * values ** 2,)

        return self._emit(name, values, [tensor], backward)

    def relu(self, tensor: Tensor, name: str = "relu") -> Tensor:
        """
        :return: max(tensor, 0)
        """
        def backward(grad):
            return (grad * (tensor.values > 0.0),)

        return self._emit(name, np.maximum(tensor.values, 0.0), [tensor], backward)

    def sigmoid(self, tensor: Tensor, name: str = "sigmoid") -> Tensor:
        """
        :return: 1 / (1 + exp(-tensor))
        """
        values = expit(tensor.values)

        def backward(grad):
            return (grad * values * (1.0 - values),)

        return self._emit(name, values, [tensor], backward)

    def abs(self, tensor: Tensor, name: str = "abs") -> Tensor:
        """
        :return: |tensor| with subgradient 0 at 0
        """
        def backward(grad):
            return (grad * np.sign(tensor.values),)

        return self._emit(name, np.abs(tensor.values), [tensor], backward)

    # Linear algebra

    def matmul(self, first: Tensor, second: Tensor, name: str = "matmul") -> Tensor:
        """
        Batched matrix product over the last two axes, leading axes broadcast.

        :return: first @ second
        """
        if first.ndim < 2 or second.ndim < 2 or first.shape[-1] != second.shape[-2]:
            raise ShapeMismatchError(f"{name}: cannot multiply {first.shape} by {second.shape}")
        try:
            np.broadcast_shapes(first.shape[:-2], second.shape[:-2])
        except ValueError as exception:
            raise ShapeMismatchError(f"{name}: batch shapes {first.shape[:-2]} and "
                                     f"{second.shape[:-2]} do not broadcast") from exception

        def backward(grad):
            grad_first = np.matmul(grad, np.swapaxes(second.values, -1, -2))
            grad_second = np.matmul(np.swapaxes(first.values, -1, -2), grad)
            return unbroadcast(grad_first, first.shape), unbroadcast(grad_second, second.shape)

        return self._emit(name, np.matmul(first.values, second.values), [first, second], backward)

    def affine(self, inputs: Tensor, weight: Tensor, bias: Tensor, name: str = "affine") -> Tensor:
        """
        A dense layer applied along the last axis.

        :param inputs: (..., D) inputs
        :param weight: (M, D) weights
        :param bias: (M,) biases
        :return: (..., M) inputs @ weight^T + bias
        """
        if weight.ndim != 2 or inputs.shape[-1:] != weight.shape[1:] or bias.shape != weight.shape[:1]:
            raise ShapeMismatchError(f"{name}: inputs {inputs.shape}, weight {weight.shape} "
                                     f"and bias {bias.shape} do not line up")
        out_dim, in_dim = weight.shape

        def backward(grad):
            flat_grad = grad.reshape(-1, out_dim)
            flat_inputs = inputs.values.reshape(-1, in_dim)
            return (np.matmul(grad, weight.values),
                    flat_grad.T @ flat_inputs,
                    np.sum(flat_grad, axis=0))

        values = np.matmul(inputs.values, weight.values.T) + bias.values
        return self._emit(name, values, [inputs, weight, bias], backward)

    def hermitian_solve(self, matrix_real: Tensor, matrix_imag: Tensor,
                        rhs_real: Tensor, rhs_imag: Tensor, name: str = "hermitian_solve") -> Tensor:
        """
        Solves A X = B for Hermitian positive-definite A = matrix_real + i matrix_imag
        and B = rhs_real + i rhs_imag, both possibly stacked along leading axes.

        The reverse pass reuses the factorization of the forward pass:
        with G_X the gradient of X, G_B = A^-1 G_X and G_A = -G_B X^H.

        :return: A (2, ..., n, m) tensor holding Re(X) then Im(X)
        """
        if matrix_real.shape != matrix_imag.shape or rhs_real.shape != rhs_imag.shape:
            raise ShapeMismatchError(f"{name}: real and imaginary parts differ in shape")
        if (matrix_real.ndim < 2 or rhs_real.ndim != matrix_real.ndim
                or matrix_real.shape[-1] != matrix_real.shape[-2]
                or rhs_real.shape[:-1] != matrix_real.shape[:-1]):
            raise ShapeMismatchError(f"{name}: cannot solve {matrix_real.shape} against {rhs_real.shape}")

        factorization = HermitianFactorization(matrix_real.values + 1j * matrix_imag.values)
        solution = factorization.solve(rhs_real.values + 1j * rhs_imag.values)

        def backward(grad):
            grad_rhs = factorization.solve(grad[0] + 1j * grad[1])
            grad_matrix = -np.matmul(grad_rhs, np.conj(np.swapaxes(solution, -1, -2)))
            return grad_matrix.real, grad_matrix.imag, grad_rhs.real, grad_rhs.imag

        values = np.stack([solution.real, solution.imag])
        return self._emit(name, values, [matrix_real, matrix_imag, rhs_real, rhs_imag], backward)

    def scale_to_power(self, tensor: Tensor, total_power: float, axes: Tuple[int, ...],
                       name: str = "scale_to_power") -> Tensor:
        """
        Rescales tensor so that its sum of squares over axes equals total_power.

        :param tensor: The real coordinates to rescale
        :param total_power: The target sum of squares
        :param axes: The axes the sum of squares runs over; the others are batch axes
        :return: sqrt(total_power / sum(tensor^2)) * tensor
        """
        power = np.sum(tensor.values ** 2, axis=axes, keepdims=True)
        if np.any(power == 0.0):
            raise RejectedInputError("Cannot rescale an all-zero beam matrix to the power budget")
        factor = np.sqrt(total_power / power)

        def backward(grad):
            projection = np.sum(tensor.values * grad, axis=axes, keepdims=True) / power
            return (factor * (grad - tensor.values * projection),)

        return self._emit(name, factor * tensor.values, [tensor], backward)

    # Reductions

    def sum(self, tensor: Tensor, axis=None, keepdims: bool = False, name: str = "sum") -> Tensor:
        """
        :return: The sum over axis (all axes when None)
        """
        axes = _normalize_axes(axis, tensor.ndim)

        def backward(grad):
            if not keepdims:
                grad = np.expand_dims(grad, axes)
            return (np.broadcast_to(grad, tensor.shape).copy(),)

        return self._emit(name, np.sum(tensor.values, axis=axes, keepdims=keepdims), [tensor], backward)

    def mean(self, tensor: Tensor, axis=None, keepdims: bool = False, name: str = "mean") -> Tensor:
        """
        :return: The mean over axis (all axes when None)
        """
        axes = _normalize_axes(axis, tensor.ndim)
        count = int(np.prod([tensor.shape[one_axis] for one_axis in axes]))
        total = self.sum(tensor, axis=axes, keepdims=keepdims, name=name)
        return self.scale(total, 1.0 / count, name=name)

    def min(self, tensor: Tensor, axis: int = -1, name: str = "min") -> Tensor:
        """
        Minimum over one axis.  The whole gradient goes to the minimizing
        entry, the lowest index among ties.

        :return: The minimum over axis
        """
        axis = axis % tensor.ndim
        argmin = np.expand_dims(np.argmin(tensor.values, axis=axis), axis)

        def backward(grad):
            result = np.zeros(tensor.shape)
            np.put_along_axis(result, argmin, np.expand_dims(grad, axis), axis=axis)
            return (result,)

        return self._emit(name, np.min(tensor.values, axis=axis), [tensor], backward)

    # Structure

    def concatenate(self, tensors: Sequence[Tensor], axis: int = -1, name: str = "concatenate") -> Tensor:
        """
        :return: The tensors joined along an existing axis
        """
        tensors = list(tensors)
        try:
            values = np.concatenate([tensor.values for tensor in tensors], axis=axis)
        except ValueError as exception:
            raise ShapeMismatchError(f"{name}: {exception}") from exception
        boundaries = np.cumsum([tensor.shape[axis] for tensor in tensors])[:-1]

        def backward(grad):
            return np.split(grad, boundaries, axis=axis)

        return self._emit(name, values, tensors, backward)

    def stack(self, tensors: Sequence[Tensor], axis: int = 0, name: str = "stack") -> Tensor:
        """
        :return: The tensors joined along a new axis
        """
        tensors = list(tensors)
        try:
            values = np.stack([tensor.values for tensor in tensors], axis=axis)
        except ValueError as exception:
            raise ShapeMismatchError(f"{name}: {exception}") from exception

        def backward(grad):
            return [np.take(grad, position, axis=axis) for position in range(len(tensors))]

        return self._emit(name, values, tensors, backward)

    def reshape(self, tensor: Tensor, shape: Tuple[int, ...], name: str = "reshape") -> Tensor:
        """
        :return: The tensor with a new shape and the same row-major values
        """
        try:
            values = np.reshape(tensor.values, shape)
        except ValueError as exception:
            raise ShapeMismatchError(f"{name}: {exception}") from exception

        def backward(grad):
            return (np.reshape(grad, tensor.shape),)

        return self._emit(name, values, [tensor], backward)

    def swapaxes(self, tensor: Tensor, first_axis: int = -1, second_axis: int = -2,
                 name: str = "swapaxes") -> Tensor:
        """
        :return: The tensor with two axes exchanged
        """
        def backward(grad):
            return (np.swapaxes(grad, first_axis, second_axis),)

        values = np.swapaxes(tensor.values, first_axis, second_axis)
        return self._emit(name, values, [tensor], backward)

    def getitem(self, tensor: Tensor, index, name: str = "getitem") -> Tensor:
        """
        :param index: Any numpy index, basic or advanced
        :return: tensor.values[index]
        """
        try:
            values = np.array(tensor.values[index])
        except IndexError as exception:
            raise ShapeMismatchError(f"{name}: {exception}") from exception

        def backward(grad):
            result = np.zeros(tensor.shape)
            np.add.at(result, index, grad)
            return (result,)

        return self._emit(name, values, [tensor], backward)

    def detach(self, tensor: Tensor, name: str = None) -> Tensor:
        """
        :return: A constant copy of tensor that stops gradients
        """
        if name is None:
            name = f"detach({tensor.name})"
        return Tensor(tensor.values.copy(), requires_grad=False, name=name)
