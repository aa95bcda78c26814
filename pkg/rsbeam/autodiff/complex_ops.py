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
Complex arithmetic on ComplexPairs, composed from the real primitives of a Tape.
"""

from typing import Sequence

from rsbeam.autodiff.complex_pair import ComplexPair
from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor


def conjugate(tape: Tape, value: ComplexPair) -> ComplexPair:
    """
    :return: The complex conjugate
    """
    return ComplexPair(value.real, tape.scale(value.imag, -1.0, name="conjugate"))


def complex_add(tape: Tape, first: ComplexPair, second: ComplexPair) -> ComplexPair:
    """
    :return: first + second
    """
    return ComplexPair(tape.add(first.real, second.real), tape.add(first.imag, second.imag))


def complex_matmul(tape: Tape, first: ComplexPair, second: ComplexPair) -> ComplexPair:
    """
    Batched complex matrix product with four real matrix products.

    :return: first @ second
    """
    real = tape.subtract(tape.matmul(first.real, second.real), tape.matmul(first.imag, second.imag))
    imag = tape.add(tape.matmul(first.real, second.imag), tape.matmul(first.imag, second.real))
    return ComplexPair(real, imag)


def complex_multiply(tape: Tape, first: ComplexPair, second: ComplexPair) -> ComplexPair:
    """
    :return: first * second elementwise
    """
    real = tape.subtract(tape.multiply(first.real, second.real), tape.multiply(first.imag, second.imag))
    imag = tape.add(tape.multiply(first.real, second.imag), tape.multiply(first.imag, second.real))
    return ComplexPair(real, imag)


def complex_scale(tape: Tape, value: ComplexPair, factor: Tensor) -> ComplexPair:
    """
    :param factor: A real tensor broadcast against value
    :return: factor * value elementwise
    """
    return ComplexPair(tape.multiply(value.real, factor), tape.multiply(value.imag, factor))


def complex_abs_squared(tape: Tape, value: ComplexPair) -> Tensor:
    """
    :return: |value|^2 elementwise, a real tensor
    """
    return tape.abs_squared(value.real, value.imag)


def complex_swapaxes(tape: Tape, value: ComplexPair, first_axis: int = -1,
                     second_axis: int = -2) -> ComplexPair:
    """
    :return: The plain transpose (not conjugated) over two axes
    """
    return ComplexPair(tape.swapaxes(value.real, first_axis, second_axis),
                       tape.swapaxes(value.imag, first_axis, second_axis))


def complex_getitem(tape: Tape, value: ComplexPair, index) -> ComplexPair:
    """
    :return: value[index]
    """
    return ComplexPair(tape.getitem(value.real, index), tape.getitem(value.imag, index))


def complex_reshape(tape: Tape, value: ComplexPair, shape) -> ComplexPair:
    """
    :return: value with a new row-major shape
    """
    return ComplexPair(tape.reshape(value.real, shape), tape.reshape(value.imag, shape))


def complex_concatenate(tape: Tape, values: Sequence[ComplexPair], axis: int = -1) -> ComplexPair:
    """
    :return: values joined along an existing axis
    """
    return ComplexPair(tape.concatenate([value.real for value in values], axis=axis),
                       tape.concatenate([value.imag for value in values], axis=axis))


def complex_detach(tape: Tape, value: ComplexPair) -> ComplexPair:
    """
    :return: A constant copy that stops gradients
    """
    return ComplexPair(tape.detach(value.real), tape.detach(value.imag))


def complex_hermitian_solve(tape: Tape, matrix: ComplexPair, rhs: ComplexPair) -> ComplexPair:
    """
    :param matrix: (..., n, n) Hermitian positive-definite matrices
    :param rhs: (..., n, m) right-hand sides
    :return: X with matrix @ X = rhs
    """
    stacked = tape.hermitian_solve(matrix.real, matrix.imag, rhs.real, rhs.imag)
    return ComplexPair(tape.getitem(stacked, 0), tape.getitem(stacked, 1))


def complex_scale_to_power(tape: Tape, value: ComplexPair, total_power: float,
                           num_axes: int = 2) -> ComplexPair:
    """
    :param value: Complex values whose trailing num_axes axes form one matrix
    :param total_power: The target squared Frobenius norm per matrix
    :param num_axes: How many trailing axes make up one matrix
    :return: value rescaled so that every matrix has squared norm total_power
    """
    stacked = tape.stack([value.real, value.imag], axis=0)
    axes = (0,) + tuple(range(stacked.ndim - num_axes, stacked.ndim))
    scaled = tape.scale_to_power(stacked, total_power, axes)
    return ComplexPair(tape.getitem(scaled, 0), tape.getitem(scaled, 1))
