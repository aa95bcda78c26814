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

import numpy as np

from rsbeam.autodiff.shape_mismatch_error import ShapeMismatchError
from rsbeam.autodiff.tensor import Tensor


@dataclass(frozen=True)
class ComplexPair:
    """
    A complex array carried as two real Tensors of the same shape.
    """

    real: Tensor
    imag: Tensor

    def __post_init__(self):
        if self.real.shape != self.imag.shape:
            raise ShapeMismatchError(f"Real part has shape {self.real.shape}, "
                                     f"imaginary part {self.imag.shape}")

    @property
    def shape(self) -> Tuple[int, ...]:
        """
        :return: The common shape of both parts
        """
        return self.real.shape

    @property
    def requires_grad(self) -> bool:
        """
        :return: True if either part takes part in differentiation
        """
        return self.real.requires_grad or self.imag.requires_grad

    def to_complex(self) -> np.ndarray:
        """
        :return: The current values as a complex128 array
        """
        return self.real.values + 1j * self.imag.values

    @staticmethod
    def from_complex(values: np.ndarray, requires_grad: bool = False, name: str = None) -> "ComplexPair":
        """
        :param values: A complex array
        :param requires_grad: Whether both parts should receive gradients
        :param name: An optional base name; parts get ".re" and ".im" appended
        :return: A ComplexPair of leaf tensors
        """
        values = np.asarray(values, dtype=np.complex128)
        real_name = None if name is None else f"{name}.re"
        imag_name = None if name is None else f"{name}.im"
        return ComplexPair(real=Tensor(values.real.copy(), requires_grad=requires_grad, name=real_name),
                           imag=Tensor(values.imag.copy(), requires_grad=requires_grad, name=imag_name))
