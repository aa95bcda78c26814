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

import numpy as np

from scipy.linalg import LinAlgError
from scipy.linalg import cho_factor
from scipy.linalg import cho_solve

from rsbeam.errors.rejected_input_error import RejectedInputError


class HermitianFactorization:
    """
    Cholesky factorization of one Hermitian positive-definite matrix, or of a
    stack of them along leading axes.  The factor is kept so that the same
    system can be solved against several right-hand sides, which is what the
    reverse pass of a linear solve needs.

    Matrices are never inverted explicitly.
    """

    def __init__(self, matrix: np.ndarray):
        """
        Constructor.  Factorizes right away.

        :param matrix: (..., n, n) Hermitian positive-definite matrices
        """
        matrix = np.asarray(matrix)
        if matrix.ndim < 2 or matrix.shape[-1] != matrix.shape[-2]:
            raise RejectedInputError(f"Expected square matrices, got shape {matrix.shape}")

        self._batch_shape = matrix.shape[:-2]
        try:
            if matrix.ndim == 2:
                self._factor = cho_factor(matrix, lower=True, check_finite=False)
            else:
                # numpy factorizes whole stacks in one call
                self._factor = np.linalg.cholesky(matrix)
        except (LinAlgError, np.linalg.LinAlgError) as exception:
            raise RejectedInputError("Matrix is not Hermitian positive definite") from exception

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        """
        :param rhs: (..., n, m) right-hand sides matching the factorized stack
        :return: (..., n, m) solutions X of A X = rhs
        """
        if len(self._batch_shape) == 0:
            return cho_solve(self._factor, rhs, check_finite=False)

        lower = self._factor
        upper = np.conj(np.swapaxes(lower, -1, -2))
        forward = np.linalg.solve(lower, rhs)
        return np.linalg.solve(upper, forward)


def hermitian_solve(matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """
    :param matrix: (..., n, n) Hermitian positive-definite matrices
    :param rhs: (..., n, m) right-hand sides
    :return: The solutions of matrix @ X = rhs
    """
    return HermitianFactorization(matrix).solve(rhs)
