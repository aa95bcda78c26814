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
Differentiable, batched versions of the rate, auxiliary-variable and
beamforming-structure arithmetic, recorded on a Tape.

These mirror rsbeam.model.rate_calculator, rsbeam.fp.fractional_transform.update_aux
and rsbeam.fp.optimal_beamforming_structure.obs_beamformers entry for entry,
with channels (B, K, N_t) and beams (B, N_t, K+1) as ComplexPairs.
"""

from dataclasses import dataclass

import numpy as np

from rsbeam.autodiff.complex_ops import complex_abs_squared
from rsbeam.autodiff.complex_ops import complex_concatenate
from rsbeam.autodiff.complex_ops import complex_detach
from rsbeam.autodiff.complex_ops import complex_getitem
from rsbeam.autodiff.complex_ops import complex_hermitian_solve
from rsbeam.autodiff.complex_ops import complex_matmul
from rsbeam.autodiff.complex_ops import complex_multiply
from rsbeam.autodiff.complex_ops import complex_reshape
from rsbeam.autodiff.complex_ops import complex_scale
from rsbeam.autodiff.complex_ops import complex_scale_to_power
from rsbeam.autodiff.complex_ops import complex_swapaxes
from rsbeam.autodiff.complex_ops import conjugate
from rsbeam.autodiff.complex_pair import ComplexPair
from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor


@dataclass(frozen=True)
class SinrTerms:
    """
    Intermediate quantities shared by the rates and the auxiliary variables.
    All (B, K) except gains.
    """

    gains: ComplexPair
    common_sinr: Tensor
    private_sinr: Tensor
    common_total: Tensor
    private_total: Tensor


@dataclass(frozen=True)
class DiffAux:
    """
    Auxiliary variables as tape tensors, each (B, K).
    """

    alpha_common: Tensor
    alpha_private: Tensor
    beta_common: ComplexPair
    beta_private: ComplexPair


def _diagonal(tape: Tape, matrix: Tensor, mask: np.ndarray) -> Tensor:
    return tape.sum(tape.multiply(matrix, mask), axis=-1)


def sinr_terms(tape: Tape, channels: ComplexPair, beams: ComplexPair, noise_power: float) -> SinrTerms:
    """
    :param tape: The Tape to record on
    :param channels: (B, K, N_t) channels
    :param beams: (B, N_t, K+1) beams
    :param noise_power: sigma^2
    :return: The SinrTerms of every sample
    """
    num_users = channels.shape[-2]
    identity = np.eye(num_users)

    gains = complex_matmul(tape, conjugate(tape, channels), beams)
    powers = complex_abs_squared(tape, gains)
    private_powers = tape.getitem(powers, (Ellipsis, slice(1, None)))
    common_power = tape.getitem(powers, (Ellipsis, 0))

    desired = _diagonal(tape, private_powers, identity)
    interference = tape.add(_diagonal(tape, private_powers, 1.0 - identity), noise_power)
    private_total = tape.add(tape.sum(private_powers, axis=-1), noise_power)
    common_total = tape.add(private_total, common_power)

    return SinrTerms(gains=gains,
                     common_sinr=tape.multiply(common_power, tape.reciprocal(private_total)),
                     private_sinr=tape.multiply(desired, tape.reciprocal(interference)),
                     common_total=common_total,
                     private_total=private_total)


def sum_rates(tape: Tape, channels: ComplexPair, beams: ComplexPair, noise_power: float) -> Tensor:
    """
    :return: (B,) sum rates in bits/s/Hz
    """
    terms = sinr_terms(tape, channels, beams, noise_power)
    common_rate = tape.min(tape.log2p1(terms.common_sinr), axis=-1, name="common_rate")
    private_rates = tape.sum(tape.log2p1(terms.private_sinr), axis=-1)
    return tape.add(common_rate, private_rates, name="sum_rate")


def update_aux(tape: Tape, channels: ComplexPair, beams: ComplexPair, noise_power: float,
               detach: bool = False) -> DiffAux:
    """
    :param detach: True to stop gradients at the auxiliary variables
    :return: The optimal auxiliary variables at the beams
    """
    num_users = channels.shape[-2]
    identity = np.eye(num_users)
    terms = sinr_terms(tape, channels, beams, noise_power)

    common_gains = complex_getitem(tape, terms.gains, (Ellipsis, 0))
    private_gains = complex_getitem(tape, terms.gains, (Ellipsis, slice(1, None)))
    desired_gains = ComplexPair(_diagonal(tape, private_gains.real, identity),
                                _diagonal(tape, private_gains.imag, identity))

    common_factor = tape.multiply(tape.sqrt(tape.add(terms.common_sinr, 1.0)),
                                  tape.reciprocal(terms.common_total))
    private_factor = tape.multiply(tape.sqrt(tape.add(terms.private_sinr, 1.0)),
                                   tape.reciprocal(terms.private_total))
    aux = DiffAux(alpha_common=terms.common_sinr,
                  alpha_private=terms.private_sinr,
                  beta_common=complex_scale(tape, common_gains, common_factor),
                  beta_private=complex_scale(tape, desired_gains, private_factor))
    if detach:
        aux = DiffAux(alpha_common=tape.detach(aux.alpha_common),
                      alpha_private=tape.detach(aux.alpha_private),
                      beta_common=complex_detach(tape, aux.beta_common),
                      beta_private=complex_detach(tape, aux.beta_private))
    return aux


def _weighted_gram(tape: Tape, channels_t: ComplexPair, channels_conj: ComplexPair,
                   weights: Tensor, mu: Tensor) -> ComplexPair:
    # sum_j c_j h_j h_j^H + mu I
    num_tx = channels_t.shape[-2]
    weighted = complex_scale(tape, channels_conj, tape.reshape(weights, weights.shape + (1,)))
    gram = complex_matmul(tape, channels_t, weighted)
    loading = tape.multiply(tape.reshape(mu, mu.shape + (1, 1)), np.eye(num_tx))
    return ComplexPair(tape.add(gram.real, loading), gram.imag)


def obs_beamformers(tape: Tape, channels: ComplexPair, aux: DiffAux,
                    lambdas: Tensor, mu: Tensor) -> ComplexPair:
    """
    :param channels: (B, K, N_t) channels
    :param aux: The auxiliary variables
    :param lambdas: (B, K) simplex weights
    :param mu: (B,) positive power multipliers
    :return: (B, N_t, K+1) beams of the optimal beamforming structure
    """
    batch = lambdas.shape[:-1]
    num_users = lambdas.shape[-1]
    channels_t = complex_swapaxes(tape, channels)
    channels_conj = conjugate(tape, channels)

    common_power = complex_abs_squared(tape, aux.beta_common)
    private_power = complex_abs_squared(tape, aux.beta_private)
    lambda_common = tape.multiply(lambdas, common_power)

    common_matrix = _weighted_gram(tape, channels_t, channels_conj, lambda_common, mu)
    common_weights = complex_scale(tape, aux.beta_common,
                                   tape.multiply(tape.sqrt(tape.add(aux.alpha_common, 1.0)), lambdas))
    common_rhs = complex_matmul(tape, channels_t,
                                complex_reshape(tape, common_weights, batch + (num_users, 1)))

    private_matrix = _weighted_gram(tape, channels_t, channels_conj,
                                    tape.add(private_power, lambda_common), mu)
    private_weights = complex_scale(tape, aux.beta_private, tape.sqrt(tape.add(aux.alpha_private, 1.0)))
    private_rhs = complex_multiply(tape, channels_t,
                                   complex_reshape(tape, private_weights, batch + (1, num_users)))

    common = complex_hermitian_solve(tape, common_matrix, common_rhs)
    private = complex_hermitian_solve(tape, private_matrix, private_rhs)
    return complex_concatenate(tape, [common, private], axis=-1)


def normalize_lambda(tape: Tape, raw_lambdas: Tensor, epsilon: float) -> Tensor:
    """
    :param raw_lambdas: (B, K) non-negative network outputs
    :param epsilon: The floor
    :return: (B, K) (raw + eps) / (sum(raw) + K eps), on the simplex
    """
    num_users = raw_lambdas.shape[-1]
    numerator = tape.add(raw_lambdas, epsilon)
    denominator = tape.add(tape.sum(raw_lambdas, axis=-1, keepdims=True), num_users * epsilon)
    return tape.multiply(numerator, tape.reciprocal(denominator), name="lambda")


def rectify_power(tape: Tape, beams: ComplexPair, total_power: float) -> ComplexPair:
    """
    :return: beams rescaled so that every sample uses exactly total_power
    """
    return complex_scale_to_power(tape, beams, total_power, num_axes=2)
