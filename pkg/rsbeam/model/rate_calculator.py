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
SINR, rate and power arithmetic of 1-layer rate splitting.

A beam matrix ("BeamMatrix" in the docs) is an N_t x (K+1) complex128 array.
Column 0 is the common beamformer p_0 and column k is the private beamformer
p_k of user k.  Channels are K x N_t with h_k in row k, so that the matrix of
all inner products h_k^H p_i is channels.conj() @ beams.

Everything here is vectorized over optional leading batch axes:
channels (..., K, N_t) against beams (..., N_t, K+1).
"""

from typing import Tuple

import numpy as np

from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.rate_report import RateReport
from rsbeam.model.system_config import SystemConfig


def validate_beams(cfg: SystemConfig, sample: ChannelSample, beams: np.ndarray) -> np.ndarray:
    """
    :param cfg: The SystemConfig the arguments should agree with
    :param sample: The ChannelSample
    :param beams: The candidate beam matrix
    :return: beams as a complex128 array
    """
    beams = np.asarray(beams, dtype=np.complex128)
    expected_channels = (cfg.num_users, cfg.num_tx_antennas)
    if sample.channels.shape != expected_channels:
        raise RejectedInputError(f"channels have shape {sample.channels.shape}, "
                                 f"config expects {expected_channels}")
    expected_beams = (cfg.num_tx_antennas, cfg.num_streams)
    if beams.shape != expected_beams:
        raise RejectedInputError(f"beam matrix has shape {beams.shape}, config expects {expected_beams}")
    return beams


def stream_gains(channels: np.ndarray, beams: np.ndarray) -> np.ndarray:
    """
    :param channels: (..., K, N_t) complex channels
    :param beams: (..., N_t, K+1) complex beam matrices
    :return: (..., K, K+1) array of h_k^H p_i
    """
    return np.matmul(np.conj(channels), beams)


def batch_sinrs(channels: np.ndarray, beams: np.ndarray,
                noise_power: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    :param channels: (..., K, N_t) complex channels
    :param beams: (..., N_t, K+1) complex beam matrices
    :param noise_power: sigma^2
    :return: A tuple of (..., K) arrays: common-stream SINRs and private SINRs
    """
    powers = np.abs(stream_gains(channels, beams)) ** 2
    num_users = powers.shape[-2]

    private_powers = powers[..., 1:]
    desired = np.diagonal(private_powers, axis1=-2, axis2=-1)
    off_diagonal = 1.0 - np.eye(num_users)
    interference = np.sum(private_powers * off_diagonal, axis=-1) + noise_power
    all_private = interference + desired

    common = powers[..., 0] / all_private
    private = desired / interference
    return common, private


def batch_sum_rates(channels: np.ndarray, beams: np.ndarray, noise_power: float) -> np.ndarray:
    """
    :param channels: (..., K, N_t) complex channels
    :param beams: (..., N_t, K+1) complex beam matrices
    :param noise_power: sigma^2
    :return: (...) array of sum rates in bits/s/Hz
    """
    common, private = batch_sinrs(channels, beams, noise_power)
    common_rate = np.min(np.log2(1.0 + common), axis=-1)
    return common_rate + np.sum(np.log2(1.0 + private), axis=-1)


def compute_sinrs(cfg: SystemConfig, sample: ChannelSample,
                  beams: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    :param cfg: The SystemConfig
    :param sample: The ChannelSample
    :param beams: N_t x (K+1) beam matrix
    :return: A tuple of length-K arrays (gamma_common, gamma_private)
    """
    beams = validate_beams(cfg, sample, beams)
    return batch_sinrs(sample.channels, beams, cfg.noise_power)


def rate_report(cfg: SystemConfig, sample: ChannelSample, beams: np.ndarray) -> RateReport:
    """
    :param cfg: The SystemConfig
    :param sample: The ChannelSample
    :param beams: N_t x (K+1) beam matrix
    :return: The RateReport for the beams
    """
    common, private = compute_sinrs(cfg, sample, beams)
    per_user_common_rates = np.log2(1.0 + common)
    private_rates = np.log2(1.0 + private)
    common_rate = float(np.min(per_user_common_rates))
    return RateReport(common_rate=common_rate,
                      private_rates=private_rates,
                      per_user_common_rates=per_user_common_rates,
                      sum_rate=common_rate + float(np.sum(private_rates)))


def power_used(beams: np.ndarray) -> float:
    """
    :param beams: Any complex beam matrix
    :return: trace(P P^H), the squared Frobenius norm
    """
    beams = np.asarray(beams, dtype=np.complex128)
    return float(np.vdot(beams, beams).real)
