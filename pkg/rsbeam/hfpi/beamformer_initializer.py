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
Warm start shared by FP-HFPI and the unfolded network.
"""

import numpy as np

from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.system_config import SystemConfig


def batch_init_beamformers(channels: np.ndarray, total_power: float) -> np.ndarray:
    """
    Half the power goes to matched-filter private beams split equally between
    users, the other half to a common beam along the principal eigenvector of
    the average channel covariance.

    :param channels: (..., K, N_t) complex channels
    :param total_power: P_t
    :return: (..., N_t, K+1) beam matrices using exactly P_t
    """
    channels = np.asarray(channels, dtype=np.complex128)
    num_users = channels.shape[-2]

    norms = np.linalg.norm(channels, axis=-1)
    if np.any(norms == 0.0):
        raise RejectedInputError("Cannot build a matched filter for an all-zero channel")

    directions = channels / norms[..., np.newaxis]
    private = np.sqrt(total_power / (2.0 * num_users)) * np.swapaxes(directions, -1, -2)

    # sum_k h_k h_k^H / K with h_k the rows of channels
    covariance = np.matmul(np.swapaxes(channels, -1, -2), np.conj(channels)) / num_users
    _, eigenvectors = np.linalg.eigh(covariance)
    principal = eigenvectors[..., :, -1]
    common = np.sqrt(total_power / 2.0) * principal

    return np.concatenate([common[..., np.newaxis], private], axis=-1)


def init_beamformers(cfg: SystemConfig, sample: ChannelSample) -> np.ndarray:
    """
    :param cfg: The SystemConfig
    :param sample: The ChannelSample
    :return: A feasible N_t x (K+1) beam matrix with power_used == P_t
    """
    if sample.channels.shape != (cfg.num_users, cfg.num_tx_antennas):
        raise RejectedInputError(f"channels have shape {sample.channels.shape}, config expects "
                                 f"{(cfg.num_users, cfg.num_tx_antennas)}")
    return batch_init_beamformers(sample.channels, cfg.total_power)
