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

from typing import Tuple

import numpy as np

from rsbeam.autodiff.complex_pair import ComplexPair
from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.bench.blackbox_model import BlackboxModel
from rsbeam.data.beam_label_set import BeamLabelSet
from rsbeam.data.channel_dataset import ChannelDataset
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.rate_calculator import batch_sum_rates
from rsbeam.model.system_config import SystemConfig
from rsbeam.progress.progress_reporter import ProgressReporter
from rsbeam.rsbnn.losses import mse_loss
from rsbeam.rsbnn.losses import unsupervised_loss
from rsbeam.rsbnn.phased_trainer import PhasedTrainer
from rsbeam.rsbnn.train_config import TrainConfig
from rsbeam.rsbnn.training_history import TrainingHistory
from rsbeam.rsbnn.training_phase import TrainingPhase
from rsbeam.rsbnn.training_set import TrainingSet


def _flatten(tape: Tape, beams: ComplexPair) -> Tensor:
    batch = beams.shape[0]
    real = tape.reshape(tape.swapaxes(beams.real), (batch, -1))
    imag = tape.reshape(tape.swapaxes(beams.imag), (batch, -1))
    return tape.concatenate([real, imag], axis=-1)


class BlackboxTrainer:
    """
    Trains a BlackboxModel with the same two-phase schedule as the unfolded
    network: mean-square error against the flattened FP-HFPI beams first,
    then the negative mean sum rate.
    """

    def __init__(self, cfg: SystemConfig, tcfg: TrainConfig, progress: ProgressReporter = None):
        """
        Constructor.

        :param cfg: The SystemConfig of the training data
        :param tcfg: The TrainConfig
        :param progress: An optional ProgressReporter
        """
        self.cfg = cfg
        self.tcfg = tcfg
        self.progress = progress

    def train(self, model: BlackboxModel, training_set: TrainingSet) -> TrainingHistory:
        """
        :param model: The BlackboxModel; its parameters are updated in place
        :param training_set: Channels with flattened beam labels as targets
        :return: The TrainingHistory
        """
        cfg = self.cfg

        def supervised(tape: Tape, batch: TrainingSet) -> Tensor:
            return mse_loss(tape, _flatten(tape, model.forward(tape, cfg, batch.channels)), batch.targets)

        def unsupervised(tape: Tape, batch: TrainingSet) -> Tensor:
            return unsupervised_loss(tape, ComplexPair.from_complex(batch.channels),
                                     model.forward(tape, cfg, batch.channels), cfg.noise_power)

        def sum_rates(channels: np.ndarray) -> np.ndarray:
            return batch_sum_rates(channels, model.infer(cfg, channels), cfg.noise_power)

        phases = [TrainingPhase("supervised", self.tcfg.supervised_epochs, supervised),
                  TrainingPhase("unsupervised", self.tcfg.unsupervised_epochs, unsupervised, non_worsening=True)]
        return PhasedTrainer(self.tcfg, self.progress).train(model.parameters(), training_set,
                                                             phases, sum_rates)


def blackbox_train(cfg: SystemConfig, channels: np.ndarray, flat_beams: np.ndarray,
                   tcfg: TrainConfig) -> BlackboxModel:
    """
    :param cfg: The SystemConfig
    :param channels: (N, K, N_t) channels of the labeled samples
    :param flat_beams: (N, 2 N_t (K+1)) flattened FP-HFPI beams
    :param tcfg: The TrainConfig
    :return: The trained BlackboxModel
    """
    model = BlackboxModel.initialize(cfg.num_users, cfg.num_tx_antennas, tcfg.seed)
    training_set = TrainingSet(channels=np.asarray(channels, dtype=np.complex128),
                               targets=np.asarray(flat_beams, dtype=np.float64))
    BlackboxTrainer(cfg, tcfg).train(model, training_set)
    return model


def blackbox_infer(model: BlackboxModel, cfg: SystemConfig, channels: np.ndarray) -> np.ndarray:
    """
    :return: (B, N_t, K+1) beams of the black-box model
    """
    return model.infer(cfg, channels)


def train_blackbox(dataset: ChannelDataset, beam_labels: BeamLabelSet, tcfg: TrainConfig,
                   progress: ProgressReporter = None,
                   hidden_dim: int = None) -> Tuple[BlackboxModel, TrainingHistory]:
    """
    Trains a fresh BlackboxModel on the FP-HFPI beams of a dataset.

    :param dataset: The ChannelDataset
    :param beam_labels: The BeamLabelSet generated from that dataset
    :param tcfg: The TrainConfig; its seed also seeds the weight initialization
    :param progress: An optional ProgressReporter
    :param hidden_dim: Width of both hidden layers. Default of None means 4 * 2 K N_t.
    :return: A tuple of (trained BlackboxModel, TrainingHistory)
    """
    if not beam_labels.matches(dataset):
        raise RejectedInputError(f"Beam labels for {beam_labels.dataset_count} samples with seed "
                                 f"{beam_labels.dataset_seed} do not belong to a dataset of {len(dataset)} "
                                 f"samples with seed {dataset.seed}")
    if len(beam_labels) == 0:
        raise RejectedInputError("No labeled samples to train on")

    cfg = dataset.system_config()
    model = BlackboxModel.initialize(cfg.num_users, cfg.num_tx_antennas, tcfg.seed, hidden_dim)
    training_set = TrainingSet(channels=dataset.channels[beam_labels.indices],
                               targets=beam_labels.flattened())
    history = BlackboxTrainer(cfg, tcfg, progress).train(model, training_set)
    return model, history
