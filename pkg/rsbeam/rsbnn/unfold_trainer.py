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
from rsbeam.data.channel_dataset import ChannelDataset
from rsbeam.data.label_set import LabelSet
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.rate_calculator import batch_sum_rates
from rsbeam.model.system_config import SystemConfig
from rsbeam.progress.progress_reporter import ProgressReporter
from rsbeam.rsbnn.losses import supervised_loss
from rsbeam.rsbnn.losses import unsupervised_loss
from rsbeam.rsbnn.phased_trainer import PhasedTrainer
from rsbeam.rsbnn.train_config import TrainConfig
from rsbeam.rsbnn.training_history import TrainingHistory
from rsbeam.rsbnn.training_phase import TrainingPhase
from rsbeam.rsbnn.training_set import TrainingSet
from rsbeam.rsbnn.unfold_config import UnfoldConfig
from rsbeam.rsbnn.unfold_model import UnfoldModel
from rsbeam.rsbnn.unfolded_network import unfold_forward
from rsbeam.rsbnn.unfolded_network import unfold_infer


SUPERVISED = "supervised"
UNSUPERVISED = "unsupervised"


class UnfoldTrainer:
    """
    Two-phase training of an UnfoldModel.

    The supervised phase fits the first and last layer's dual variables to
    the FP-HFPI labels.  The unsupervised phase then maximizes the sum rate
    directly and never looks at the labels; it is rolled back if it leaves
    the training set with a lower mean sum rate than it started with.
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

    @staticmethod
    def make_training_set(channels: np.ndarray, xi_first: np.ndarray, xi_last: np.ndarray) -> TrainingSet:
        """
        :param channels: (N, K, N_t) channels of the labeled samples
        :param xi_first: (N, K+1) labels of the first AO iteration
        :param xi_last: (N, K+1) labels at convergence
        :return: A TrainingSet whose targets are [xi_first, xi_last]
        """
        xi_first = np.asarray(xi_first, dtype=np.float64)
        xi_last = np.asarray(xi_last, dtype=np.float64)
        if xi_first.shape != xi_last.shape or xi_first.shape[-1:] != (channels.shape[1] + 1,):
            raise RejectedInputError(f"Labels of shape {xi_first.shape} and {xi_last.shape} do not "
                                     f"fit K={channels.shape[1]}")
        return TrainingSet(channels=np.asarray(channels, dtype=np.complex128),
                           targets=np.concatenate([xi_first, xi_last], axis=1))

    def train(self, model: UnfoldModel, training_set: TrainingSet) -> TrainingHistory:
        """
        :param model: The UnfoldModel; its parameters are updated in place
        :param training_set: See make_training_set()
        :return: The TrainingHistory of both phases
        """
        cfg = self.cfg
        num_streams = cfg.num_streams

        def supervised(tape: Tape, batch: TrainingSet) -> Tensor:
            trace = unfold_forward(tape, model, cfg, batch.channels)
            return supervised_loss(tape, trace, batch.targets[:, :num_streams], batch.targets[:, num_streams:])

        def unsupervised(tape: Tape, batch: TrainingSet) -> Tensor:
            trace = unfold_forward(tape, model, cfg, batch.channels)
            return unsupervised_loss(tape, ComplexPair.from_complex(batch.channels),
                                     trace.final_beams, cfg.noise_power)

        def sum_rates(channels: np.ndarray) -> np.ndarray:
            return batch_sum_rates(channels, unfold_infer(model, cfg, channels), cfg.noise_power)

        phases = [TrainingPhase(SUPERVISED, self.tcfg.supervised_epochs, supervised),
                  TrainingPhase(UNSUPERVISED, self.tcfg.unsupervised_epochs, unsupervised, non_worsening=True)]
        trainer = PhasedTrainer(self.tcfg, self.progress)
        return trainer.train(model.parameters(), training_set, phases, sum_rates)


def train_unfolded(dataset: ChannelDataset, labels: LabelSet, ucfg: UnfoldConfig, tcfg: TrainConfig,
                   progress: ProgressReporter = None) -> Tuple[UnfoldModel, TrainingHistory]:
    """
    Trains a fresh UnfoldModel on the labeled samples of a dataset.

    :param dataset: The ChannelDataset
    :param labels: The LabelSet generated from that dataset
    :param ucfg: The UnfoldConfig
    :param tcfg: The TrainConfig; its seed also seeds the weight initialization
    :param progress: An optional ProgressReporter
    :return: A tuple of (trained UnfoldModel, TrainingHistory)
    """
    if not labels.matches(dataset):
        raise RejectedInputError(f"Labels for {labels.dataset_count} samples with seed {labels.dataset_seed} "
                                 f"do not belong to a dataset of {len(dataset)} samples with seed {dataset.seed}")
    if len(labels) == 0:
        raise RejectedInputError("No labeled samples to train on")

    cfg = dataset.system_config()
    model = UnfoldModel.initialize(cfg.num_users, cfg.num_tx_antennas, ucfg, tcfg.seed)
    training_set = UnfoldTrainer.make_training_set(dataset.channels[labels.indices],
                                                   labels.xi_first, labels.xi_last)
    history = UnfoldTrainer(cfg, tcfg, progress).train(model, training_set)
    return model, history
