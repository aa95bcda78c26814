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

import logging

from typing import Callable
from typing import List
from typing import Sequence
from typing import Tuple

import numpy as np

from rsbeam.autodiff.adam_optimizer import AdamOptimizer
from rsbeam.autodiff.gradient import gradient
from rsbeam.autodiff.tape import Tape
from rsbeam.autodiff.tensor import Tensor
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.log_utils.message_type import MessageType
from rsbeam.log_utils.structured_message import log_structured
from rsbeam.progress.progress_reporter import ProgressReporter
from rsbeam.rsbnn.epoch_record import EpochRecord
from rsbeam.rsbnn.train_config import TrainConfig
from rsbeam.rsbnn.training_history import TrainingHistory
from rsbeam.rsbnn.training_phase import TrainingPhase
from rsbeam.rsbnn.training_set import TrainingSet


# spawn_key of the seed stream used for the train/validation split
SPLIT_STREAM = 0xFFFF


class PhasedTrainer:
    """
    Mini-batch Adam over a sequence of TrainingPhases with per-phase early
    stopping.

    A seeded permutation holds out validation_fraction of the samples once,
    and each epoch reshuffles the rest with a seed derived from
    (seed, phase, epoch), so a rerun with the same TrainConfig reproduces the
    history bit for bit.

    Within a phase the validation loss of the phase is tracked.  After
    patience epochs without a strict improvement the phase stops, and in any
    case it ends with the weights that scored best on validation (the
    starting weights count as a candidate).  Counters and optimizer moments
    start afresh with every phase.
    """

    def __init__(self, tcfg: TrainConfig, progress: ProgressReporter = None):
        """
        Constructor.

        :param tcfg: The TrainConfig
        :param progress: An optional ProgressReporter told about every epoch
        """
        self.tcfg = tcfg
        self.progress = progress

    def split(self, training_set: TrainingSet) -> Tuple[TrainingSet, TrainingSet]:
        """
        :param training_set: All labeled samples
        :return: A tuple of (training part, validation part).  With a single
                sample both parts are that sample.
        """
        count = len(training_set)
        if count < 2:
            return training_set, training_set
        rng = np.random.default_rng(np.random.SeedSequence(entropy=self.tcfg.seed, spawn_key=(SPLIT_STREAM,)))
        order = rng.permutation(count)
        num_validation = min(count - 1, max(1, int(round(self.tcfg.validation_fraction * count))))
        return (training_set.subset(np.sort(order[num_validation:])),
                training_set.subset(np.sort(order[:num_validation])))

    def evaluate(self, loss: Callable[[Tape, TrainingSet], Tensor], samples: TrainingSet) -> float:
        """
        :param loss: A phase loss
        :param samples: The samples to evaluate on
        :return: The loss over all samples, evaluated batch by batch without recording
        """
        total = 0.0
        batch_size = self.tcfg.batch_size
        for start in range(0, len(samples), batch_size):
            batch = samples.subset(np.arange(start, min(start + batch_size, len(samples))))
            total += loss(Tape(record=False), batch).item() * len(batch)
        return total / len(samples)

    def train(self, params: Sequence[Tensor], training_set: TrainingSet, phases: Sequence[TrainingPhase],
              sum_rates: Callable[[np.ndarray], np.ndarray]) -> TrainingHistory:
        """
        :param params: The parameter Tensors to train; updated in place
        :param training_set: All labeled samples
        :param phases: The phases to run, in order
        :param sum_rates: Maps (B, K, N_t) channels to the (B,) sum rates the
                current parameters achieve.  Used for the validation metric.
        :return: The TrainingHistory
        """
        if len(training_set) == 0:
            raise RejectedInputError("Cannot train on an empty dataset")

        params = list(params)
        train_part, validation_part = self.split(training_set)
        history = TrainingHistory()
        for phase_index, phase in enumerate(phases):
            if phase.epochs > 0:
                self.run_phase(params, phase, phase_index, training_set, train_part,
                               validation_part, sum_rates, history)
        return history

    # pylint: disable=too-many-arguments,too-many-locals
    def run_phase(self, params: List[Tensor], phase: TrainingPhase, phase_index: int,
                  training_set: TrainingSet, train_part: TrainingSet, validation_part: TrainingSet,
                  sum_rates: Callable[[np.ndarray], np.ndarray], history: TrainingHistory):
        """
        Runs one phase, appending its epochs to history.
        """
        logger = logging.getLogger(__name__)
        tcfg = self.tcfg

        starting_values = _snapshot(params)
        starting_loss = None
        if phase.non_worsening:
            starting_loss = self.evaluate(phase.loss, training_set)

        optimizer = AdamOptimizer(params, tcfg.learning_rate)
        best_loss = self.evaluate(phase.loss, validation_part)
        best_values = starting_values
        epochs_without_improvement = 0

        for epoch in range(1, phase.epochs + 1):
            rng = np.random.default_rng(np.random.SeedSequence(entropy=tcfg.seed, spawn_key=(phase_index, epoch)))
            order = rng.permutation(len(train_part))
            total = 0.0
            for start in range(0, len(order), tcfg.batch_size):
                batch = train_part.subset(order[start:start + tcfg.batch_size])
                tape = Tape()
                loss = phase.loss(tape, batch)
                optimizer.step(gradient(tape, loss, params))
                total += loss.item() * len(batch)

            record = EpochRecord(phase=phase.name,
                                 epoch=epoch,
                                 train_loss=total / len(train_part),
                                 validation_loss=self.evaluate(phase.loss, validation_part),
                                 validation_mean_sr=float(np.mean(sum_rates(validation_part.channels))))
            history.append(record)
            if self.progress is not None:
                self.progress.report({"phase": record.phase, "epoch": record.epoch,
                                      "epochs": phase.epochs, "train_loss": record.train_loss,
                                      "validation_loss": record.validation_loss,
                                      "validation_mean_sr": record.validation_mean_sr})

            if record.validation_loss < best_loss:
                best_loss = record.validation_loss
                best_values = _snapshot(params)
                epochs_without_improvement = 0
            else:
                epochs_without_improvement += 1
                if epochs_without_improvement >= tcfg.patience:
                    logger.info("Phase %s stopped early after epoch %d", phase.name, epoch)
                    break

        _restore(params, best_values)

        if phase.non_worsening:
            final_loss = self.evaluate(phase.loss, training_set)
            if final_loss > starting_loss:
                _restore(params, starting_values)
                log_structured("rsbeam.train", "Phase made the training loss worse, reverted", logger,
                               message_type=MessageType.Warning,
                               extra_properties={"phase": phase.name, "before": starting_loss,
                                                 "after": final_loss})


def _snapshot(params: Sequence[Tensor]) -> List[np.ndarray]:
    return [param.values.copy() for param in params]


def _restore(params: Sequence[Tensor], values: Sequence[np.ndarray]):
    for param, value in zip(params, values):
        param.values = value.copy()
