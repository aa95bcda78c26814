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

from dataclasses import dataclass

import numpy as np

from rsbeam.autodiff.adam_optimizer import adam_step
from rsbeam.autodiff.adam_state import AdamState
from rsbeam.autodiff.complex_pair import ComplexPair
from rsbeam.autodiff.gradient import gradient
from rsbeam.autodiff.tape import Tape
from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.rate_calculator import batch_sum_rates
from rsbeam.model.system_config import SystemConfig
from rsbeam.rsbnn.unfolded_blocks import sum_rates


@dataclass(frozen=True)
class OracleResult:
    """
    Best beams found by the brute-force search.
    """

    sum_rate: float
    beams: np.ndarray


class ProjectedGradientOracle:
    """
    Brute-force reference for small systems.

    Draws many random beam matrices on the power sphere and refines each by
    gradient ascent on the exact sum rate, projecting back into the power
    ball after every step.  Restarts are processed as one batch per chunk,
    so gradients come from a single reverse sweep per step.  The best sum
    rate seen at any step of any restart is returned.
    """

    def __init__(self, restarts: int = 10000, steps: int = 200, step_size: float = 0.02,
                 seed: int = 0, chunk_size: int = 1000):
        """
        Constructor.

        :param restarts: Number of random starting points
        :param steps: Ascent steps per restart
        :param step_size: Adam step size relative to sqrt(P_t)
        :param seed: Seed of the random starting points
        :param chunk_size: Restarts refined together in one batch
        """
        if restarts < 1 or steps < 0 or chunk_size < 1 or not step_size > 0.0:
            raise RejectedInputError("restarts and chunk_size must be >= 1, steps >= 0 and step_size > 0")
        self.restarts = restarts
        self.steps = steps
        self.step_size = step_size
        self.seed = seed
        self.chunk_size = chunk_size

    def search(self, cfg: SystemConfig, sample: ChannelSample) -> OracleResult:
        """
        :param cfg: The SystemConfig
        :param sample: The ChannelSample
        :return: The OracleResult
        """
        logger = logging.getLogger(__name__)
        rng = np.random.default_rng(self.seed)
        best = OracleResult(sum_rate=-np.inf, beams=None)

        for start in range(0, self.restarts, self.chunk_size):
            count = min(self.chunk_size, self.restarts - start)
            shape = (count, cfg.num_tx_antennas, cfg.num_streams)
            beams = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
            beams = self._project(beams, cfg.total_power, onto_sphere=True)
            candidate = self._refine(cfg, sample, beams)
            if candidate.sum_rate > best.sum_rate:
                best = candidate

        logger.debug("Oracle best sum rate %s over %d restarts", best.sum_rate, self.restarts)
        return best

    def _refine(self, cfg: SystemConfig, sample: ChannelSample, beams: np.ndarray) -> OracleResult:
        count = beams.shape[0]
        channels = np.broadcast_to(sample.channels, (count,) + sample.channels.shape)
        channel_pair = ComplexPair.from_complex(channels)
        learning_rate = self.step_size * np.sqrt(cfg.total_power)

        values = [beams.real.copy(), beams.imag.copy()]
        state = AdamState.zeros_like(values)
        best_rates = batch_sum_rates(channels, beams, cfg.noise_power)
        best_beams = beams.copy()

        for _ in range(self.steps):
            tape = Tape()
            pair = ComplexPair.from_complex(values[0] + 1j * values[1], requires_grad=True)
            loss = tape.scale(tape.sum(sum_rates(tape, channel_pair, pair, cfg.noise_power)), -1.0)
            grads = gradient(tape, loss, [pair.real, pair.imag])
            values, state = adam_step(values, [grad.values for grad in grads], state, learning_rate)

            current = self._project(values[0] + 1j * values[1], cfg.total_power, onto_sphere=False)
            values = [current.real.copy(), current.imag.copy()]
            rates = batch_sum_rates(channels, current, cfg.noise_power)
            improved = rates > best_rates
            best_rates = np.where(improved, rates, best_rates)
            best_beams[improved] = current[improved]

        winner = int(np.argmax(best_rates))
        return OracleResult(sum_rate=float(best_rates[winner]), beams=best_beams[winner])

    @staticmethod
    def _project(beams: np.ndarray, total_power: float, onto_sphere: bool) -> np.ndarray:
        power = np.sum(np.abs(beams) ** 2, axis=(-2, -1), keepdims=True)
        factor = np.sqrt(total_power / power)
        if not onto_sphere:
            factor = np.minimum(factor, 1.0)
        return beams * factor


def projected_gradient_oracle(cfg: SystemConfig, sample: ChannelSample, restarts: int = 10000,
                              steps: int = 200, seed: int = 0) -> float:
    """
    :return: The best sum rate ProjectedGradientOracle finds
    """
    return ProjectedGradientOracle(restarts=restarts, steps=steps, seed=seed).search(cfg, sample).sum_rate
