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

from typing import Any
from typing import Dict

import numpy as np

from rsbeam.bench.blackbox_model import BlackboxModel
from rsbeam.bench.complexity import BLACKBOX_MLP
from rsbeam.bench.complexity import complexity_estimate
from rsbeam.bench.scheme_runner import SchemeRunner
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.system_config import SystemConfig


class BlackboxRunner(SchemeRunner):
    """
    Runs the dense black-box baseline one sample at a time.
    """

    def __init__(self, model: BlackboxModel):
        """
        Constructor.

        :param model: The trained BlackboxModel
        """
        self._model = model

    @property
    def name(self) -> str:
        return BLACKBOX_MLP

    def solve(self, cfg: SystemConfig, sample: ChannelSample) -> np.ndarray:
        self.check_dimensions(BLACKBOX_MLP, self._model.num_users, self._model.num_tx_antennas, cfg)
        return self._model.infer(cfg, sample.channels[np.newaxis])[0]

    def summary(self, cfg: SystemConfig) -> Dict[str, Any]:
        return {
            "hidden": self._model.hidden_dim,
            "architecture": "dense",
            "complexity": complexity_estimate(BLACKBOX_MLP, cfg.num_users, cfg.num_tx_antennas,
                                              blackbox_hidden_dim=self._model.hidden_dim),
        }
