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

from rsbeam.bench.complexity import RS_BNN
from rsbeam.bench.complexity import complexity_estimate
from rsbeam.bench.scheme_runner import SchemeRunner
from rsbeam.model.channel_sample import ChannelSample
from rsbeam.model.system_config import SystemConfig
from rsbeam.rsbnn.unfold_model import UnfoldModel
from rsbeam.rsbnn.unfolded_network import unfold_infer


class UnfoldRunner(SchemeRunner):
    """
    Runs inference of a trained unfolded network one sample at a time.
    Feature assembly happens inside the timed call.
    """

    def __init__(self, model: UnfoldModel):
        """
        Constructor.

        :param model: The trained UnfoldModel
        """
        self._model = model

    @property
    def name(self) -> str:
        return RS_BNN

    def solve(self, cfg: SystemConfig, sample: ChannelSample) -> np.ndarray:
        self.check_dimensions(RS_BNN, self._model.num_users, self._model.num_tx_antennas, cfg)
        return unfold_infer(self._model, cfg, sample.channels[np.newaxis])[0]

    def summary(self, cfg: SystemConfig) -> Dict[str, Any]:
        ucfg = self._model.ucfg
        return {
            "layers": ucfg.num_layers,
            "hidden": ucfg.hidden_dim,
            "complexity": complexity_estimate(RS_BNN, cfg.num_users, cfg.num_tx_antennas,
                                              num_layers=ucfg.num_layers, hidden_dim=ucfg.hidden_dim),
        }
