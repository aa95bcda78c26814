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

import argparse
import logging

from typing import Any
from typing import Dict
from typing import List

from rsbeam.cli.setting import Setting
from rsbeam.config.config_handler import ConfigHandler
from rsbeam.config.dictionary_overlay import DictionaryOverlay
from rsbeam.errors.rejected_input_error import RejectedInputError


class SettingsResolver:
    """
    Layers the values of one subcommand:
    built-in defaults, then the config file, then the command line.

    In the config file, top-level keys apply to any subcommand that knows
    them and are ignored otherwise, so one file can serve a whole pipeline.
    Keys inside a section named after the subcommand (dashes turned into
    underscores, e.g. train_blackbox) must all be known.
    """

    def __init__(self, command: str, settings: List[Setting]):
        """
        Constructor.

        :param command: The subcommand name, e.g. "train-blackbox"
        :param settings: The Settings of that subcommand
        """
        self.command = command
        self.settings = settings

    def add_arguments(self, parser: argparse.ArgumentParser):
        """
        Adds one flag per setting.  Every flag defaults to None so that
        an untyped flag does not hide a config file value.

        :param parser: The subcommand's parser
        """
        for setting in self.settings:
            help_text = setting.help
            if setting.default not in (None, [], False):
                help_text = f"{help_text} (default {setting.default})"
            if setting.kind == "bool":
                parser.add_argument(f"--{setting.flag}", dest=setting.key, action="store_true",
                                    default=None, help=help_text)
            elif setting.kind == "list":
                parser.add_argument(f"--{setting.flag}", dest=setting.key, action="append",
                                    default=None, help=help_text)
            else:
                parser.add_argument(f"--{setting.flag}", dest=setting.key, default=None,
                                    type=self._argument_type(setting.kind), help=help_text)

    def resolve(self, args: argparse.Namespace, config_file: str = None) -> Dict[str, Any]:
        """
        :param args: The parsed command line
        :param config_file: Optional config file
        :return: Every setting of the subcommand, typed, keyed by Setting.key
        """
        logger = logging.getLogger(__name__)
        known = {setting.key for setting in self.settings}

        basis = {setting.key: setting.default for setting in self.settings}
        merged = dict(basis)
        overlay = DictionaryOverlay()

        if config_file is not None:
            file_config = ConfigHandler().import_config(config_file)
            section_name = self.command.replace("-", "_")
            section = file_config.get(section_name, {})
            if not isinstance(section, dict):
                raise RejectedInputError(f"{config_file}: '{section_name}' must be a section")

            top_level = {key: value for key, value in file_config.items()
                         if key in known and not isinstance(value, dict)}
            ignored = sorted(key for key, value in file_config.items()
                             if key not in known and not isinstance(value, dict))
            if ignored:
                logger.debug("%s ignores config keys %s", self.command, ", ".join(ignored))

            merged = overlay.overlay(merged, top_level)
            merged = overlay.overlay(merged, section, allow_overlay_only_items=False)

        command_line = {key: value for key, value in vars(args).items() if key in known}
        merged = overlay.overlay(merged, command_line)

        resolved = {}
        for setting in self.settings:
            value = setting.coerce(merged.get(setting.key))
            if setting.required and value in (None, []):
                raise RejectedInputError(f"{self.command} needs --{setting.flag} "
                                         f"or '{setting.key}' in the config file")
            resolved[setting.key] = value
        return resolved

    @staticmethod
    def _argument_type(kind: str):
        if kind == "int":
            return int
        if kind == "float":
            return float
        return str
