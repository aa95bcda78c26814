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
See class comment for details.
"""

import copy
import json

from collections.abc import Mapping
from typing import Any
from typing import Dict

from pyhocon import ConfigFactory
from ruamel.yaml import YAML

from rsbeam.errors.rejected_input_error import RejectedInputError
from rsbeam.persistence.local_file_persistence_mechanism import LocalFilePersistenceMechanism


class ConfigHandler:
    """
    Reads configuration dictionaries for the command line tools.
    The file extension picks the parser.
    """

    def import_config(self, config_source, default_config: Dict[str, Any] = None,
                      must_exist: bool = True) -> Dict[str, Any]:
        """
        Main entry point for reading config files
        :param config_source: Either a string filename reference to a
                config dictionary to be read from the file, or
                a config dictionary in and of itself
        :param default_config: A config dictionary to be used as a default.
                When supplied, anything read from config_source is overlayed
                on top of it.
        :param must_exist: Default True.  When True, a missing file raises
                FileNotFoundError.  When False, a missing file reads as empty.
        :return: The merged configuration dictionary
        """
        config = {}
        if default_config is not None and isinstance(default_config, dict):
            config = copy.deepcopy(default_config)

        update_source = {}
        if isinstance(config_source, str):
            update_source = self.read_config_from_file(config_source, must_exist)
        elif isinstance(config_source, dict):
            update_source = config_source

        return self.deep_update(config, update_source)

    def deep_update(self, dest: Dict[str, Any], source: Mapping) -> Dict[str, Any]:
        """
        Recursively copies source into dest.
        :return: dest
        """
        for key, value in source.items():
            if isinstance(value, Mapping):
                dest[key] = self.deep_update(dest.get(key, {}), value)
            else:
                dest[key] = value
        return dest

    def read_config_from_file(self, filepath: str, must_exist: bool) -> Dict[str, Any]:
        """
        :param filepath: The file to parse
        :param must_exist: When True, a missing file raises FileNotFoundError
        :return: The dictionary parsed from the config file
        """
        file_extension_to_parser_map = {
            '.conf': self.parse_hocon,
            '.hocon': self.parse_hocon,
            # json is kept away from the hocon parser, which is slow on big files
            '.json': self.parse_json,
            '.properties': self.parse_hocon,
            '.yaml': self.parse_yaml,
            '.yml': self.parse_yaml,
        }

        parser = None
        for file_extension, method in file_extension_to_parser_map.items():
            if filepath.endswith(file_extension):
                parser = method

        if parser is None:
            raise RejectedInputError(f"Could not read {filepath} as config. Unknown file extension.")

        mechanism = LocalFilePersistenceMechanism(must_exist=must_exist)
        fileobj = mechanism.open_source_for_read(filepath)
        if fileobj is None:
            return {}

        with fileobj:
            text = fileobj.read().decode("utf-8")
        config = parser(text)
        if config is None:
            config = {}
        if not isinstance(config, dict):
            raise RejectedInputError(f"Config file {filepath} does not hold a dictionary")
        return config

    @staticmethod
    def parse_json(text: str) -> Dict[str, Any]:
        """
        :param text: json text
        :return: The parsed dictionary
        """
        return json.loads(text)

    @staticmethod
    def parse_hocon(text: str) -> Dict[str, Any]:
        """
        :param text: HOCON or key=value properties text
        :return: The parsed dictionary
        """
        parsed = ConfigFactory.parse_string(text)

        # pyhocon hands back ConfigTree structures for nested dictionaries.
        # A json round trip turns everything into plain dictionaries.
        return json.loads(json.dumps(parsed))

    @staticmethod
    def parse_yaml(text: str) -> Dict[str, Any]:
        """
        :param text: yaml text
        :return: The parsed dictionary
        """
        yaml = YAML(typ='safe', pure=True)
        return yaml.load(text)
