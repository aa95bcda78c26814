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

import logging
import logging.config
import os
import sys

from typing import Any
from typing import Dict
from typing import Union

from rsbeam.config.config_handler import ConfigHandler


DEFAULT_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class LoggingSetup:
    """
    Sets up python logging for the command line tools, either from a
    JSON/HOCON/YAML logging config or with a plain basicConfig at some level.

    Precedence for the config file: explicit logging_config, then the
    log_config_env environment variable.  Precedence for the level:
    explicit log_level, then the log_level_env environment variable,
    then default_log_level.  The level only matters without a config file.
    """

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def __init__(self, default_log_level: str = "INFO",
                 log_config_env: str = "RSBEAM_LOG_CONFIG",
                 log_level_env: str = "RSBEAM_LOG_LEVEL",
                 log_level: str = None,
                 logging_config: Union[str, Dict[str, Any]] = None):
        """
        Constructor.

        :param default_log_level: The log level if nothing else says otherwise.
                        Default is 'INFO'
        :param log_config_env: Environment variable name from which to get
                        a logging config file. None disables the lookup.
        :param log_level_env: Environment variable name from which to get
                        a log level. None disables the lookup.
        :param log_level: Explicit log level, usually from --log-level
        :param logging_config: Config reference. Can be a file path or a
                        dictConfig dictionary.  Usually from --log-config
        """
        self.default_log_level = default_log_level
        self.log_config_env = log_config_env
        self.log_level_env = log_level_env
        self.log_level = log_level
        self.logging_config = logging_config

    def setup(self):
        """
        Actually set up the logging per the parameters in the constructor.
        """
        config = self.logging_config
        log_config_file_path = self.determine_log_config_file_path()
        if log_config_file_path is not None:
            config = ConfigHandler().import_config(log_config_file_path)

        if config is not None and isinstance(config, dict):
            logging.config.dictConfig(config)
            return

        logging.basicConfig(stream=sys.stderr,
                            format=DEFAULT_FORMAT,
                            level=self.determine_log_level(),
                            force=True)

    def determine_log_config_file_path(self) -> str:
        """
        :return: The absolute path of the logging config file, or None
                when logging should be set up from the level alone
        """
        if isinstance(self.logging_config, dict):
            return None

        path = self.logging_config
        if path is None and self.log_config_env is not None:
            path = os.environ.get(self.log_config_env)

        if not path:
            return None
        return os.path.abspath(path)

    def determine_log_level(self) -> str:
        """
        This is only used when no config file is found.
        :return: The upper-cased log level for a basicConfig
        """
        log_level = self.log_level
        if log_level is None and self.log_level_env is not None:
            log_level = os.environ.get(self.log_level_env)
        if not log_level:
            log_level = self.default_log_level
        return log_level.upper()
