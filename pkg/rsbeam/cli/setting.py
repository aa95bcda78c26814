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

from dataclasses import dataclass
from typing import Any
from typing import List

from rsbeam.errors.rejected_input_error import RejectedInputError


KINDS = ("int", "float", "str", "bool", "list")


@dataclass(frozen=True)
class Setting:
    """
    One configurable value of a subcommand.

    The same value can come from the built-in default, a config file key
    (the flag name with dashes turned into underscores) or the flag itself.
    """

    flag: str
    kind: str
    default: Any = None
    required: bool = False
    help: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RejectedInputError(f"Unknown setting kind '{self.kind}' for --{self.flag}")

    @property
    def key(self) -> str:
        """
        :return: The config file key and argparse dest of this setting
        """
        return self.flag.replace("-", "_")

    def coerce(self, value: Any) -> Any:
        """
        :param value: A merged value, possibly a string from a properties file
        :return: The value as this setting's kind; None stays None
        """
        if value is None:
            return None
        try:
            if self.kind == "int":
                return int(value) if not isinstance(value, float) else int(round(value))
            if self.kind == "float":
                return float(value)
            if self.kind == "bool":
                if isinstance(value, str):
                    return value.strip().lower() in ("true", "yes", "1")
                return bool(value)
            if self.kind == "list":
                return self._as_list(value)
        except (TypeError, ValueError) as exception:
            raise RejectedInputError(f"--{self.flag}: cannot read {value!r} as {self.kind}") from exception
        return str(value)

    @staticmethod
    def _as_list(value: Any) -> List[str]:
        if isinstance(value, str):
            value = [value]
        result = []
        for item in value:
            result.extend(part.strip() for part in str(item).split(",") if part.strip())
        return result
