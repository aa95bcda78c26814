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

from typing import Any
from typing import Dict
from typing import Set

from rsbeam.errors.rejected_input_error import RejectedInputError


class DictionaryOverlay:
    """
    Policy class assisting with deep dictionary updates.

    Layers command-line flags over config-file values over built-in defaults.
    An overlay value of None means "not given" and leaves the basis alone,
    which is what argparse reports for a flag nobody typed.
    """

    def overlay(self, basis: Dict[str, Any], overlay: Dict[str, Any],
                allow_overlay_only_items: bool = True) -> Dict[str, Any]:
        """
        :param basis: Lower-precedence values, e.g. the built-in defaults.
                        Left untouched.
        :param overlay: Higher-precedence values, e.g. a config file section.
                        Left untouched.
        :param allow_overlay_only_items: When False, a key of the overlay that the
                        basis does not know raises RejectedInputError naming
                        every such key, dotted for nested sections.
        :return: A new dictionary with the keys of both.  Overlay values win,
                        nested dictionaries are merged key by key.
        """
        overlay_only_items = set()
        result = self._do_overlay(basis, overlay, overlay_only_items, '')
        if len(overlay_only_items) > 0 \
                and not allow_overlay_only_items:
            message = ', '.join(sorted(overlay_only_items))
            raise RejectedInputError(f"unknown configuration keys: {message}")
        return result

    def _do_overlay(self, basis: Dict[str, Any], overlay: Dict[str, Any],
                    overlay_only_items: Set[str], items_prefix: str) -> Dict[str, Any]:
        """
        :param overlay_only_items: Collects the dotted keys the basis lacks
        :param items_prefix: Dotted path of the section being merged
        :return: The merged dictionary
        """
        if basis is None and overlay is None:
            return None

        if basis is None:
            basis = {}
        if not isinstance(basis, dict):
            raise RejectedInputError("basis is not a dictionary")

        if overlay is None:
            overlay = {}
        if not isinstance(overlay, dict):
            raise RejectedInputError("overlay is not a dictionary")

        # Do not modify any incoming arguments
        result = {}
        result.update(basis)

        for key, overlay_value in overlay.items():

            if overlay_value is None:
                continue

            if key not in basis:
                result[key] = overlay_value
                overlay_only_items.add(items_prefix + key)
                continue

            basis_value = basis.get(key)
            if basis_value is not None:
                overlay_value = self._convert_overlay_value(key, basis_value, overlay_value)

            result_value = overlay_value
            if isinstance(basis_value, dict) and \
               isinstance(overlay_value, dict):
                result_value = self._do_overlay(basis_value,
                                                overlay_value,
                                                overlay_only_items,
                                                f"{items_prefix}{key}.")

            result[key] = result_value

        return result

    @staticmethod
    def _convert_overlay_value(key: str, basis_value: Any, overlay_value: Any) -> Any:
        """
        If overlay value is a string and the basis value is numeric/boolean,
        the overlay string is parsed into the basis type.
        Properties files hand every value back as a string.

        :param key: The key, for error messages
        :param basis_value: basis configuration value
        :param overlay_value: value taken from configuration overlay
        :return: converted overlay value
        """
        if not isinstance(overlay_value, str):
            return overlay_value

        try:
            if isinstance(basis_value, bool):
                return overlay_value.strip().lower() in ('true', 'yes', '1')
            if isinstance(basis_value, int):
                # u64 seeds do not survive a trip through float
                text = overlay_value.strip()
                return int(text) if text.lstrip('+-').isdigit() else int(float(text))
            if isinstance(basis_value, float):
                return float(overlay_value)
        except ValueError as exception:
            raise RejectedInputError(f"{key}: cannot read {overlay_value!r} "
                                     f"as {type(basis_value).__name__}") from exception
        return overlay_value
