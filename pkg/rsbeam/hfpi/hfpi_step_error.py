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

from rsbeam.errors.rsbeam_error import RsBeamError


class HfpiStepError(RsBeamError):
    """
    Raised by a dual update whose ratio denominators are not positive,
    i.e. some g_{0,k} + rho <= 0.
    """

    def __init__(self, user_index: int, shifted_value: float):
        """
        Constructor.

        :param user_index: The first user whose shifted surrogate is not positive
        :param shifted_value: g_{0,k} + rho for that user
        """
        super().__init__(f"HFPI step aborted: g_common[{user_index}] + rho = {shifted_value!r} <= 0")
        self.user_index = user_index
        self.shifted_value = shifted_value
