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

from rsbeam.persistence.abstract_persistence import AbstractPersistence
from rsbeam.persistence.local_file_persistence_mechanism import LocalFilePersistenceMechanism
from rsbeam.serialization.serialization_format import SerializationFormat


class BinaryFilePersistence(AbstractPersistence):
    """
    AbstractPersistence over a fixed SerializationFormat, e.g.

        BinaryFilePersistence(DatasetSerializationFormat()).persist(dataset, "train.rsd")
    """

    def __init__(self, serialization_format: SerializationFormat,
                 persistence_mechanism: LocalFilePersistenceMechanism = None):
        """
        Constructor

        :param serialization_format: The SerializationFormat of the files
        :param persistence_mechanism: the mechanism to use for storage.
                Default of None stores to local files.
        """
        super().__init__(persistence_mechanism)
        self._format = serialization_format

    def get_serialization_format(self) -> SerializationFormat:
        """
        :return: The SerializationFormat given at construct time
        """
        return self._format
