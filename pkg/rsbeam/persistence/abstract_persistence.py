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

import io
import os
import shutil

from rsbeam.persistence.local_file_persistence_mechanism import LocalFilePersistenceMechanism


class AbstractPersistence:
    """
    Partial implementation of persistence which saves the serialized bytes
    of an object via some persistence mechanism and restores them.

    Implementations should only need to override the method:
        get_serialization_format()
    """

    def __init__(self, persistence_mechanism: LocalFilePersistenceMechanism = None):
        """
        Constructor

        :param persistence_mechanism: the mechanism to use for storage.
                Default of None stores to local files.
        """
        self._mechanism = persistence_mechanism
        if self._mechanism is None:
            self._mechanism = LocalFilePersistenceMechanism()

    def get_serialization_format(self):
        """
        :return: The SerializationFormat instance to be used in persist()
                 and restore()
        """
        raise NotImplementedError

    def persist(self, obj, file_reference: str) -> str:
        """
        Persists the object passed in.

        :param obj: an object to persist
        :param file_reference: The path to write to
        :return: The path written
        """
        serialization = self.get_serialization_format()

        buffer_fileobj = serialization.from_object(obj)
        with buffer_fileobj:
            dest_fileobj = self._mechanism.open_dest_for_write(file_reference, buffer_fileobj)
            with dest_fileobj:
                shutil.copyfileobj(buffer_fileobj, dest_fileobj)

        return file_reference

    def restore(self, file_reference: str):
        """
        :param file_reference: The path to read from
        :return: an object from some persisted store, or None if the
                mechanism allows a missing file and it is missing
        """
        serialization = self.get_serialization_format()

        with io.BytesIO() as buffer_fileobj:
            source_fileobj = self._mechanism.open_source_for_read(file_reference)
            if source_fileobj is None:
                return None

            with source_fileobj:
                shutil.copyfileobj(source_fileobj, buffer_fileobj)

            # Set to the beginning of the memory buffer so the format reads it all
            buffer_fileobj.seek(0, os.SEEK_SET)
            return serialization.to_object(buffer_fileobj)
