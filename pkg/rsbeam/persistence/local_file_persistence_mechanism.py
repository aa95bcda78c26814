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
import logging
import os


class LocalFilePersistenceMechanism:
    """
    Reads and writes local files at exactly the paths it is given.
    No file extension is ever appended, so a path on the command line
    is the path on disk.
    """

    def __init__(self, must_exist: bool = True):
        """
        Constructor

        :param must_exist: Default True.  When False, if the file does
                not exist upon read no exception is raised.
                When True, FileNotFoundError propagates.
        """
        self._must_exist = must_exist

    def open_source_for_read(self, path: str):
        """
        :param path: The file to read
        :return: Either None, indicating that the file desired does not exist,
                or a binary fileobj opened for reading which the caller closes.
        """
        logger = logging.getLogger(__name__)
        logger.info("Reading %s", str(path))

        fileobj = None
        try:
            # pylint: disable=consider-using-with
            fileobj = open(path, 'rb')
        except FileNotFoundError as ex:
            if self._must_exist:
                raise ex

        return fileobj

    def open_dest_for_write(self, path: str, send_from_fileobj=None):
        """
        :param path: The file to write; missing folders are created
        :param send_from_fileobj: The fileobj the data will come from.
                A StringIO opens the destination in text mode.
        :return: The fileobj representing the local file, which the caller closes
        """
        logger = logging.getLogger(__name__)
        logger.info("Writing %s", str(path))

        dirs = os.path.dirname(path)
        if dirs:
            os.makedirs(dirs, exist_ok=True)

        # Allow for string or bytes as input
        writestyle = "wb"
        if isinstance(send_from_fileobj, io.StringIO):
            writestyle = "w"

        # pylint: disable=consider-using-with,unspecified-encoding
        return open(path, writestyle)
