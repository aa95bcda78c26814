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

import csv
import logging
import os

from typing import Any
from typing import Dict
from typing import List

from rsbeam.errors.rejected_input_error import RejectedInputError


SCHEMA_VERSION = 1

COLUMNS = ["schema_version", "scheme", "K", "N_t", "snr_db", "mean_sr", "std_sr",
           "mean_time_s", "median_time_s", "extra"]


class BenchmarkCsvWriter:
    """
    Appends benchmark rows to a CSV file.

    The header goes out only when the file is new or empty, so runs of the
    benchmark on different datasets can share one file.  An existing file
    with some other header is refused rather than mixed.
    """

    def __init__(self, path: str):
        """
        Constructor.

        :param path: The CSV file to append to
        """
        self.path = path

    def write_rows(self, rows: List[Dict[str, Any]]) -> int:
        """
        :param rows: Row dictionaries with every column but schema_version
        :return: The number of rows written
        """
        logger = logging.getLogger(__name__)

        needs_header = not os.path.exists(self.path) or os.path.getsize(self.path) == 0
        if not needs_header:
            self._check_header()

        dirs = os.path.dirname(self.path)
        if dirs:
            os.makedirs(dirs, exist_ok=True)

        with open(self.path, "a", newline="", encoding="utf-8") as csv_file:
            writer = csv.DictWriter(csv_file, fieldnames=COLUMNS)
            if needs_header:
                writer.writeheader()
            for row in rows:
                full_row = {"schema_version": SCHEMA_VERSION}
                full_row.update(row)
                writer.writerow(full_row)

        logger.info("Appended %d rows to %s", len(rows), self.path)
        return len(rows)

    def _check_header(self):
        with open(self.path, "r", newline="", encoding="utf-8") as csv_file:
            header = next(csv.reader(csv_file), None)
        if header != COLUMNS:
            raise RejectedInputError(f"{self.path} has header {header}, expected {COLUMNS}")
