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
import dataclasses
import logging
import os

from typing import List

from rsbeam.rsbnn.epoch_record import EpochRecord


class TrainingHistory:
    """
    The ordered EpochRecords of a training run, across phases.
    """

    FIELDS = [field.name for field in dataclasses.fields(EpochRecord)]

    def __init__(self):
        """
        Constructor.
        """
        self.records: List[EpochRecord] = []

    def __len__(self) -> int:
        return len(self.records)

    def append(self, record: EpochRecord):
        """
        :param record: The EpochRecord of the epoch that just finished
        """
        self.records.append(record)

    def phase_records(self, phase: str) -> List[EpochRecord]:
        """
        :param phase: A phase name
        :return: The records of that phase only
        """
        return [record for record in self.records if record.phase == phase]

    def write_csv(self, path: str):
        """
        Writes one row per epoch, overwriting any existing file.

        :param path: The destination CSV path
        """
        logger = logging.getLogger(__name__)
        logger.info("Writing training history to %s", path)

        folder = os.path.dirname(path)
        if folder:
            os.makedirs(folder, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as csv_file:
            writer = csv.DictWriter(csv_file, fieldnames=self.FIELDS)
            writer.writeheader()
            for record in self.records:
                writer.writerow(dataclasses.asdict(record))
