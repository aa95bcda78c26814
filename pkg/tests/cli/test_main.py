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
import os
import tempfile

from unittest import TestCase

from rsbeam.cli.main import EXIT_REJECTED
from rsbeam.cli.main import main
from rsbeam.persistence.binary_file_persistence import BinaryFilePersistence
from rsbeam.serialization.dataset_serialization_format import DatasetSerializationFormat
from rsbeam.serialization.label_serialization_format import LabelSerializationFormat


TINY_TRAINING = ["--batch", "4", "--sup-epochs", "1", "--unsup-epochs", "1", "--lr", "0.001"]


class TestMain(TestCase):
    """
    Runs the subcommands end to end on a tiny system.
    """

    def setUp(self):
        # pylint: disable=consider-using-with
        self.tempdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tempdir.cleanup)

    def path(self, name: str) -> str:
        """
        :return: A path inside the temporary folder
        """
        return os.path.join(self.tempdir.name, name)

    def test_pipeline(self):
        """
        gen-data, labels, solve, both trainings and bench chain together
        """
        data = self.path("train.rsd")
        self.assertEqual(main(["gen-data", "--k", "2", "--nt", "2", "--snr-db", "10", "--samples", "6",
                               "--seed", "5", "--radius", "20", "--out", data]), 0)
        dataset = BinaryFilePersistence(DatasetSerializationFormat()).restore(data)
        self.assertEqual(dataset.channels.shape, (6, 2, 2))
        self.assertEqual(dataset.cparams.cell_radius, 20.0)

        labels = self.path("train.rsl")
        beams = self.path("train.rsp")
        self.assertEqual(main(["labels", "--data", data, "--out", labels, "--beams-out", beams]), 0)
        label_set = BinaryFilePersistence(LabelSerializationFormat()).restore(labels)
        self.assertTrue(label_set.matches(dataset))

        report = self.path("reports/solve.csv")
        self.assertEqual(main(["solve", "--data", data, "--report", report, "--warmup", "1"]), 0)
        with open(report, newline="", encoding="utf-8") as csv_file:
            rows = list(csv.DictReader(csv_file))
        self.assertEqual(len(rows), 6)
        self.assertEqual(rows[0]["index"], "0")
        self.assertGreater(float(rows[0]["sum_rate"]), 0.0)

        model = self.path("model.rsbnn")
        history = self.path("history.csv")
        self.assertEqual(main(["train", "--data", data, "--labels", labels, "--model-out", model,
                               "--layers", "1", "--hidden", "4", "--history-out", history] + TINY_TRAINING), 0)
        self.assertTrue(os.path.isfile(model))
        self.assertTrue(os.path.isfile(history))

        blackbox = self.path("model.rsbbx")
        self.assertEqual(main(["train-blackbox", "--data", data, "--labels-p", beams, "--model-out", blackbox,
                               "--hidden", "4"] + TINY_TRAINING), 0)

        out = self.path("bench.csv")
        self.assertEqual(main(["bench", "--data", data, "--models", f"{model},{blackbox}",
                               "--warmup", "1", "--out", out]), 0)
        self.assertEqual(main(["bench", "--data", data, "--schemes", "fp-hfpi", "--out", out]), 0)
        with open(out, newline="", encoding="utf-8") as csv_file:
            rows = list(csv.DictReader(csv_file))
        self.assertEqual([row["scheme"] for row in rows], ["fp-hfpi", "blackbox-mlp", "rs-bnn", "fp-hfpi"])
        self.assertTrue(all(row["schema_version"] == "1" for row in rows))

    def test_config_file(self):
        """
        A config file supplies what the command line leaves out
        """
        data = self.path("from_config.rsd")
        config = self.path("pipeline.hocon")
        with open(config, "w", encoding="utf-8") as out:
            out.write(f'k = 1\nnt = 3\nlayers = 4\ngen_data {{\n  snr_db = 0\n  samples = 2\n  out = "{data}"\n}}\n')
        self.assertEqual(main(["--config", config, "gen-data"]), 0)
        dataset = BinaryFilePersistence(DatasetSerializationFormat()).restore(data)
        self.assertEqual(dataset.channels.shape, (2, 1, 3))
        self.assertEqual(dataset.snr_db, 0.0)

    def test_rejected_runs(self):
        """
        Missing models, missing files and missing settings exit with status 2
        """
        data = self.path("small.rsd")
        self.assertEqual(main(["gen-data", "--k", "1", "--nt", "1", "--snr-db", "0", "--samples", "2",
                               "--out", data]), 0)
        self.assertEqual(main(["bench", "--data", data, "--schemes", "rs-bnn", "--out", self.path("b.csv")]),
                         EXIT_REJECTED)
        self.assertFalse(os.path.exists(self.path("b.csv")))
        self.assertEqual(main(["solve", "--data", self.path("absent.rsd"), "--report", self.path("r.csv")]),
                         EXIT_REJECTED)
        self.assertEqual(main(["gen-data", "--k", "2"]), EXIT_REJECTED)
        self.assertEqual(main(["solve", "--data", data, "--algo", "wmmse", "--report", self.path("r.csv")]),
                         EXIT_REJECTED)
