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
Settings of every subcommand, in the order their flags are listed by --help.
"""

from rsbeam.cli.setting import Setting


HFPI_SETTINGS = [
    Setting("rho", "float", 0.1, help="Damping constant of the dual updates"),
    Setting("inner-tol", "float", 1e-5, help="Inner metric value that ends the inner loop"),
    Setting("outer-tol", "float", 1e-4, help="Sum rate change that ends the outer loop"),
    Setting("max-inner", "int", 1000, help="Inner iteration cap"),
    Setting("max-outer", "int", 2000, help="Outer iteration cap"),
    Setting("inner-metric", "str", "dual-residual", help="Inner stopping metric: dual-residual or relative"),
    Setting("outer-metric", "str", "absolute", help="Outer stopping metric: absolute or relative"),
]

TRAIN_SETTINGS = [
    Setting("batch", "int", 1000, help="Mini-batch size"),
    Setting("lr", "float", 1e-4, help="Adam learning rate"),
    Setting("sup-epochs", "int", 50, help="Epochs of the supervised phase"),
    Setting("unsup-epochs", "int", 150, help="Epochs of the unsupervised phase"),
    Setting("patience", "int", 7, help="Epochs without validation improvement before a phase stops"),
    Setting("seed", "int", 0, help="Seed of initialization, split and shuffling"),
    Setting("validation-fraction", "float", 0.2, help="Share of samples held out for validation"),
    Setting("history-out", "str", help="CSV file for the per-epoch history"),
]

COMMAND_SETTINGS = {
    "gen-data": [
        Setting("k", "int", required=True, help="Number of users K"),
        Setting("nt", "int", required=True, help="Number of transmit antennas N_t"),
        Setting("snr-db", "float", required=True, help="SNR in dB, P_t over noise power"),
        Setting("samples", "int", required=True, help="Number of channel samples"),
        Setting("seed", "int", 0, help="Master seed, an unsigned 64-bit integer"),
        Setting("out", "str", required=True, help="Dataset file to write"),
        Setting("radius", "float", 100.0, help="Cell radius in meters"),
        Setting("d0", "float", 1.0, help="Path loss reference distance in meters"),
        Setting("alpha", "float", 3.0, help="Path loss exponent"),
        Setting("min-distance", "float", 1.0, help="Closest a user is dropped to the base station"),
        Setting("workers", "int", 1, help="Worker processes"),
    ],
    "labels": [
        Setting("data", "str", required=True, help="Dataset file to label"),
        Setting("out", "str", required=True, help="Dual-variable label file to write"),
        Setting("beams-out", "str", help="Also write the FP-HFPI beamformers here"),
        Setting("workers", "int", 1, help="Worker processes"),
    ] + HFPI_SETTINGS,
    "solve": [
        Setting("data", "str", required=True, help="Dataset file to solve"),
        Setting("algo", "str", "fp-hfpi", help="Solver; only fp-hfpi is available"),
        Setting("report", "str", required=True, help="Per-sample CSV report to write"),
        Setting("warmup", "int", 3, help="Leading samples left out of the timing summary"),
    ] + HFPI_SETTINGS,
    "train": [
        Setting("data", "str", required=True, help="Training dataset file"),
        Setting("labels", "str", required=True, help="Dual-variable label file of that dataset"),
        Setting("model-out", "str", required=True, help="Model file to write"),
        Setting("layers", "int", 5, help="Unfolded layers L"),
        Setting("hidden", "int", 512, help="Hidden width M of every layer network"),
        Setting("epsilon", "float", 0.01, help="Floor of the normalized lambdas"),
        Setting("detach-aux", "bool", False, help="Stop gradients at the auxiliary variables"),
    ] + TRAIN_SETTINGS,
    "train-blackbox": [
        Setting("data", "str", required=True, help="Training dataset file"),
        Setting("labels-p", "str", required=True, help="Beamformer label file of that dataset"),
        Setting("model-out", "str", required=True, help="Model file to write"),
        Setting("hidden", "int", 0, help="Width of both hidden layers, 0 for 4 * 2 K N_t"),
    ] + TRAIN_SETTINGS,
    "bench": [
        Setting("data", "list", required=True, help="Test dataset file; repeat for a sweep"),
        Setting("schemes", "list", [],
                help="Comma-separated schemes to run; default fp-hfpi plus every scheme given a model"),
        Setting("models", "list", [], help="Comma-separated model files, as scheme=path or by extension"),
        Setting("out", "str", required=True, help="Benchmark CSV to append to"),
        Setting("warmup", "int", 3, help="Leading samples left out of the timing statistics"),
    ] + HFPI_SETTINGS,
}
