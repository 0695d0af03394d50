"""Simulator for planar qudit topological codes: lattice construction,
generalized bit-flip noise, charge-transport decoding, and Monte Carlo
threshold estimation."""

from .analysis import (
    NoCrossingError,
    PlateauFit,
    ThresholdEstimate,
    find_threshold,
    fit_plateau,
)
from .codegraph import (
    BLUE,
    COLOR666,
    GREEN,
    PRIVILEGED_COLOR,
    RED,
    SURFACE,
    CodeGraph,
    build_color_code_666,
    build_surface_code,
    dual_distance,
    validate,
)
from .decoders import (
    DECODERS,
    decode,
    decode_dsp,
    decode_gcc,
    decode_greedy,
    decode_hdrg,
    decode_mwpm,
    find_clusters,
    greedy_matching,
    minimum_weight_matching,
)
from .logical import TrialVerdict, brute_force_class_oracle, classify_residual, is_logical_failure
from .montecarlo import DecoderContractError, RatePoint, estimate_rate, run_trial, wilson_interval
from .noise import compose, inverse, sample_error, trial_rng
from .syndrome import extract, is_trivial
from .transport import TransportError, TransportLedger

__all__ = [
    "BLUE", "COLOR666", "GREEN", "PRIVILEGED_COLOR", "RED", "SURFACE",
    "CodeGraph", "DECODERS", "DecoderContractError", "NoCrossingError",
    "PlateauFit", "RatePoint", "ThresholdEstimate", "TransportError",
    "TransportLedger", "TrialVerdict", "brute_force_class_oracle",
    "build_color_code_666", "build_surface_code", "classify_residual",
    "compose", "decode", "decode_dsp", "decode_gcc", "decode_greedy",
    "decode_hdrg", "decode_mwpm", "dual_distance", "estimate_rate",
    "extract", "find_clusters", "find_threshold", "fit_plateau",
    "greedy_matching", "inverse", "is_logical_failure", "is_trivial",
    "minimum_weight_matching", "run_trial", "sample_error", "trial_rng",
    "validate", "wilson_interval",
]

__version__ = "0.1.0"
