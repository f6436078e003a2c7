"""Triangle-centroid smoothing and exponential-sum fitting of numerical series."""

from .errors import TriexpError
from .metrics import FitReport, LossSpec, loss, residual_report
from .prony import (
    ExponentialModel,
    ExpTerm,
    FitMode,
    FitOptions,
    conjugate_symmetrize,
    evaluate,
    evaluate_real,
    fit,
    linear_prediction,
)
from .series import DataPoint, TimeSeries, load_fixture, validate_series
from .smoothing import SmoothingConfig, centroid, smooth

__all__ = [
    "DataPoint",
    "ExpTerm",
    "ExponentialModel",
    "FitMode",
    "FitOptions",
    "FitReport",
    "LossSpec",
    "SmoothingConfig",
    "TimeSeries",
    "TriexpError",
    "centroid",
    "conjugate_symmetrize",
    "evaluate",
    "evaluate_real",
    "fit",
    "linear_prediction",
    "load_fixture",
    "loss",
    "residual_report",
    "smooth",
    "validate_series",
]
