"""Loss functionals and node-by-node residual reports."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidSpec
from .prony import ExponentialModel, evaluate
from .series import TimeSeries

LOSS_KINDS = ("chebyshev", "robust_count", "lp", "l1", "ls", "wls")
DEFAULT_REPORT_LOSSES = ("chebyshev", "l1", "ls", "robust_count")
ZERO_RTOL = 1e-9


@dataclass(frozen=True)
class LossSpec:
    """Which functional to compute.

    ``p_exponent`` is used by ``lp`` only, ``weights`` by ``wls`` only and
    ``zero_tolerance`` by ``robust_count`` only. A missing tolerance becomes
    ``1e-9 * scale`` at evaluation time. For ``0 < p < 1`` the ``lp`` value is
    a quasi-norm.
    """

    kind: str
    p_exponent: float | None = None
    weights: tuple[float, ...] | None = None
    zero_tolerance: float | None = None

    def __post_init__(self):
        if self.kind not in LOSS_KINDS:
            raise InvalidSpec(f"unknown loss kind {self.kind!r}; expected one of {LOSS_KINDS}")
        if self.kind == "lp":
            p = self.p_exponent
            if p is None or not math.isfinite(p) or p <= 0:
                raise InvalidSpec(f"lp needs an exponent in (0, inf), got {p!r}")
        if self.kind == "wls":
            if self.weights is None:
                raise InvalidSpec("wls needs weights")
            w = tuple(float(v) for v in self.weights)
            if not all(math.isfinite(v) for v in w):
                raise InvalidSpec("wls weights must be finite")
            object.__setattr__(self, "weights", w)
        if self.zero_tolerance is not None and not (self.zero_tolerance >= 0 and math.isfinite(self.zero_tolerance)):
            raise InvalidSpec(f"zero_tolerance must be finite and >= 0, got {self.zero_tolerance!r}")


def loss(residuals: Sequence[float], spec: LossSpec | str, *, scale: float = 1.0) -> float:
    """Evaluate one loss functional on real residuals.

    ``scale`` only matters for ``robust_count`` with no explicit tolerance:
    a residual counts as nonzero when it exceeds ``1e-9 * scale``.
    """
    if isinstance(spec, str):
        spec = LossSpec(spec)
    r = np.asarray(residuals, dtype=float).reshape(-1)
    if r.size == 0:
        raise InvalidSpec("residuals must be nonempty")
    a = np.abs(r)
    kind = spec.kind
    if kind == "chebyshev":
        return float(a.max())
    if kind == "robust_count":
        tol = spec.zero_tolerance if spec.zero_tolerance is not None else ZERO_RTOL * scale
        return float(np.count_nonzero(a > tol))
    if kind == "lp":
        p = float(spec.p_exponent)
        return float(np.sum(a**p) ** (1.0 / p))
    if kind == "l1":
        return float(a.sum())
    if kind == "ls":
        return float(np.sum(r * r))
    # wls
    w = np.asarray(spec.weights, dtype=float)
    if w.shape != r.shape:
        raise InvalidSpec(f"wls has {w.size} weights for {r.size} residuals")
    return float(np.sum(w * w * r * r))


@dataclass(frozen=True)
class NodeResidual:
    t: float
    y: float
    fitted: float
    residual: float
    imag: float


@dataclass(frozen=True)
class FitReport:
    max_abs_residual: float
    rms_residual: float
    max_imag: float
    residuals: tuple[NodeResidual, ...]
    losses: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "max_abs_residual": self.max_abs_residual,
            "rms_residual": self.rms_residual,
            "max_imag": self.max_imag,
            "residuals": [
                {"t": r.t, "y": r.y, "fitted": r.fitted, "residual": r.residual, "imag": r.imag}
                for r in self.residuals
            ],
            "losses": dict(self.losses),
        }


def residual_report(
    model: ExponentialModel,
    series: TimeSeries,
    losses: Sequence[LossSpec | str] = DEFAULT_REPORT_LOSSES,
) -> FitReport:
    """Evaluate ``model`` at every node of ``series`` and summarize the misfit.

    Residuals are ``y - Re(model(t))``; the imaginary part of the model is
    tracked separately in ``max_imag``.
    """
    t, y = series.t, series.y
    v = np.asarray(evaluate(model, t))
    fitted = v.real
    r = y - fitted
    scale = float(np.max(np.abs(y)))
    rows = tuple(
        NodeResidual(float(a), float(b), float(c), float(d), float(e))
        for a, b, c, d, e in zip(t, y, fitted, r, v.imag)
    )
    out = {}
    for spec in losses:
        spec = LossSpec(spec) if isinstance(spec, str) else spec
        out[spec.kind] = loss(r, spec, scale=scale)
    return FitReport(
        max_abs_residual=float(np.max(np.abs(r))),
        rms_residual=float(np.sqrt(np.mean(r * r))),
        max_imag=float(np.max(np.abs(v.imag))),
        residuals=rows,
        losses=out,
    )
