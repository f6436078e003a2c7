"""Sums of complex exponentials: model type, evaluation and Prony fitting."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from .errors import (
    InvalidModel,
    InvalidOptions,
    NodeMismatch,
    RankDeficient,
    RepeatedRoot,
    SingularMatrix,
    SingularPredictionSystem,
    UnpairedTerm,
    ZeroRoot,
)
from .series import TimeSeries

DT = 1.0
DUPLICATE_EXPONENT_TOL = 1e-12
REPEATED_ROOT_TOL = 1e-10
NODE_SPACING_TOL = 1e-9
PAIRING_RTOL = 1e-6


@dataclass(frozen=True)
class ExpTerm:
    """One summand ``amplitude * exp(exponent * t)``."""

    amplitude: complex
    exponent: complex

    def __post_init__(self):
        c, s = complex(self.amplitude), complex(self.exponent)
        if not (cmath.isfinite(c) and cmath.isfinite(s)):
            raise InvalidModel(f"non-finite term ({c}, {s})")
        object.__setattr__(self, "amplitude", c)
        object.__setattr__(self, "exponent", s)

    def conjugate(self) -> "ExpTerm":
        return ExpTerm(self.amplitude.conjugate(), self.exponent.conjugate())


def _canonical_key(term: ExpTerm):
    return (term.exponent.imag, term.exponent.real, term.amplitude.imag, term.amplitude.real)


@dataclass(frozen=True)
class ExponentialModel:
    """Ordered exponential sum; ``t`` is in year-number units with unit step.

    Terms are stored in canonical order (ascending imaginary part of the
    exponent, then ascending real part) whatever order they are given in.
    """

    terms: tuple[ExpTerm, ...]
    dt: float = DT

    def __post_init__(self):
        terms = tuple(t if isinstance(t, ExpTerm) else ExpTerm(*t) for t in self.terms)
        if not terms:
            raise InvalidModel("a model needs at least one term")
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise InvalidModel(f"dt must be positive and finite, got {self.dt}")
        terms = tuple(sorted(terms, key=_canonical_key))
        s = np.array([t.exponent for t in terms])
        if len(s) > 1:
            gaps = np.abs(s[:, None] - s[None, :])
            np.fill_diagonal(gaps, np.inf)
            if gaps.min() <= DUPLICATE_EXPONENT_TOL:
                raise InvalidModel("two exponents coincide within 1e-12")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "dt", float(self.dt))

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def amplitudes(self) -> np.ndarray:
        return np.array([t.amplitude for t in self.terms])

    @property
    def exponents(self) -> np.ndarray:
        return np.array([t.exponent for t in self.terms])

    def __call__(self, t):
        return evaluate(self, t)


def evaluate(model: ExponentialModel, t):
    """``sum_k c_k exp(s_k t)`` for scalar or array ``t``, summed in canonical order."""
    tt = np.asarray(t, dtype=float)
    acc = np.zeros(tt.shape, dtype=complex)
    for term in model.terms:
        acc = acc + term.amplitude * np.exp(term.exponent * tt)
    if acc.ndim == 0:
        return complex(acc)
    return acc


def evaluate_real(model: ExponentialModel, t, *, full: bool = False):
    """Real part of :func:`evaluate`; with ``full=True`` also ``|imag|``."""
    v = evaluate(model, t)
    re, im = np.real(v), np.abs(np.imag(v))
    if np.ndim(v) == 0:
        re, im = float(re), float(im)
    return (re, im) if full else re


class FitMode(str, Enum):
    EXACT = "exact"
    LEAST_SQUARES = "ls"


@dataclass(frozen=True)
class FitOptions:
    p: int
    mode: FitMode = FitMode.EXACT
    symmetrize: bool = True

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, (int, np.integer)) or self.p < 1:
            raise InvalidOptions(f"number of terms must be a positive integer, got {self.p!r}")
        try:
            object.__setattr__(self, "mode", FitMode(self.mode))
        except ValueError:
            raise InvalidOptions(f"mode must be 'exact' or 'ls', got {self.mode!r}") from None
        object.__setattr__(self, "p", int(self.p))

    def check_length(self, n: int) -> None:
        if self.mode is FitMode.EXACT and n != 2 * self.p:
            raise InvalidOptions(f"exact mode needs exactly 2p = {2 * self.p} points, got {n}")
        if self.mode is FitMode.LEAST_SQUARES and n < 2 * self.p:
            raise InvalidOptions(f"least-squares mode needs at least 2p = {2 * self.p} points, got {n}")


def linear_prediction(series: TimeSeries, p: int) -> np.ndarray:
    """Coefficients ``a`` with ``x[k+p] ~ sum_j a[j] x[k+j]`` over the whole series.

    The ``(N-p) x p`` Hankel system is solved exactly when ``N == 2p`` and in
    the least-squares sense when ``N > 2p``.
    """
    x = series.y.astype(complex)
    n = len(x)
    if p < 1 or n < 2 * p:
        raise InvalidOptions(f"linear prediction of order {p} needs at least {2 * p} points, got {n}")
    rows = n - p
    hankel = np.array([x[k:k + p] for k in range(rows)])
    rhs = x[p:]
    try:
        if rows == p:
            return linalg.solve(hankel, rhs)
        return linalg.least_squares(hankel, rhs)
    except (SingularMatrix, RankDeficient) as exc:
        raise SingularPredictionSystem(str(exc)) from exc


def characteristic_polynomial(a: np.ndarray) -> linalg.Polynomial:
    # z^p - a_{p-1} z^{p-1} - ... - a_0, ascending order
    return linalg.Polynomial(tuple(-np.asarray(a, dtype=complex)) + (1.0,))


def _check_unit_spacing(t: np.ndarray) -> None:
    if len(t) > 1:
        steps = np.diff(t)
        worst = int(np.argmax(np.abs(steps - DT)))
        if abs(steps[worst] - DT) > NODE_SPACING_TOL:
            raise NodeMismatch(
                f"abscissas must be unit-spaced; step {worst} is {steps[worst]!r}"
            )


def fit(series: TimeSeries, options: FitOptions) -> ExponentialModel:
    """Fit ``options.p`` exponential terms to a unit-spaced real series.

    Linear prediction gives the characteristic polynomial, its roots ``z_k``
    give exponents ``Log(z_k)``, and amplitudes come from the Vandermonde
    system over all samples (least squares, which is exact when the data is
    interpolated). Real input makes roots and amplitudes come in conjugate
    pairs up to rounding; with ``symmetrize`` the pairs are made exact.
    """
    t = series.t
    options.check_length(len(series))
    _check_unit_spacing(t)

    a = linear_prediction(series, options.p)
    poly = characteristic_polynomial(a)
    z = linalg.roots(poly)

    zmax = float(np.max(np.abs(z)))
    if np.any(np.abs(z) <= 1e-14 * max(1.0, zmax)):
        raise ZeroRoot("characteristic polynomial has a root at zero; its logarithm is undefined")
    if len(z) > 1:
        # a multiple root comes back as a cluster ~eps**(1/m) wide, far above
        # the fixed tolerance, so overlapping rounding radii also count
        radii = linalg.root_radii(poly, z)
        gaps = np.abs(z[:, None] - z[None, :])
        reach = np.maximum(radii[:, None] + radii[None, :], REPEATED_ROOT_TOL)
        np.fill_diagonal(gaps, np.inf)
        hit = np.argwhere(gaps < reach)
        if len(hit):
            i, j = hit[0]
            raise RepeatedRoot(f"roots {z[i]} and {z[j]} coincide; confluent models are not supported")

    s = np.log(z) / DT
    amps = linalg.least_squares(linalg.vandermonde(z, t), series.y)
    model = ExponentialModel(tuple(ExpTerm(c, e) for c, e in zip(amps, s)), dt=DT)
    if options.symmetrize:
        model = conjugate_symmetrize(model)
    return model


def conjugate_symmetrize(model: ExponentialModel, rtol: float = PAIRING_RTOL) -> ExponentialModel:
    """Make a model of a real series exactly real on the real axis.

    Terms are matched greedily, closest first, with the conjugate of another
    term or with their own conjugate (a nearly real term). Distances are
    relative: exponents against ``max(1, max|s|)``, amplitudes against
    ``max|c|``. Matched pairs are replaced by exact conjugates of their
    average; self-matched terms are snapped to the real axis.

    A term with ``Im s = +-pi`` (a negative real root) has no partner under
    the principal logarithm. It is real on a unit-spaced grid only, so it is
    split into the pair ``(c/2, Re s + i pi)``, ``(conj(c)/2, Re s - i pi)``,
    which keeps ``Re(c exp(s t))`` and is real for every real ``t``. The
    returned model then has one more term than the input.

    Raises
    ------
    UnpairedTerm
        Some term has no conjugate partner within ``rtol``.
    """
    s = model.exponents
    c = model.amplitudes
    n = len(s)
    s_scale = max(1.0, float(np.max(np.abs(s))))
    c_scale = float(np.max(np.abs(c))) or 1.0
    dist = np.maximum(
        np.abs(s[:, None] - s[None, :].conj()) / s_scale,
        np.abs(c[:, None] - c[None, :].conj()) / c_scale,
    )
    nyquist = np.abs(np.abs(s.imag) - math.pi) / s_scale
    iu, ju = np.triu_indices(n)
    # candidate pairings as (distance, i, j); j == -1 marks a Nyquist split
    cand = list(zip(dist[iu, ju].tolist(), iu.tolist(), ju.tolist()))
    cand += [(float(d), i, -1) for i, d in enumerate(nyquist)]
    cand.sort()
    partner = [-2] * n
    for d, i, j in cand:
        if d > rtol:
            break
        if partner[i] == -2 and (j < 0 or partner[j] == -2):
            partner[i] = j
            if j >= 0:
                partner[j] = i
    lonely = [i for i in range(n) if partner[i] == -2]
    if lonely:
        i = lonely[0]
        raise UnpairedTerm(f"term with exponent {s[i]} has no conjugate partner within {rtol:g}")

    terms = []
    for i in range(n):
        j = partner[i]
        if j == -1:
            half = ExpTerm(c[i] / 2 if s[i].imag > 0 else c[i].conjugate() / 2, complex(s[i].real, math.pi))
            terms.extend((half, half.conjugate()))
        elif j == i:
            terms.append(ExpTerm(complex(c[i].real), complex(s[i].real)))
        elif i < j:
            avg = ExpTerm((c[i] + c[j].conjugate()) / 2, (s[i] + s[j].conjugate()) / 2)
            terms.extend((avg, avg.conjugate()))
    return ExponentialModel(tuple(terms), dt=model.dt)
