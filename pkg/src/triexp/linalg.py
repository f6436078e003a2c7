"""Dense complex linear algebra and polynomial root-finding.

Matrices are plain ``numpy`` complex arrays; vectors are 1-d arrays. Nothing
here calls into LAPACK, the routines are written out so their pivoting and
rank tests are explicit and stable across numpy builds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NoConvergence, RankDeficient, SingularMatrix, ZeroNode

SINGULAR_RTOL = 1e-13
RANK_RTOL = 1e-12
ROOT_STEP_RTOL = 1e-13
ROOT_MAX_ITER = 500
ROOT_START_ROTATION = 0.4

_EPS = np.finfo(float).eps


def _as_matrix(a) -> np.ndarray:
    a = np.array(a, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def _as_vector(b, n: int) -> np.ndarray:
    b = np.array(b, dtype=complex).reshape(-1)
    if b.shape[0] != n:
        raise ValueError(f"right-hand side has length {b.shape[0]}, expected {n}")
    return b


def solve(a, b, *, full: bool = False):
    """Solve ``a @ x = b`` by Gaussian elimination with partial pivoting.

    At each step the row holding the largest-magnitude entry in the pivot
    column is swapped in. A pivot smaller than ``1e-13`` times the largest
    entry of the original matrix raises :class:`SingularMatrix`.

    With ``full=True`` returns ``(x, residual)`` where ``residual`` is
    ``max |a @ x - b|``.
    """
    a0 = _as_matrix(a)
    n, m = a0.shape
    if n != m:
        raise ValueError(f"solve needs a square matrix, got {n}x{m}")
    b0 = _as_vector(b, n)
    u = a0.copy()
    x = b0.copy()
    scale = np.max(np.abs(a0)) if a0.size else 0.0
    tol = SINGULAR_RTOL * scale
    for k in range(n):
        piv = k + int(np.argmax(np.abs(u[k:, k])))
        if not np.abs(u[piv, k]) > tol:
            raise SingularMatrix(f"pivot {k} has magnitude {abs(u[piv, k]):.3e} <= {tol:.3e}")
        if piv != k:
            u[[k, piv]] = u[[piv, k]]
            x[[k, piv]] = x[[piv, k]]
        f = u[k + 1:, k] / u[k, k]
        u[k + 1:, k:] -= np.outer(f, u[k, k:])
        x[k + 1:] -= f * x[k]
    for k in range(n - 1, -1, -1):
        x[k] = (x[k] - u[k, k + 1:] @ x[k + 1:]) / u[k, k]
    if full:
        return x, float(np.max(np.abs(a0 @ x - b0), initial=0.0))
    return x


def householder_qr(a) -> tuple[np.ndarray, np.ndarray]:
    """Householder triangularization of an ``m x n`` matrix, ``m >= n``.

    Returns ``(r, vs)``: the ``n x n`` upper triangle and the array of unit
    reflector vectors (row ``k`` acts on entries ``k:``) so ``qh_apply`` can
    replay the reflections on a right-hand side.
    """
    r = _as_matrix(a).copy()
    m, n = r.shape
    if m < n:
        raise ValueError(f"need at least as many rows as columns, got {m}x{n}")
    vs = np.zeros((n, m), dtype=complex)
    for k in range(n):
        col = r[k:, k]
        norm = np.linalg.norm(col)
        if norm == 0.0:
            continue
        x0 = col[0]
        phase = x0 / abs(x0) if x0 != 0 else 1.0
        v = col.copy()
        v[0] += phase * norm
        v /= np.linalg.norm(v)
        r[k:, k:] -= 2.0 * np.outer(v, v.conj() @ r[k:, k:])
        vs[k, k:] = v
    return np.triu(r[:n, :]), vs


def _qh_apply(vs: np.ndarray, b: np.ndarray) -> np.ndarray:
    b = b.copy()
    for k in range(vs.shape[0]):
        v = vs[k, k:]
        b[k:] -= 2.0 * v * (v.conj() @ b[k:])
    return b


def least_squares(a, b) -> np.ndarray:
    """Minimize ``sum |a @ x - b|**2`` via Householder QR.

    The normal equations are never formed. A diagonal entry of the triangular
    factor below ``1e-12`` times the largest column norm of ``a`` raises
    :class:`RankDeficient`.
    """
    a0 = _as_matrix(a)
    m, n = a0.shape
    if m < n:
        raise ValueError(f"least squares needs m >= n, got {m}x{n}")
    b0 = _as_vector(b, m)
    r, vs = householder_qr(a0)
    colmax = float(np.max(np.linalg.norm(a0, axis=0), initial=0.0))
    tol = RANK_RTOL * colmax
    diag = np.abs(np.diag(r))
    if n and (colmax == 0.0 or np.any(diag <= tol)):
        k = int(np.argmin(diag))
        raise RankDeficient(f"column {k}: |R[{k},{k}]| = {diag[k]:.3e} <= {tol:.3e}")
    qb = _qh_apply(vs, b0)[:n]
    x = np.zeros(n, dtype=complex)
    for k in range(n - 1, -1, -1):
        x[k] = (qb[k] - r[k, k + 1:] @ x[k + 1:]) / r[k, k]
    return x


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with complex coefficients in ascending degree order."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        c = tuple(complex(v) for v in self.coefficients)
        if not c:
            raise ValueError("polynomial needs at least one coefficient")
        if c[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coefficients", c)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def from_roots(cls, roots: Sequence[complex]) -> "Polynomial":
        c = np.array([1.0 + 0j])
        for r in roots:
            # (c0 + c1 z + ...) * (z - r)
            c = np.concatenate(([0], c)) - r * np.concatenate((c, [0]))
        return cls(tuple(c))

    def __call__(self, z):
        acc = np.zeros_like(np.asarray(z, dtype=complex))
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc


def _horner_with_derivative(coeffs: np.ndarray, z: np.ndarray):
    """Value, derivative and a running rounding-error bound at each ``z``."""
    p = np.full(z.shape, coeffs[-1], dtype=complex)
    dp = np.zeros(z.shape, dtype=complex)
    az = np.abs(z)
    err = np.abs(p) / 2.0
    for c in coeffs[-2::-1]:
        dp = dp * z + p
        p = p * z + c
        err = err * az + np.abs(p)
    return p, dp, _EPS * (2.0 * err - np.abs(p))


def roots(poly, *, full: bool = False):
    """All roots of a polynomial (with multiplicity) by Aberth-Ehrlich iteration.

    Parameters
    ----------
    poly : Polynomial or sequence of complex
        Coefficients in ascending degree order; the leading one must be nonzero.
    full : bool
        Also return the number of sweeps used.

    Returns
    -------
    numpy.ndarray of length ``degree`` (and the sweep count when ``full``).
    Exact zero roots, from trailing zero low-order coefficients, come first.

    Notes
    -----
    Starting points sit on the circle of radius ``(|c0| / |c_deg|)**(1/deg)``
    rotated by 0.4 rad. A root stops moving once its correction drops below
    ``1e-13 * (1 + |z|)`` or its residual is at rounding level. After 500
    sweeps :class:`NoConvergence` is raised.
    """
    if not isinstance(poly, Polynomial):
        poly = Polynomial(tuple(poly))
    coeffs = np.array(poly.coefficients, dtype=complex)
    if poly.degree < 1:
        raise ValueError("root-finding needs degree >= 1")
    if not np.all(np.isfinite(coeffs)):
        raise ValueError("polynomial has non-finite coefficients")
    nzero = 0
    while coeffs[nzero] == 0:
        nzero += 1
    coeffs = coeffs[nzero:]
    zeros = np.zeros(nzero, dtype=complex)
    deg = len(coeffs) - 1
    if deg == 0:
        return (zeros, 0) if full else zeros
    if deg == 1:
        found = np.array([-coeffs[0] / coeffs[1]])
        out = np.concatenate((zeros, found))
        return (out, 0) if full else out

    radius = (abs(coeffs[0]) / abs(coeffs[-1])) ** (1.0 / deg)
    if not np.isfinite(radius) or radius == 0.0:
        radius = 1.0
    angles = 2.0 * np.pi * np.arange(deg) / deg + ROOT_START_ROTATION
    z = radius * np.exp(1j * angles)
    active = np.ones(deg, dtype=bool)

    for sweep in range(1, ROOT_MAX_ITER + 1):
        idx = np.flatnonzero(active)
        p, dp, bound = _horner_with_derivative(coeffs, z[idx])
        at_rounding = np.abs(p) <= bound
        diff = z[idx, None] - z[None, :]
        diff[np.arange(len(idx)), idx] = 1.0
        sums = (1.0 / diff).sum(axis=1) - 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            step = ratio / (1.0 - ratio * sums)
        bad = ~np.isfinite(step)
        if np.any(bad):
            # zero derivative: nudge off the critical point
            step[bad] = 1e-8 * (1.0 + np.abs(z[idx][bad])) * np.exp(1j * (sweep + idx[bad]))
        small = np.abs(step) < ROOT_STEP_RTOL * (1.0 + np.abs(z[idx]))
        move = ~at_rounding
        z[idx[move]] -= step[move]
        active[idx[at_rounding | small]] = False
        if not active.any():
            out = np.concatenate((zeros, z))
            return (out, sweep) if full else out
    raise NoConvergence(f"Aberth-Ehrlich did not converge in {ROOT_MAX_ITER} sweeps")


def root_radii(poly, z) -> np.ndarray:
    """Rounding-level uncertainty of each approximate root.

    ``deg * (|p(z)| + e(z)) / |p'(z)|`` with ``e`` the Horner rounding bound.
    Roots whose radii overlap cannot be told apart in double precision.
    """
    if not isinstance(poly, Polynomial):
        poly = Polynomial(tuple(poly))
    coeffs = np.array(poly.coefficients, dtype=complex)
    z = np.asarray(z, dtype=complex)
    p, dp, bound = _horner_with_derivative(coeffs, z)
    with np.errstate(divide="ignore"):
        return poly.degree * (np.abs(p) + bound) / np.abs(dp)


def vandermonde(nodes, powers) -> np.ndarray:
    """Matrix with entry ``(i, k) = nodes[k] ** powers[i]`` (principal branch)."""
    z = np.array(nodes, dtype=complex).reshape(-1)
    t = np.array(powers, dtype=float).reshape(-1)
    if np.any(z == 0):
        raise ZeroNode("vandermonde nodes must be nonzero")
    return np.exp(np.outer(t, np.log(z)))
