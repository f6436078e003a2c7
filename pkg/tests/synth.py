"""Random test models and polynomials with controlled root geometry."""

import numpy as np

from triexp.prony import ExponentialModel, ExpTerm


def separated(points, sep):
    return all(abs(a - b) >= sep for i, a in enumerate(points) for b in points[:i])


def random_roots(rng, degree, r_min, r_max, sep=0.1):
    """Roots uniform in angle and radius in an annulus, pairwise at least ``sep`` apart."""
    while True:
        z = rng.uniform(r_min, r_max, degree) * np.exp(1j * rng.uniform(0, 2 * np.pi, degree))
        if separated(list(z), sep):
            return z


def random_real_model(rng, p, r_min=0.5, r_max=1.5, sep=0.1):
    """Model of a real signal: p // 2 conjugate root pairs plus one positive real root if p is odd.

    Root moduli are uniform in [r_min, r_max], angles uniform; all p roots,
    conjugates included, are at least ``sep`` apart. Amplitude moduli are
    uniform in [0.5, 2].
    """
    while True:
        zs = []
        for _ in range(p // 2):
            z = rng.uniform(r_min, r_max) * np.exp(1j * rng.uniform(0, np.pi))
            zs += [z, z.conjugate()]
        if p % 2:
            zs.append(complex(rng.uniform(r_min, r_max)))
        if separated(zs, sep):
            break
    terms = []
    for z in zs:
        if z.imag > 0:
            c = rng.uniform(0.5, 2) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            terms += [ExpTerm(c, np.log(z)), ExpTerm(c.conjugate(), np.log(z.conjugate()))]
        elif z.imag == 0:
            terms.append(ExpTerm(rng.uniform(0.5, 2) * rng.choice([-1.0, 1.0]), np.log(z)))
    return ExponentialModel(tuple(terms))


def match_error(got, want):
    """Largest distance after greedily pairing each wanted value with its nearest unused got value."""
    pool = list(got)
    worst = 0.0
    for w in want:
        k = int(np.argmin([abs(w - g) for g in pool]))
        worst = max(worst, abs(w - pool.pop(k)))
    return worst


def predicted_parameter_error(model, t):
    """First-order parameter error caused by rounding the samples: eps * |y| / sigma_min(J).

    ``J`` is the Jacobian of the samples with respect to all amplitudes and
    exponents. Exact interpolation is unique, so no method working from the
    rounded samples can beat this bound by much.
    """
    t = np.asarray(t, dtype=float)
    c, s = model.amplitudes, model.exponents
    e = np.exp(np.outer(t, s))
    jac = np.hstack([e, e * c * t[:, None]])
    y = e @ c
    sigma_min = np.linalg.svd(jac, compute_uv=False)[-1]
    return np.finfo(float).eps * np.linalg.norm(y) / sigma_min
