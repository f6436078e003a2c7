import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from synth import match_error, random_roots

from triexp import linalg
from triexp.errors import NoConvergence, RankDeficient, SingularMatrix, ZeroNode
from triexp.linalg import Polynomial, least_squares, roots, solve, vandermonde
from triexp.prony import FitOptions, characteristic_polynomial, linear_prediction
from triexp.published import GDP_HU_REAL_EXPONENT


class TestSolve:
    def test_identity(self):
        x = solve(np.eye(3), [1, 2j, 3])
        assert np.array_equal(x, [1, 2j, 3])

    def test_two_by_two(self):
        a = np.array([[1, 1], [1, -1]], dtype=complex)
        x, res = solve(a, [2, 0], full=True)
        assert np.allclose(a @ x, [2, 0], atol=1e-15)
        assert np.allclose(x, [1, 1])
        assert res <= 1e-15

    def test_singular(self):
        with pytest.raises(SingularMatrix):
            solve([[1, 1], [1, 1]], [1, 2])

    def test_needs_pivoting(self):
        # zero leading entry would break elimination without row exchange
        a = np.array([[0, 1], [1, 0]], dtype=complex)
        assert np.allclose(solve(a, [3, 4]), [4, 3])

    def test_shape_checks(self):
        with pytest.raises(ValueError):
            solve(np.ones((2, 3)), [1, 2])
        with pytest.raises(ValueError):
            solve(np.eye(2), [1, 2, 3])

    def test_random_against_numpy(self, rng):
        for n in range(1, 12):
            a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            b = rng.normal(size=n) + 1j * rng.normal(size=n)
            assert np.allclose(solve(a, b), np.linalg.solve(a, b), rtol=1e-10, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32 - 1))
def test_solve_residual_bound(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) + 3 * n * np.eye(n)
    b = rng.normal(size=n) + 1j * rng.normal(size=n)
    x = solve(a, b)
    inf = lambda v: np.abs(v).max()
    anorm = np.abs(a).sum(axis=1).max()
    assert inf(a @ x - b) <= 1e-9 * (anorm * inf(x) + inf(b))


class TestLeastSquares:
    def test_mean(self):
        x = least_squares(np.ones((3, 1)), [1, 2, 3])
        assert x[0] == pytest.approx(2.0, rel=1e-14)

    def test_square_matches_solve(self, rng):
        a = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
        b = rng.normal(size=5) + 1j * rng.normal(size=5)
        x1, x2 = least_squares(a, b), solve(a, b)
        assert np.abs(x1 - x2).max() <= 1e-10 * np.abs(x2).max()

    def test_normal_equation_residual(self, rng):
        a = rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3))
        b = rng.normal(size=6) + 1j * rng.normal(size=6)
        x = least_squares(a, b)
        scale = np.abs(a).max() * (np.abs(a).max() * np.abs(x).max() + np.abs(b).max())
        assert np.abs(a.conj().T @ (a @ x - b)).max() <= 1e-9 * scale

    def test_against_lstsq(self, rng):
        a = rng.normal(size=(20, 7)) + 1j * rng.normal(size=(20, 7))
        b = rng.normal(size=20)
        assert np.allclose(least_squares(a, b), np.linalg.lstsq(a, b, rcond=None)[0], rtol=1e-10, atol=1e-12)

    def test_rank_deficient(self):
        a = np.array([[1, 2], [2, 4], [3, 6]], dtype=complex)
        with pytest.raises(RankDeficient):
            least_squares(a, [1, 2, 3])

    def test_needs_tall(self):
        with pytest.raises(ValueError):
            least_squares(np.ones((2, 3)), [1, 2])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_least_squares_consistent_system_matches_solve(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) + 3 * n * np.eye(n)
    b = rng.normal(size=n) + 1j * rng.normal(size=n)
    x = solve(a, b)
    assert np.abs(least_squares(a, b) - x).max() <= 1e-10 * np.abs(x).max()


class TestRoots:
    def test_real_pair(self):
        assert match_error(roots([-1, 0, 1]), [1, -1]) < 1e-14

    def test_imaginary_pair(self):
        assert match_error(roots([1, 0, 1]), [1j, -1j]) < 1e-14

    def test_zero_roots_deflated(self):
        r = roots([0, 0, 2, 1])
        assert list(r[:2]) == [0, 0]
        assert abs(r[2] + 2) < 1e-15

    def test_linear(self):
        assert roots(Polynomial((3, 2)))[0] == -1.5

    def test_residual_postcondition(self, rng):
        coeffs = rng.normal(size=13) + 1j * rng.normal(size=13)
        p = Polynomial(tuple(coeffs))
        for z in roots(p):
            bound = 1e-10 * np.abs(coeffs).sum() * max(1.0, abs(z)) ** p.degree
            assert abs(p(z)) <= bound

    def test_zero_leading_rejected(self):
        with pytest.raises(ValueError):
            Polynomial((1, 2, 0))
        with pytest.raises(ValueError):
            roots([5])

    def test_iteration_cap(self, monkeypatch):
        monkeypatch.setattr(linalg, "ROOT_MAX_ITER", 1)
        with pytest.raises(NoConvergence):
            roots(Polynomial.from_roots([0.5, 1.5, -1, 2j, 0.7 - 0.3j]))

    def test_gdp_prediction_polynomial(self, gdp):
        z = roots(characteristic_polynomial(linear_prediction(gdp, 15)))
        assert len(z) == 15
        real = z[np.abs(z.imag) < 1e-12]
        assert len(real) == 1
        # exponentiation oracle: z = exp(s) for the printed real exponent
        assert real[0].real == pytest.approx(math.exp(GDP_HU_REAL_EXPONENT), abs=1e-9)
        assert real[0].real == pytest.approx(1.0556, abs=1e-4)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32 - 1))
def test_roots_recover_known_roots(degree, seed):
    rng = np.random.default_rng(seed)
    want = random_roots(rng, degree, 0.5, 2.0)
    got = roots(Polynomial.from_roots(want))
    assert len(got) == degree
    assert match_error(got, want) <= 1e-8


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-10, 10), min_size=2, max_size=12), st.floats(0.1, 10))
def test_real_polynomial_roots_conjugate_closed(coeffs, lead):
    z = roots(Polynomial(tuple(coeffs) + (lead,)))
    assert match_error(np.conj(z), z) <= 1e-8 * max(1.0, np.abs(z).max())


class TestVandermonde:
    def test_unit_node(self):
        assert np.allclose(vandermonde([1], [1, 2, 3]), np.ones((3, 1)))

    def test_integer_powers(self):
        assert np.allclose(vandermonde([2, 3], [1, 2]), [[2, 3], [4, 9]], rtol=1e-15)

    def test_analytic(self):
        assert vandermonde([cmath.exp(0.1)], [10])[0, 0] == pytest.approx(math.e, rel=1e-14)

    def test_zero_node(self):
        with pytest.raises(ZeroNode):
            vandermonde([1, 0], [1, 2])
