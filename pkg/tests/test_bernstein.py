"""Basis operations: assembly, elevation, evaluation, and degree reduction."""

import math
from fractions import Fraction

import numpy as np
import pytest

from bernmass.bernstein import (
    BernsteinPoly,
    DegreeTooLargeError,
    basis_values,
    binomial_diag,
    degree_reduce,
    elevate,
    elevation_matrix,
    evaluate,
    hankel_moments,
    legendre_coeffs,
    m_inner,
    mass_matrix,
    multiply_by_x,
)
from bernmass.exact import mass_exact


def test_mass_matrix_matches_rational_oracle():
    for n in range(10):
        m = mass_matrix(n).matrix
        exact = np.array([[float(v) for v in row] for row in mass_exact(n)])
        # assembly is accurate to one ulp of the largest entry
        assert np.max(np.abs(m - exact)) <= 2e-16 * np.max(exact)


def test_mass_matrix_structure():
    mm = mass_matrix(4)
    assert mm.degree == 4
    assert mm.matrix.shape == (5, 5)
    assert np.allclose(mm.matrix, mm.matrix.T)
    # descaled factor is Hankel: constant along anti-diagonals
    h = mm.hankel_factor
    hs = hankel_moments(4)
    for i in range(5):
        for j in range(5):
            assert h[i + j] == hs[i + j]
    assert np.allclose(np.asarray(mm), mm.matrix)


def test_hankel_moments_values():
    h = hankel_moments(2)
    expected = [Fraction(math.factorial(4 - s) * math.factorial(s), math.factorial(5)) for s in range(5)]
    assert np.allclose(h, [float(v) for v in expected], rtol=1e-15)


def test_binomial_diag():
    assert np.array_equal(binomial_diag(4), [1.0, 4.0, 6.0, 4.0, 1.0])


def test_mass_matrix_degree_guard():
    mass_matrix(582)  # largest degree whose entries stay inside double range
    with pytest.raises(DegreeTooLargeError):
        mass_matrix(583)


def test_elevation_matrix_one_step():
    n = 5
    e = elevation_matrix(n, n + 1)
    for i in range(n + 2):
        for j in range(n + 1):
            if j == i:
                assert e[i, j] == pytest.approx((n + 1 - i) / (n + 1))
            elif j == i - 1:
                assert e[i, j] == pytest.approx(i / (n + 1))
            else:
                assert e[i, j] == 0.0


def test_elevation_preserves_values():
    p = BernsteinPoly(np.array([0.3, -1.0, 2.0, 0.7]))
    q = elevate(p, 7)
    x = np.linspace(0.0, 1.0, 33)
    assert np.allclose(q(x), p(x), atol=1e-14)
    assert q.degree == 7


def test_multi_step_elevation_composes():
    a = elevation_matrix(3, 6)
    b = elevation_matrix(5, 6) @ elevation_matrix(3, 5)
    assert np.allclose(a, b, atol=1e-14)


def test_evaluate_against_closed_form():
    n = 6
    coeffs = np.array([1.0, 0.0, 2.0, -1.0, 0.5, 3.0, -2.0])
    p = BernsteinPoly(coeffs)
    x = np.linspace(0.0, 1.0, 17)
    direct = basis_values(n, x) @ coeffs
    assert np.allclose(evaluate(p, x), direct, atol=1e-13)
    # scalar input comes back as a scalar
    assert np.isscalar(float(p(0.25)))


def test_basis_partition_of_unity():
    x = np.linspace(0.0, 1.0, 11)
    for n in (1, 4, 9):
        assert np.allclose(basis_values(n, x).sum(axis=1), 1.0, atol=1e-14)


def test_basis_endpoint_values():
    vals = basis_values(3, np.array([0.0, 1.0]))
    assert np.array_equal(vals[0], [1.0, 0.0, 0.0, 0.0])
    assert np.array_equal(vals[1], [0.0, 0.0, 0.0, 1.0])


def test_legendre_coeffs_native_degree():
    # at its own degree the coefficient vector is alternating binomials
    for k in range(6):
        c = legendre_coeffs(k, k).coeffs
        expected = [(-1) ** (k + i) * math.comb(k, i) for i in range(k + 1)]
        assert np.array_equal(c, np.array(expected, dtype=float))


def test_legendre_coeffs_elevated_linear():
    # the degree-1 orthogonal polynomial elevated to degree n
    for n in (2, 5, 9):
        c = legendre_coeffs(1, n).coeffs
        expected = (2 * np.arange(n + 1) - n) / n
        assert np.allclose(c, expected, atol=1e-14)


def test_legendre_value_at_one():
    for k in range(6):
        p = legendre_coeffs(k, k + 3)
        assert p(1.0) == pytest.approx(1.0, abs=1e-12)


def test_multiply_by_x():
    # x * (degree-1 polynomial with values x) = x^2, checked pointwise
    p = BernsteinPoly(np.array([0.0, 1.0]))
    q = multiply_by_x(p)
    assert q.degree == 2
    x = np.linspace(0.0, 1.0, 9)
    assert np.allclose(q(x), x * x, atol=1e-14)


def test_degree_reduce_exact_case():
    # x^2's degree-2 coefficients reduce to nothing exactly representable,
    # but an elevated degree-1 polynomial reduces back exactly
    p = BernsteinPoly(np.array([0.0, 0.5, 1.0]))
    q = degree_reduce(p)
    assert np.allclose(q.coeffs, [0.0, 1.0], atol=1e-14)


def test_degree_reduce_roundtrip_random():
    rng = np.random.default_rng(3)
    for n in (2, 5, 11):
        p = BernsteinPoly(rng.standard_normal(n))
        q = degree_reduce(elevate(p, n))
        assert np.allclose(q.coeffs, p.coeffs, atol=1e-11)


def test_degree_reduce_is_least_squares():
    # the reduction residual must be orthogonal to every elevated vector
    rng = np.random.default_rng(5)
    n = 6
    p = BernsteinPoly(rng.standard_normal(n + 1))
    q = degree_reduce(p)
    e = elevation_matrix(n - 1, n)
    mm = mass_matrix(n).matrix
    resid = e.T @ (mm @ (e @ q.coeffs - p.coeffs))
    assert np.max(np.abs(resid)) <= 1e-13


def test_m_inner_matches_exact():
    p = BernsteinPoly(np.array([1.0, 2.0, 3.0]))
    q = BernsteinPoly(np.array([-1.0, 0.0, 1.0]))
    m = mass_exact(2)
    expected = 0.0
    for i in range(3):
        for j in range(3):
            expected += float(m[i][j]) * p.coeffs[i] * q.coeffs[j]
    assert m_inner(p, q) == pytest.approx(expected, rel=1e-14)
