"""Spectral decomposition of the mass matrix.

The eigenvalues are known in closed form, and the orthogonal eigenvector
matrix Q has columns proportional to degree-elevated Legendre coefficient
vectors.  build_q assembles Q in O(n^2) by running the Legendre three-term
recurrence directly in the degree-n Bernstein representation: multiply by x
(one degree up), reduce back down, combine.  The naive construction that
elevates each Legendre vector separately costs O(n^3) and is kept for
cross-checking.
"""

from __future__ import annotations

import numpy as np

from .bernstein import BernsteinPoly, degree_reduce, legendre_coeffs, multiply_by_x

__all__ = [
    "SpectralDecomp",
    "eigenvalue",
    "eigenvalues",
    "build_q",
    "build_q_by_elevation",
    "solve_spectral",
    "apply_mass_spectral",
]


class SpectralDecomp:
    """Orthogonal eigenvectors and eigenvalues of the degree-n mass matrix."""

    def __init__(self, degree, q, lam):
        self.degree = degree
        self.q = q
        self.lam = lam

    def __repr__(self):
        return f"SpectralDecomp(degree={self.degree})"


def eigenvalues(n: int) -> np.ndarray:
    """All eigenvalues (n!)^2 / ((n+i+1)!(n-i)!), i = 0..n, largest first.

    Built by the ratio recurrence lam(i+1) = lam(i) (n-i)/(n+i+2) from
    lam(0) = 1/(n+1), avoiding explicit factorials.
    """
    lam = np.empty(n + 1)
    lam[0] = 1.0 / (n + 1)
    for i in range(n):
        lam[i + 1] = lam[i] * (n - i) / (n + i + 2)
    return lam


def eigenvalue(n: int, i: int) -> float:
    """The i-th eigenvalue of the degree-n mass matrix (decreasing in i)."""
    if not 0 <= i <= n:
        raise IndexError(f"eigenvalue index {i} out of range for degree {n}")
    lam = 1.0 / (n + 1)
    for k in range(i):
        # same operation order as eigenvalues() so both routes agree bitwise
        lam = lam * (n - k) / (n + k + 2)
    return lam


def build_q(n: int) -> SpectralDecomp:
    """Assemble the orthogonal eigenvector matrix in O(n^2) operations.

    Columns 0 and 1 are the constant and linear Legendre coefficient vectors
    at degree n.  Each later column j < n comes from the three-term recurrence
    applied to the previous two, where the multiply-by-x step goes one degree
    up and is least-squares reduced back to degree n.  Column n needs no
    recurrence: it is the native degree-n Legendre vector.  Finally each
    column j is scaled by sqrt((2j+1) lam_j), which normalizes it to unit
    2-norm.
    """
    lam = eigenvalues(n)
    q = np.zeros((n + 1, n + 1))
    q[:, 0] = 1.0
    if n >= 1:
        q[:, 1] = (2.0 * np.arange(n + 1) - n) / n
    for j in range(2, n):
        t = degree_reduce(multiply_by_x(BernsteinPoly(q[:, j - 1])))
        q[:, j] = ((2 * j - 1.0) / j) * (2.0 * t.coeffs - q[:, j - 1]) - (
            (j - 1.0) / j
        ) * q[:, j - 2]
    if n >= 2:
        q[:, n] = legendre_coeffs(n, n).coeffs
    q *= np.sqrt((2.0 * np.arange(n + 1) + 1.0) * lam)
    return SpectralDecomp(n, q, lam)


def build_q_by_elevation(n: int) -> SpectralDecomp:
    """Reference eigenvector construction: elevate each Legendre vector directly.

    O(n^3) work; exists to validate build_q.
    """
    lam = eigenvalues(n)
    q = np.empty((n + 1, n + 1))
    for j in range(n + 1):
        q[:, j] = legendre_coeffs(j, n).coeffs
    q *= np.sqrt((2.0 * np.arange(n + 1) + 1.0) * lam)
    return SpectralDecomp(n, q, lam)


def solve_spectral(d: SpectralDecomp, b) -> np.ndarray:
    """Apply the inverse mass matrix: Q diag(1/lam) Q^T b, O(n^2)."""
    b = np.asarray(b, dtype=float)
    return d.q @ ((d.q.T @ b) / d.lam)


def apply_mass_spectral(d: SpectralDecomp, c) -> np.ndarray:
    """Apply the mass matrix itself through the decomposition: Q diag(lam) Q^T c."""
    c = np.asarray(c, dtype=float)
    return d.q @ (d.lam * (d.q.T @ c))
