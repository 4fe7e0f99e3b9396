"""Exact rational arithmetic used as the ground truth for the floating-point kernels.

Everything here runs on arbitrary-precision integers and ``fractions.Fraction``,
so results are free of overflow and roundoff.  Matrices are plain row-major
lists of lists.  This is the oracle side of the library: slow, exact, and only
meant for small degrees (the factorials involved grow fast).
"""

from __future__ import annotations

import math
from fractions import Fraction

# A rational scalar; plain ints are accepted anywhere a Rational is (they embed
# exactly into the rationals and Fraction arithmetic mixes with them).
Rational = Fraction

# Row-major rational matrix.
RationalMatrix = list[list[Fraction]]


class SingularMatrixError(ValueError):
    """Exact elimination found a column with no nonzero pivot."""


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binom requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def mass_entry_exact(n: int, i: int, j: int) -> Fraction:
    """Exact L2 inner product of the degree-n Bernstein basis functions i and j.

    Equals C(n,i) C(n,j) (2n-i-j)! (i+j)! / (2n+1)!.
    """
    if not (0 <= i <= n and 0 <= j <= n):
        raise IndexError(f"mass_entry_exact: indices ({i}, {j}) out of range for n={n}")
    num = binom(n, i) * binom(n, j) * math.factorial(2 * n - i - j) * math.factorial(i + j)
    return Fraction(num, math.factorial(2 * n + 1))


def mass_exact(n: int) -> RationalMatrix:
    """Exact (n+1) x (n+1) Bernstein mass matrix."""
    return [[mass_entry_exact(n, i, j) for j in range(n + 1)] for i in range(n + 1)]


def elevation_exact(m: int, n: int) -> RationalMatrix:
    """Exact (n+1) x (m+1) degree-elevation matrix from degree m to degree n >= m."""
    if not 0 <= m <= n:
        raise ValueError(f"elevation_exact requires 0 <= m <= n, got m={m}, n={n}")
    return [
        [Fraction(binom(m, j) * binom(n - m, i - j), binom(n, i)) for j in range(m + 1)]
        for i in range(n + 1)
    ]


def legendre_exact(k: int) -> list[int]:
    """Degree-k Bernstein coefficients of the shifted Legendre polynomial, exactly.

    Component i is (-1)^(k+i) C(k, i); the normalization puts value 1 at x=1.
    """
    return [(-1) ** (k + i) * binom(k, i) for i in range(k + 1)]


def identity_exact(size: int) -> RationalMatrix:
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if len(a[0]) != len(b):
        raise ValueError(f"mat_mul: inner dimensions {len(a[0])} and {len(b)} differ")
    cols = len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for i in range(len(a))
    ]


def mat_vec(a: RationalMatrix, x: list) -> list:
    if len(a[0]) != len(x):
        raise ValueError(f"mat_vec: matrix has {len(a[0])} columns, vector has {len(x)}")
    return [sum(row[k] * x[k] for k in range(len(x))) for row in a]


def transpose(a: RationalMatrix) -> RationalMatrix:
    return [list(col) for col in zip(*a)]


def _eliminate(a: RationalMatrix, rhs: RationalMatrix) -> RationalMatrix:
    """Gauss-Jordan over the rationals, returning the solution of a X = rhs.

    Pivots on the first nonzero entry in each column; exact arithmetic needs no
    magnitude-based pivot selection.
    """
    size = len(a)
    work = [[Fraction(v) for v in row] for row in a]
    out = [[Fraction(v) for v in row] for row in rhs]
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError(f"zero pivot column {col} during exact elimination")
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            out[col], out[pivot_row] = out[pivot_row], out[col]
        inv_piv = 1 / work[col][col]
        work[col] = [v * inv_piv for v in work[col]]
        out[col] = [v * inv_piv for v in out[col]]
        for r in range(size):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [v - factor * p for v, p in zip(work[r], work[col])]
                out[r] = [v - factor * p for v, p in zip(out[r], out[col])]
    return out


def rational_inverse(a: RationalMatrix) -> RationalMatrix:
    """Exact inverse of a square rational matrix; a @ result is the identity exactly."""
    size = len(a)
    if any(len(row) != size for row in a):
        raise ValueError("rational_inverse requires a square matrix")
    return _eliminate(a, identity_exact(size))


def rational_solve(a: RationalMatrix, b: list) -> list[Fraction]:
    """Exact solution of a x = b over the rationals."""
    col = _eliminate(a, [[Fraction(v)] for v in b])
    return [row[0] for row in col]
