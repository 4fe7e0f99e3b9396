"""Closed-form entries of the inverse mass matrix.

Two independent published formulas are implemented; they agree exactly in
rational arithmetic, which the test suite exploits.  The scaled variant
(inverse of the Hankel factor) has integer entries and is exposed separately.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

__all__ = [
    "inverse_entry",
    "inverse_entry_dual",
    "inverse_entry_exact",
    "inverse_entry_dual_exact",
    "hankel_inverse_entry",
    "inverse_matrix",
    "last_column_y",
    "last_column_y_exact",
]


def _check_indices(n, i, j):
    if not (0 <= i <= n and 0 <= j <= n):
        raise IndexError(f"indices ({i}, {j}) out of range for degree n={n}")


def _primary_terms(n, i, j):
    """Integer summands of the primary entry formula, nonzero k only."""
    return [
        (2 * k + 1 - i + j) * math.comb(n + 1, i - k) ** 2 * math.comb(n + 1, j + k + 1) ** 2
        for k in range(min(i, n - j) + 1)
    ]


def _dual_terms(n, i, j):
    """Integer summands of the dual-basis entry formula, nonzero k only."""
    return [
        (2 * k + 1)
        * math.comb(n + k + 1, n - j)
        * math.comb(n - k, n - j)
        * math.comb(n + k + 1, n - i)
        * math.comb(n - k, n - i)
        for k in range(min(i, j) + 1)
    ]


def _to_float(t):
    # saturate like a double accumulation would, instead of raising
    try:
        return float(t)
    except OverflowError:
        return math.inf if t > 0 else -math.inf


def _float_sum(terms):
    # plain double accumulation, smallest magnitudes first
    vals = sorted((_to_float(t) for t in terms), key=abs)
    total = 0.0
    for v in vals:
        total += v
    return total


def inverse_entry(n: int, i: int, j: int) -> float:
    """Entry (i, j) of the inverse mass matrix from the primary closed form.

    The value is (-1)^(i+j) / (C(n,i) C(n,j)) times a sum over k of
    (2k+1-i+j) C(n+1,i-k)^2 C(n+1,j+k+1)^2; k runs where both binomials
    are nonzero.
    """
    _check_indices(n, i, j)
    sign = -1.0 if (i + j) % 2 else 1.0
    return sign * _float_sum(_primary_terms(n, i, j)) / _to_float(
        math.comb(n, i) * math.comb(n, j)
    )


def inverse_entry_dual(n: int, i: int, j: int) -> float:
    """Entry (i, j) of the inverse from the dual-basis closed form."""
    _check_indices(n, i, j)
    sign = -1.0 if (i + j) % 2 else 1.0
    return sign * _float_sum(_dual_terms(n, i, j)) / _to_float(
        math.comb(n, i) * math.comb(n, j)
    )


def inverse_entry_exact(n: int, i: int, j: int) -> Fraction:
    """The primary formula evaluated exactly over the rationals."""
    _check_indices(n, i, j)
    sign = -1 if (i + j) % 2 else 1
    return Fraction(sign * sum(_primary_terms(n, i, j)), math.comb(n, i) * math.comb(n, j))


def inverse_entry_dual_exact(n: int, i: int, j: int) -> Fraction:
    """The dual-basis formula evaluated exactly over the rationals."""
    _check_indices(n, i, j)
    sign = -1 if (i + j) % 2 else 1
    return Fraction(sign * sum(_dual_terms(n, i, j)), math.comb(n, i) * math.comb(n, j))


def hankel_inverse_entry(n: int, i: int, j: int) -> int:
    """Entry (i, j) of the inverse of the binomially descaled (Hankel) factor.

    Equal to C(n,i) C(n,j) times the inverse-mass entry; an exact integer.
    """
    _check_indices(n, i, j)
    sign = -1 if (i + j) % 2 else 1
    return sign * sum(_primary_terms(n, i, j))


def inverse_matrix(n: int) -> np.ndarray:
    """The dense inverse mass matrix, every entry from the closed form.

    O(n^3) work in total; only the upper triangle is computed and mirrored.
    """
    a = np.empty((n + 1, n + 1))
    for i in range(n + 1):
        for j in range(i, n + 1):
            v = inverse_entry(n, i, j)
            a[i, j] = v
            a[j, i] = v
    return a


def last_column_y(n: int) -> np.ndarray:
    """The last column of the inverse mass matrix: (-1)^(n+i) (n+1) C(n+1,i)."""
    return np.array(last_column_y_exact(n), dtype=float)


def last_column_y_exact(n: int) -> list:
    """Integer form of the last column of the inverse."""
    return [(-1) ** (n + i) * (n + 1) * math.comb(n + 1, i) for i in range(n + 1)]
