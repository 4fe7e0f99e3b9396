"""Gauss-Legendre quadrature on [0, 1], plain and composite.

Nodes on [-1, 1] are the roots of the Legendre polynomial P_m, found by
bisection-safeguarded Newton iteration started from the Chebyshev root
estimates; weights are 2 / ((1 - x^2) P_m'(x)^2).  The rule is then mapped
affinely to [0, 1] and optionally replicated over a uniform partition into
cells, which is how the projection experiments integrate their target
functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "QuadratureRule",
    "gauss_legendre",
    "composite_gauss_legendre",
    "integrate",
]


@dataclass
class QuadratureRule:
    """Nodes and weights for integration over [0, 1]."""

    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return self.nodes.size


def _legendre_value(m: int, x: float) -> float:
    """P_m(x) by the three-term recurrence."""
    p_prev, p = 1.0, x
    for k in range(1, m):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    return p if m > 0 else 1.0


def _legendre_value_derivative(m: int, x: float) -> tuple:
    """P_m(x) and P_m'(x); x must lie strictly inside (-1, 1)."""
    p_prev, p = 1.0, x
    for k in range(1, m):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    # derivative from the lower-degree value: (x^2-1) P_m' = m (x P_m - P_{m-1})
    dp = m * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def _root_in_bracket(m: int, lo: float, hi: float) -> float:
    """One Legendre root by Newton with a bisection safety net."""
    f_lo = _legendre_value(m, lo)
    f_hi = _legendre_value(m, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise RuntimeError("initial bracket does not straddle a sign change")
    x = 0.5 * (lo + hi)
    for _ in range(100):
        f, df = _legendre_value_derivative(m, x)
        if f == 0.0:
            return x
        if (f > 0.0) == (f_lo > 0.0):
            lo = x
        else:
            hi = x
        step = f / df
        x_new = x - step
        if not lo < x_new < hi:
            x_new = 0.5 * (lo + hi)  # Newton left the bracket; bisect instead
        if abs(x_new - x) <= 1e-16 * max(1.0, abs(x)):
            return x_new
        x = x_new
    return x


def gauss_legendre(m: int) -> QuadratureRule:
    """The m-point Gauss-Legendre rule mapped to [0, 1]; exact to degree 2m-1."""
    if m < 1:
        raise ValueError("need at least one quadrature point")
    if m == 1:
        return QuadratureRule(np.array([0.5]), np.array([1.0]))
    # Chebyshev angles interlace the Legendre roots; midpoints of consecutive
    # estimates (capped by +-1) bracket each root.
    guesses = np.array(
        [math.cos(math.pi * (4 * k + 3) / (4 * m + 2)) for k in range(m)]
    )[::-1]  # ascending
    edges = np.empty(m + 1)
    edges[0] = -1.0
    edges[-1] = 1.0
    edges[1:-1] = 0.5 * (guesses[:-1] + guesses[1:])
    nodes = np.empty(m)
    weights = np.empty(m)
    half = m // 2
    for k in range(half):
        x = _root_in_bracket(m, edges[k], edges[k + 1])
        _, dp = _legendre_value_derivative(m, x)
        nodes[k] = x
        weights[k] = 2.0 / ((1.0 - x * x) * dp * dp)
        # symmetry fills the mirrored root
        nodes[m - 1 - k] = -x
        weights[m - 1 - k] = weights[k]
    if m % 2:
        nodes[half] = 0.0
        _, dp = _legendre_value_derivative(m, 0.0)
        weights[half] = 2.0 / (dp * dp)
    return QuadratureRule(0.5 * (nodes + 1.0), 0.5 * weights)


def composite_gauss_legendre(points: int, cells: int) -> QuadratureRule:
    """The points-per-cell rule replicated over `cells` equal subintervals of [0, 1]."""
    if cells < 1:
        raise ValueError("need at least one cell")
    base = gauss_legendre(points)
    width = 1.0 / cells
    nodes = (base.nodes[None, :] + np.arange(cells)[:, None]) * width
    weights = np.tile(base.weights * width, cells)
    return QuadratureRule(nodes.reshape(-1), weights)


def integrate(f, rule: QuadratureRule) -> float:
    """Integral of f over [0, 1] under the given rule; f must accept arrays."""
    return float(rule.weights @ np.asarray(f(rule.nodes), dtype=float))
