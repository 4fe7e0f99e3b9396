"""Unified front end for the four ways of solving M x = b.

Methods: the closed-form inverse applied densely ("direct"), the FFT-based
structured apply ("dft"), the spectral decomposition ("eig"), and a Cholesky
factorization ("cho").  Factorizations and precomputations are cached per
degree so repeated solves at the same degree only pay the assembly cost once.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .bernstein import mass_matrix
from .inverse import inverse_matrix
from .spectral import SpectralDecomp, build_q, solve_spectral
from .structured import StructuredInverse, solve_dft, structured_inverse

__all__ = [
    "METHODS",
    "METHOD_ALIASES",
    "NotPositiveDefiniteError",
    "DegreeRangeError",
    "UnknownMethodError",
    "CholeskyFactor",
    "cholesky_factor",
    "solve_cholesky",
    "SolveReport",
    "solve",
    "metrics",
    "canonical_method",
    "clear_cache",
]

METHODS = ("direct", "dft", "eig", "cho")

METHOD_ALIASES = {
    "direct": "direct",
    "exact-inverse": "direct",
    "dft": "dft",
    "eig": "eig",
    "spectral": "eig",
    "cho": "cho",
    "cholesky": "cho",
}


class NotPositiveDefiniteError(ValueError):
    """The matrix handed to the Cholesky routine was not numerically SPD."""


class DegreeRangeError(ValueError):
    """Requested degree is outside the range the caller allowed."""


class UnknownMethodError(ValueError):
    """Method name is not one of the known solvers or their aliases."""


def canonical_method(name: str) -> str:
    try:
        return METHOD_ALIASES[name]
    except KeyError:
        raise UnknownMethodError(
            f"unknown method {name!r}; expected one of {sorted(METHOD_ALIASES)}"
        ) from None


@dataclass
class CholeskyFactor:
    """Lower-triangular factor L with M = L L^T."""

    degree: int
    lower: np.ndarray


def cholesky_factor(mass) -> CholeskyFactor:
    """Factor a mass matrix, translating LinAlgError into a domain error."""
    a = np.asarray(mass, dtype=float)
    try:
        lower = np.linalg.cholesky(a)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefiniteError(
            f"Cholesky failed for degree {a.shape[0] - 1}: {exc}"
        ) from exc
    return CholeskyFactor(a.shape[0] - 1, lower)


def solve_cholesky(factor: CholeskyFactor, b) -> np.ndarray:
    """Forward/back substitution through a cached factor."""
    bv = np.asarray(b, dtype=float)
    y = solve_triangular(factor.lower, bv, lower=True)
    return solve_triangular(factor.lower, y, lower=True, trans="T")


@dataclass
class SolveReport:
    """One solve: the answer plus its residual and (optional) error metrics."""

    method: str
    degree: int
    solution: np.ndarray
    residual: float
    err_2: float | None = None
    err_m: float | None = None


_cache: dict = {}
_cache_lock = threading.Lock()


def _cached(kind: str, n: int, builder):
    key = (kind, n)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    value = builder(n)
    with _cache_lock:
        _cache.setdefault(key, value)
        return _cache[key]


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def _mass(n: int) -> np.ndarray:
    return _cached("mass", n, lambda k: mass_matrix(k).matrix)


def _inverse(n: int) -> np.ndarray:
    return _cached("inverse", n, inverse_matrix)


def _structured(n: int) -> StructuredInverse:
    return _cached("structured", n, structured_inverse)


def _spectral(n: int) -> SpectralDecomp:
    return _cached("spectral", n, build_q)


def _cholesky(n: int) -> CholeskyFactor:
    return _cached("cholesky", n, lambda k: cholesky_factor(_mass(k)))


def _residual(n: int, x: np.ndarray, b: np.ndarray) -> float:
    bnorm = float(np.linalg.norm(b))
    if bnorm == 0.0:
        return 0.0
    r = _mass(n) @ x - b
    return float(np.linalg.norm(r)) / bnorm


def solve(method: str, n: int, b, x_ref=None, max_degree: int = 25) -> SolveReport:
    """Solve M x = b at degree n with the chosen method.

    Accepts canonical method names and their long aliases.  If a reference
    solution is supplied the report carries relative 2-norm and M-norm
    errors alongside the residual.
    """
    name = canonical_method(method)
    if not 0 <= n <= max_degree:
        raise DegreeRangeError(f"degree {n} outside allowed range [0, {max_degree}]")
    bv = np.asarray(b, dtype=float)
    if bv.shape != (n + 1,):
        raise ValueError(f"right-hand side shape {bv.shape} does not match degree {n}")
    if name == "direct":
        x = _inverse(n) @ bv
    elif name == "dft":
        x = solve_dft(_structured(n), bv)
    elif name == "eig":
        x = solve_spectral(_spectral(n), bv)
    else:
        x = solve_cholesky(_cholesky(n), bv)
    report = SolveReport(name, n, x, _residual(n, x, bv))
    if x_ref is not None:
        report.err_2, report.err_m, _ = metrics(x, x_ref, bv, _mass(n))
    return report


def metrics(x_hat, x_ref, b, m) -> tuple:
    """Relative 2-norm error, relative M-norm error, relative residual."""
    x_hat = np.asarray(x_hat, dtype=float)
    x_ref = np.asarray(x_ref, dtype=float)
    bv = np.asarray(b, dtype=float)
    mm = np.asarray(m, dtype=float)
    ref2 = float(np.linalg.norm(x_ref))
    if ref2 == 0.0:
        raise ValueError("reference solution has zero norm")
    d = x_hat - x_ref
    err2 = float(np.linalg.norm(d)) / ref2
    # clamp tiny negative rounding in the quadratic forms
    dsq = max(float(d @ (mm @ d)), 0.0)
    rsq = max(float(x_ref @ (mm @ x_ref)), 0.0)
    errm = math.sqrt(dsq / rsq) if rsq > 0.0 else float("inf")
    bnorm = float(np.linalg.norm(bv))
    res = float(np.linalg.norm(mm @ x_hat - bv)) / bnorm if bnorm > 0.0 else 0.0
    return err2, errm, res
