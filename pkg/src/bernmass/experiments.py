"""Projection and random-system experiment harnesses with CSV output.

Two smooth target functions are projected onto Bernstein spaces of rising
degree by solving M x = b with each of the four methods, and compared with
an independently computed Legendre-series projection.  A second harness
solves randomly generated systems and reports error/residual metrics per
method.  Records go to CSV with 17-significant-digit floats so runs are
reproducible byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bernstein import BernsteinPoly, basis_values, evaluate, legendre_coeffs, mass_matrix
from .exact import mass_exact, rational_solve
from .quadrature import QuadratureRule, composite_gauss_legendre
from .rng import Xorshift64Star
from .solvers import METHODS, canonical_method, cholesky_factor, metrics, solve, solve_cholesky

__all__ = [
    "f1",
    "f2",
    "FUNCTIONS",
    "COLUMN_TAGS",
    "default_rule",
    "moments",
    "function_norm",
    "legendre_reference",
    "ExperimentRecord",
    "run_projection",
    "run_random",
    "reference_solution",
    "render_csv",
    "write_csv",
]


def f1(x):
    """A shifted, scaled Runge bump: symmetric about 1/2, slow to approximate."""
    x = np.asarray(x, dtype=float)
    return 1.0 / (1.0 + 396.0 * (x - 0.5) ** 2)


def f2(x):
    """A gently sloped rational function; its projections converge fast."""
    x = np.asarray(x, dtype=float)
    return 0.01 + x / (x * x + 1.0)


FUNCTIONS = {"f1": f1, "f2": f2}

# CSV column tags per solver, in fixed output order
COLUMN_TAGS = {"direct": "direct", "dft": "DFT", "eig": "Eig", "cho": "cho"}

_RULE = None


def default_rule() -> QuadratureRule:
    """The fixed moment-integration rule: 32 Gauss points on each of 8 cells."""
    global _RULE
    if _RULE is None:
        _RULE = composite_gauss_legendre(32, 8)
    return _RULE


def moments(f, n: int, rule: QuadratureRule | None = None) -> np.ndarray:
    """Right-hand side b_i = integral of f times the i-th degree-n basis function."""
    rule = rule or default_rule()
    fv = np.asarray(f(rule.nodes), dtype=float)
    return (rule.weights * fv) @ basis_values(n, rule.nodes)


def function_norm(f, rule: QuadratureRule | None = None) -> float:
    """L2 norm of f over [0,1] under the moment rule."""
    rule = rule or default_rule()
    fv = np.asarray(f(rule.nodes), dtype=float)
    return float(np.sqrt(rule.weights @ (fv * fv)))


def legendre_reference(f, n: int, rule: QuadratureRule | None = None) -> BernsteinPoly:
    """Degree-n best approximation of f assembled from its Legendre series.

    The orthogonal-series coefficients (2k+1) (f, L_k) only need numerical
    integration, so this route never touches the mass matrix and serves as
    the independent reference for the projection experiments.
    """
    rule = rule or default_rule()
    fv = np.asarray(f(rule.nodes), dtype=float)
    y = 2.0 * rule.nodes - 1.0
    coeffs = np.zeros(n + 1)
    p_prev = np.ones_like(y)
    p = y.copy()
    for k in range(n + 1):
        lk = p_prev if k == 0 else p
        ck = (2 * k + 1) * float(rule.weights @ (fv * lk))
        coeffs += ck * legendre_coeffs(k, n).coeffs
        if k >= 1:
            p_prev, p = p, ((2 * k + 1) * y * p - k * p_prev) / (k + 1)
    return BernsteinPoly(coeffs)


@dataclass
class ExperimentRecord:
    """One degree's worth of metrics; values keep their insertion order."""

    degree: int
    values: dict


def _ordered_methods(methods) -> list:
    requested = {canonical_method(m) for m in methods}
    return [m for m in METHODS if m in requested]


def run_projection(func, n_max: int, methods=METHODS, rule: QuadratureRule | None = None) -> list:
    """Project a target function at degrees 0..n_max with the chosen solvers.

    Per degree and method the record carries: relative L2 function error
    ("fp"), relative L2 gap to the Legendre reference projection ("Pifp"),
    relative 2-norm coefficient error against that reference ("err"), and
    relative residual ("res").  A solver failure flags its four values as
    nan and the run continues.
    """
    f = FUNCTIONS[func] if isinstance(func, str) else func
    rule = rule or default_rule()
    chosen = _ordered_methods(methods)
    fnorm = function_norm(f, rule)
    fv = np.asarray(f(rule.nodes), dtype=float)
    records = []
    for n in range(n_max + 1):
        b = moments(f, n, rule)
        ref = legendre_reference(f, n, rule)
        mm = mass_matrix(n).matrix
        per_method: dict = {m: {} for m in chosen}
        for m in chosen:
            try:
                report = solve(m, n, b, max_degree=n_max)
                x_hat = report.solution
                resid = report.residual
            except (ValueError, np.linalg.LinAlgError):
                per_method[m] = dict.fromkeys(("fp", "Pifp", "err", "res"), float("nan"))
                continue
            pv = evaluate(BernsteinPoly(x_hat), rule.nodes)
            fp = math.sqrt(max(float(rule.weights @ (fv - pv) ** 2), 0.0)) / fnorm
            d = x_hat - ref.coeffs
            pifp = math.sqrt(max(float(d @ (mm @ d)), 0.0)) / fnorm
            err = float(np.linalg.norm(d)) / float(np.linalg.norm(ref.coeffs))
            per_method[m] = {"fp": fp, "Pifp": pifp, "err": err, "res": resid}
        values = {}
        for family in ("fp", "Pifp", "err", "res"):
            for m in chosen:
                values[f"{COLUMN_TAGS[m]}{family}"] = per_method[m][family]
        records.append(ExperimentRecord(n, values))
    return records


def reference_solution(n: int, b, oracle_limit: int = 12) -> np.ndarray:
    """Accurate solution of M x = b used as the comparison point.

    Up to the oracle limit the rounded right-hand side is solved exactly in
    rational arithmetic; beyond it a Cholesky solution is sharpened by one
    refinement step whose residual is accumulated with compensated
    summation.
    """
    bv = np.asarray(b, dtype=float)
    if n <= oracle_limit:
        exact_b = [Fraction(float(v)) for v in bv]
        sol = rational_solve(mass_exact(n), exact_b)
        return np.array([float(v) for v in sol])
    mm = mass_matrix(n).matrix
    factor = cholesky_factor(mm)
    x0 = solve_cholesky(factor, bv)
    r = np.array(
        [
            math.fsum([bv[i]] + [-(mm[i, j] * x0[j]) for j in range(n + 1)])
            for i in range(n + 1)
        ]
    )
    return x0 + solve_cholesky(factor, r)


def run_random(n_max: int, seed: int = 42, methods=METHODS, oracle_limit: int = 12) -> list:
    """Solve one random system per degree 0..n_max with each chosen method.

    A random solution vector is drawn uniformly from [-0.5, 0.5]^{n+1} and
    the right-hand side formed by multiplication (so residuals are measured
    against a consistent, well-scaled b).  Errors are reported against the
    reference solution of the rounded system, in the 2-norm ("L2err") and
    the M-norm ("Merr"), together with the relative residual ("res").
    """
    chosen = _ordered_methods(methods)
    gen = Xorshift64Star(seed)
    records = []
    for n in range(n_max + 1):
        mm = mass_matrix(n).matrix
        x_true = gen.uniform(-0.5, 0.5, n + 1)
        b = mm @ x_true
        x_ref = reference_solution(n, b, oracle_limit)
        per_method: dict = {}
        for m in chosen:
            report = solve(m, n, b, max_degree=n_max)
            err2, errm, res = metrics(report.solution, x_ref, b, mm)
            per_method[m] = {"L2err": err2, "Merr": errm, "res": res}
        values = {}
        for family in ("L2err", "Merr", "res"):
            for m in chosen:
                values[f"{COLUMN_TAGS[m]}{family}"] = per_method[m][family]
        records.append(ExperimentRecord(n, values))
    return records


def _format_value(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return "%.17g" % float(v)


def render_csv(records, degree_column: str = "n") -> str:
    """Records as CSV text: header, one line per degree, newline-terminated."""
    if not records:
        raise ValueError("no records to render")
    keys = list(records[0].values.keys())
    lines = [",".join([degree_column] + keys)]
    for rec in records:
        if list(rec.values.keys()) != keys:
            raise ValueError("records disagree on their columns")
        lines.append(",".join([str(rec.degree)] + [_format_value(rec.values[k]) for k in keys]))
    return "\n".join(lines) + "\n"


def write_csv(records, destination, degree_column: str = "n") -> None:
    """Render records and write them to a path or file-like object."""
    text = render_csv(records, degree_column)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", newline="") as fh:
            fh.write(text)
