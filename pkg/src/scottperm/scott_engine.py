"""Exact evaluation of permanents of matrices 1/(x_i - y_j).

The rows are indexed by the roots X of a polynomial P (degree n) and the
columns by the roots Y of a polynomial Q (degree m >= n).  The permanent is
obtained without ever computing a root: it equals

    det(H(X) @ E(Y)) / Res(P, Q)

where H is the n x (m+n-1) band of complete homogeneous symmetric functions
of X, E is an (m+n-1) x n matrix of weighted elementary symmetric functions
of Y, and Res is the resultant of the monic forms.  `verify` then compares
this determinant route against every other implemented route.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import SharedRoot, ZeroDegree
from .exact_core import (
    Polynomial,
    RationalMatrix,
    exact_det,
    poly_gcd,
    resultant,
    series_inverse,
)

Value = Union[Fraction, complex]


@dataclass(frozen=True)
class EvalResult:
    """Outcome of one evaluation route."""

    value: Value
    method: str
    n: int
    m: int
    notes: tuple[str, ...] = ()


def build_H(P: Polynomial, m: int) -> RationalMatrix:
    """The n x (m+n-1) matrix with entry h_{j-i} in row i, column j (1-based).

    h_k is the k-th complete homogeneous symmetric function of the roots of
    P; its generating series is the reciprocal of t^n P(1/t) for monic P.
    Entries with j < i are zero.
    """
    if P.degree is None or P.degree < 1:
        raise ZeroDegree("need a polynomial of degree >= 1")
    if m < 0:
        raise ValueError("m must be nonnegative")
    monic = P.monic()
    n = monic.degree
    reversed_p = Polynomial(reversed(monic.coeffs))
    h = series_inverse(reversed_p, m + n - 2) if m + n - 2 >= 0 else []
    width = m + n - 1
    entries = []
    for i in range(n):
        for j in range(width):
            k = j - i
            entries.append(h[k] if k >= 0 else Fraction(0))
    return RationalMatrix(n, width, entries)


def build_E(Q: Polynomial, n: int) -> RationalMatrix:
    """The (m+n-1) x n companion to build_H, built from Q's root data.

    With e_s the s-th elementary symmetric function of the roots of Q
    (e_s = 0 outside 0..m), the 1-based entry in row j, column k is

        (j - 2k + 2) * (-1)^(m-j+k-1) * e_{m-j+k-1}.
    """
    if Q.is_zero:
        raise ZeroDegree("need a nonzero polynomial")
    if n < 1:
        raise ValueError("n must be positive")
    monic = Q.monic()
    m = monic.degree
    # e_s = (-1)^s * coefficient of y^(m-s) in the monic polynomial
    e = [(-1) ** s * monic.coeff(m - s) for s in range(m + 1)]
    height = m + n - 1
    entries = []
    for j in range(1, height + 1):
        for k in range(1, n + 1):
            s = m - j + k - 1
            if 0 <= s <= m:
                sign = -1 if s % 2 else 1
                entries.append((j - 2 * k + 2) * sign * e[s])
            else:
                entries.append(Fraction(0))
    return RationalMatrix(height, n, entries)


def scott_permanent(P: Polynomial, Q: Polynomial) -> EvalResult:
    """Exact permanent of (1/(x_i - y_j)) over the root sets of P and Q.

    P and Q must not share a root.  With more rows than columns (deg P >
    deg Q) the permanent is zero by convention, since no injective
    row-to-column assignment exists.
    """
    if P.degree is None or P.degree < 1:
        raise ZeroDegree("the row polynomial must have degree >= 1")
    if Q.is_zero:
        raise ZeroDegree("the column polynomial must be nonzero")
    if poly_gcd(P, Q).degree != 0:
        raise SharedRoot("the polynomials share a root, so some entry 1/(x - y) is undefined")
    n = P.degree
    m = Q.degree
    if n > m:
        return EvalResult(Fraction(0), "theorem1", n, m, ("n > m: permanent vanishes",))
    H = build_H(P, m)
    E = build_E(Q, n)
    det = exact_det(H @ E)
    res = resultant(P.monic(), Q.monic())
    return EvalResult(det / res, "theorem1", n, m)


def relative_gap(a: Value, b: Value) -> float:
    """|a - b| scaled by max(1, |a|, |b|); exact values are compared as complex."""
    ca, cb = complex(a), complex(b)
    return abs(ca - cb) / max(1.0, abs(ca), abs(cb))


@dataclass(frozen=True)
class RouteOutcome:
    method: str
    value: Value | None
    elapsed_ms: float
    error: str | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class VerifyReport:
    n: int
    m: int
    tolerance: float
    routes: tuple[RouteOutcome, ...]
    agreements: tuple[tuple[str, str, float, bool], ...] = field(default=())

    @property
    def all_agree(self) -> bool:
        return all(ok for _, _, _, ok in self.agreements) if self.agreements else True


def _involution_count(n: int) -> int:
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b if n else 1


def verify(
    P: Polynomial,
    Q: Polynomial,
    tolerance: float = 1e-6,
    oracle_cost_limit: int = 20_000_000,
) -> VerifyReport:
    """Evaluate the permanent by every applicable route and compare.

    Routes: the determinant engine, the backtracking numeric oracle, the
    involution sum (square case), the banded-determinant shortcut when P is
    x^n - 1 or 1 + x + ... + x^(n-1), and any matching closed-form catalog
    entry.  Each route reports its own timing; a route that fails contributes
    its error instead of a value.
    """
    # Import here: these modules build their results out of EvalResult, so a
    # module-level import would be circular.
    from . import closed_catalog, fes_engine, numeric_oracle

    if P.degree is None or P.degree < 1:
        raise ZeroDegree("the row polynomial must have degree >= 1")
    if Q.is_zero:
        raise ZeroDegree("the column polynomial must be nonzero")
    if poly_gcd(P, Q).degree != 0:
        raise SharedRoot("the polynomials share a root")
    n, m = P.degree, Q.degree

    outcomes: list[RouteOutcome] = []

    def run(method: str, task) -> None:
        start = time.perf_counter()
        try:
            value, notes = task()
        except Exception as exc:  # route failures are data, not fatal
            elapsed = (time.perf_counter() - start) * 1000.0
            outcomes.append(RouteOutcome(method, None, elapsed, f"{type(exc).__name__}: {exc}"))
            return
        elapsed = (time.perf_counter() - start) * 1000.0
        outcomes.append(RouteOutcome(method, value, elapsed, None, notes))

    def theorem1_task():
        result = scott_permanent(P, Q)
        return result.value, result.notes

    run("theorem1", theorem1_task)

    injective_maps = 1
    for k in range(n):
        injective_maps *= max(m - k, 0)
    if n > m or injective_maps <= oracle_cost_limit:
        def oracle_task():
            X = numeric_oracle.find_roots(P) if n <= m else []
            if n > m:
                return 0j, ("n > m: no injective assignments",)
            Y = numeric_oracle.find_roots(Q)
            return numeric_oracle.brute_permanent(X, Y), ()

        run("oracle", oracle_task)
    else:
        outcomes.append(
            RouteOutcome("oracle", None, 0.0, None, ("skipped: too many injective assignments",))
        )

    if _involution_count(n) <= 500_000:
        def involution_task():
            X = numeric_oracle.find_roots(P)
            Y = numeric_oracle.find_roots(Q)
            return numeric_oracle.involution_sum(X, Y), ()

        run("involution", involution_task)
    else:
        outcomes.append(
            RouteOutcome("involution", None, 0.0, None, ("skipped: too many involutions",))
        )

    fes_kind = fes_engine.classify_row_polynomial(P)
    if fes_kind is not None:
        kind, fes_n = fes_kind

        def fes_task():
            result = fes_engine.per_via_fes(kind, fes_n, Q)
            return result.value, result.notes

        run(result_method(kind), fes_task)

    matches = closed_catalog.find_matching(P, Q)
    if matches:
        entry_id, params = matches[0]

        def closed_task():
            value = closed_catalog.catalog_eval(entry_id, **params)
            return value, (f"matched {entry_id}",)

        run("closed_form", closed_task)

    agreements: list[tuple[str, str, float, bool]] = []
    valued = [o for o in outcomes if o.value is not None]
    for i in range(len(valued)):
        for j in range(i + 1, len(valued)):
            gap = relative_gap(valued[i].value, valued[j].value)
            agreements.append((valued[i].method, valued[j].method, gap, gap <= tolerance))

    return VerifyReport(n, m, tolerance, tuple(outcomes), tuple(agreements))


def result_method(kind: str) -> str:
    """Route label for the banded-determinant shortcut on each row family."""
    return "fes" if kind == "power_minus_one" else "fes_tilde"
