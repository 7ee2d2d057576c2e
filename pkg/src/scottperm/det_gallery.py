"""A small catalog of structured matrices with product-form determinants.

Each case pairs an explicit matrix builder with the closed form its
determinant factors into, so the two can be checked against each other over
parameter grids.  All four families are circulant-flavored: entries depend
on i - j modulo n.

Case ids and their parameters:

* ``prop6``: n, r, x (n values), y (n values).  Diagonal x_i plus a cyclic
  diagonal of y values shifted by r; determinant splits over gcd(r, n)
  orbits.
* ``thm7``: n, a, b, c, d, e.  A quadratic-in-(i-j) circulant with an
  affine column correction.
* ``thm8``: n, m, a.  An (n-1) x (n-1) three-branch pattern.
* ``cor9``: n, a.  A two-branch specialization with determinant
  n^(n-2) * a (a+1) ... (a+n-2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .errors import BadParams
from .exact_core import RationalMatrix

GALLERY_IDS = ("prop6", "thm7", "thm8", "cor9")


@dataclass
class GalleryCase:
    """One gallery instance: a case id plus its parameter values."""

    id: str
    params: Mapping[str, Any]


def _rational(params: Mapping[str, Any], key: str) -> Fraction:
    if key not in params:
        raise BadParams(f"missing parameter {key!r}")
    value = params[key]
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise BadParams(f"parameter {key!r} must be an int or Fraction, got {type(value).__name__}")


def _count(params: Mapping[str, Any], key: str, minimum: int) -> int:
    if key not in params:
        raise BadParams(f"missing parameter {key!r}")
    value = params[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise BadParams(f"parameter {key!r} must be an integer >= {minimum}")
    return value


def _value_list(params: Mapping[str, Any], key: str, n: int) -> list[Fraction]:
    if key not in params:
        raise BadParams(f"missing parameter {key!r}")
    seq = params[key]
    try:
        values = [Fraction(v) if isinstance(v, (int, Fraction)) else None for v in seq]
    except TypeError:
        raise BadParams(f"parameter {key!r} must be a sequence") from None
    if any(v is None for v in values) or len(values) != n:
        raise BadParams(f"parameter {key!r} must be {n} ints or Fractions")
    return values


def gallery_matrix(case: GalleryCase) -> RationalMatrix:
    """Build the explicit matrix for a gallery case."""
    if case.id == "prop6":
        return _prop6_matrix(case.params)
    if case.id == "thm7":
        return _thm7_matrix(case.params)
    if case.id == "thm8":
        return _thm8_matrix(case.params)
    if case.id == "cor9":
        return _cor9_matrix(case.params)
    raise BadParams(f"unknown gallery case {case.id!r}")


def gallery_closed_form(case: GalleryCase) -> Fraction:
    """Evaluate the factored determinant formula for a gallery case."""
    if case.id == "prop6":
        return _prop6_closed(case.params)
    if case.id == "thm7":
        return _thm7_closed(case.params)
    if case.id == "thm8":
        return _thm8_closed(case.params)
    if case.id == "cor9":
        return _cor9_closed(case.params)
    raise BadParams(f"unknown gallery case {case.id!r}")


# prop6: diagonal of x values plus an r-shifted cyclic diagonal of y values.


def _prop6_matrix(params: Mapping[str, Any]) -> RationalMatrix:
    n = _count(params, "n", 1)
    r = _count(params, "r", 1)
    if r > n:
        raise BadParams("need 1 <= r <= n")
    x = _value_list(params, "x", n)
    y = _value_list(params, "y", n)
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        entries[i - 1][i - 1] += x[i - 1]
    for j in range(1, n + 1):
        row = (j + r - 1) % n + 1
        entries[row - 1][j - 1] += y[j - 1]
    return RationalMatrix.from_rows(entries)


def _prop6_closed(params: Mapping[str, Any]) -> Fraction:
    n = _count(params, "n", 1)
    r = _count(params, "r", 1)
    if r > n:
        raise BadParams("need 1 <= r <= n")
    x = _value_list(params, "x", n)
    y = _value_list(params, "y", n)
    d = math.gcd(r, n)
    q = n // d
    total = Fraction(1)
    for i in range(1, d + 1):
        x_orbit = Fraction(1)
        y_orbit = Fraction(1)
        for j in range(1, q + 1):
            x_orbit *= x[i + (j - 1) * d - 1]
            y_orbit *= y[i + (j - 1) * d - 1]
        total *= x_orbit - (-1) ** q * y_orbit
    return total


# thm7: entry (v+c)(va+b) + d - (j-1)(va+e) where v = 1 + ((i-j) mod n).


def _thm7_matrix(params: Mapping[str, Any]) -> RationalMatrix:
    n = _count(params, "n", 1)
    a, b, c, d, e = (_rational(params, k) for k in "abcde")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            v = 1 + (i - j) % n
            row.append((v + c) * (v * a + b) + d - (j - 1) * (v * a + e))
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def _thm7_u(n: int, a: Fraction, b: Fraction, c: Fraction, d: Fraction, e: Fraction) -> Fraction:
    return (
        Fraction((n + 1) * (n + 2), 3) * a * a
        + Fraction((n + 1) * (2 * n + 7), 6) * a * b
        + Fraction(n + 1, 2) * b * b
        + Fraction((n + 1) * (2 * n + 7), 6) * a * a * c
        + Fraction(3 * n + 5, 2) * a * b * c
        + b * b * c
        + Fraction(n + 1, 2) * a * a * c * c
        + a * b * c * c
        + Fraction(n + 3, 2) * a * d
        + b * d
        + a * c * d
        - Fraction((n - 1) * (2 * n + 5), 6) * a * e
        - Fraction(n - 1, 2) * b * e
        - Fraction(n - 1, 2) * a * c * e
    )


def _thm7_closed(params: Mapping[str, Any]) -> Fraction:
    n = _count(params, "n", 1)
    a, b, c, d, e = (_rational(params, k) for k in "abcde")
    u = _thm7_u(n, a, b, c, d, e)
    lead = Fraction(-n) ** (n - 1)
    if n == 1:
        divisor = 2 * a + b + c * a
        if divisor == 0:
            raise BadParams("degenerate at n=1: 2a + b + ca = 0")
        return u / divisor
    prod = Fraction(1)
    for i in range(3, n + 1):
        prod *= i * a + b + c * a
    return lead * u * prod


# thm8: three residue branches on (i - j) mod n, size (n-1) x (n-1).


def _thm8_matrix(params: Mapping[str, Any]) -> RationalMatrix:
    n = _count(params, "n", 2)
    m = _rational(params, "m")
    a = _rational(params, "a")
    rows = []
    for i in range(1, n):
        row = []
        for j in range(1, n):
            if (i - j + 2) % n == 0:
                row.append((n - m - 1) + j * (1 + a - n))
            elif (i - j + 3) % n == 0:
                row.append((n - 1) * (m - 1) + j * (1 - a))
            else:
                s = (i - j + 1) % n
                row.append((n - m - 3 - 2 * s) + j)
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def _thm8_closed(params: Mapping[str, Any]) -> Fraction:
    n = _count(params, "n", 2)
    m = _rational(params, "m")
    a = _rational(params, "a")
    prod = Fraction(1)
    for i in range(2, n + 1):
        prod *= n * m - i * a
    return Fraction(-1) ** (n - 1) * prod / n


# cor9: two branches, determinant n^(n-2) * rising product of a.


def _cor9_matrix(params: Mapping[str, Any]) -> RationalMatrix:
    n = _count(params, "n", 2)
    a = _rational(params, "a")
    rows = []
    for i in range(1, n):
        row = []
        for j in range(1, n):
            if (i - j + 2) % n == 0:
                row.append((n - 1) * (n + a - j - 1))
            else:
                s = (i - j + 1) % n
                row.append(-2 * s - a + j - 1)
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def _cor9_closed(params: Mapping[str, Any]) -> Fraction:
    n = _count(params, "n", 2)
    a = _rational(params, "a")
    prod = Fraction(1)
    for i in range(0, n - 1):
        prod *= i + a
    return Fraction(n) ** (n - 2) * prod
