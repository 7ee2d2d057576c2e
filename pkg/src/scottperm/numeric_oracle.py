"""Floating-point reference implementations used to cross-check the exact path.

Everything here works over complex numbers: polynomial root finding by the
Durand-Kerner simultaneous iteration, a direct backtracking permanent, the
involution-sum evaluation of the same permanent, and bordered Cauchy /
Borchardt determinants.  None of these functions is used by the exact
evaluators; they exist so independent routes can be compared numerically.
"""
from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import numpy as np

from .errors import (
    BadParams,
    DidNotConverge,
    RepeatedXRoot,
    SingularEntry,
    ZeroDegree,
)
from .exact_core import Polynomial, poly_gcd

# Entries 1/(x - y) blow up past any useful precision below this separation.
SINGULAR_TOL = 1e-12
ROOT_RESIDUAL_TOL = 1e-10


def _horner(coeffs_desc: Sequence[complex], z: complex) -> complex:
    acc = 0j
    for c in coeffs_desc:
        acc = acc * z + c
    return acc


def find_roots(p: Polynomial, max_iter: int = 1000) -> list[complex]:
    """All complex roots of p, with multiplicity, by Durand-Kerner iteration.

    Each candidate root is polished by a couple of Newton steps and must pass
    a relative residual check; otherwise DidNotConverge is raised.  Roots are
    returned sorted by (real, imag) so repeated calls agree exactly.
    """
    if p.degree is None or p.degree < 1:
        raise ZeroDegree("root finding needs degree >= 1")
    n = p.degree
    monic_desc = [complex(float(c / p.leading)) for c in reversed(p.coeffs)]
    deriv_desc = [monic_desc[i] * (n - i) for i in range(n)]

    # Start on a circle just outside the Cauchy root bound, with an angle step
    # that is not a rational multiple of pi, so no two guesses coincide.
    radius = 1.0 + max(abs(c) for c in monic_desc[1:])
    step = complex(0.4, 0.9)
    step /= abs(step)
    roots = [radius * step**k for k in range(n)]

    for _ in range(max_iter):
        shift = 0.0
        for k in range(n):
            zk = roots[k]
            denom = 1 + 0j
            for j in range(n):
                if j != k:
                    denom *= zk - roots[j]
            if denom == 0:
                # Two iterates collided; nudge one and keep going.
                roots[k] = zk + 1e-8 * (1 + 1j)
                shift = float("inf")
                continue
            delta = _horner(monic_desc, zk) / denom
            roots[k] = zk - delta
            shift = max(shift, abs(delta))
        if shift < 1e-14 * (1.0 + max(abs(z) for z in roots)):
            break

    polished = []
    for z in roots:
        for _ in range(2):
            dp = _horner(deriv_desc, z)
            if dp == 0:
                break
            candidate = z - _horner(monic_desc, z) / dp
            if abs(_horner(monic_desc, candidate)) < abs(_horner(monic_desc, z)):
                z = candidate
        polished.append(z)

    for z in polished:
        residual = abs(_horner(monic_desc, z)) / (1.0 + abs(z) ** n)
        if residual > ROOT_RESIDUAL_TOL:
            raise DidNotConverge(f"residual {residual:.3e} at root estimate {z!r}")
    polished.sort(key=lambda z: (z.real, z.imag))
    return polished


def _reciprocal_difference_matrix(
    X: Sequence[complex], Y: Sequence[complex], power: int = 1
) -> list[list[complex]]:
    rows = []
    for x in X:
        row = []
        for y in Y:
            diff = x - y
            if abs(diff) < SINGULAR_TOL:
                raise SingularEntry(f"x={x!r} and y={y!r} nearly coincide")
            row.append(1.0 / diff**power)
        rows.append(row)
    return rows


def brute_permanent(X: Sequence[complex], Y: Sequence[complex]) -> complex:
    """Permanent of the n x m matrix (1/(x_i - y_j)) by direct backtracking.

    Sums the products over all injective maps from rows to columns.  With
    more rows than columns there are no injective maps, so the value is 0.
    """
    n, m = len(X), len(Y)
    if n > m:
        return 0j
    if n == 0:
        return 1 + 0j
    a = _reciprocal_difference_matrix(X, Y)
    last = a[n - 1]

    def walk(i: int, used: int, partial: complex) -> complex:
        row = a[i]
        if i == n - 1:
            total = 0j
            for j in range(m):
                if not used & (1 << j):
                    total += partial * row[j]
            return total
        total = 0j
        for j in range(m):
            bit = 1 << j
            if not used & bit:
                total += walk(i + 1, used | bit, partial * row[j])
        return total

    if n == 1:
        return sum(last) + 0j
    return walk(0, 0, 1 + 0j)


def ryser_permanent(matrix: Sequence[Sequence[complex]]) -> complex:
    """Permanent of a square matrix by Ryser's formula with Gray-code updates.

    Kept as a second combinatorial reference, independent of the
    backtracking enumeration.
    """
    n = len(matrix)
    if n == 0:
        return 1 + 0j
    if any(len(row) != n for row in matrix):
        raise BadParams("Ryser evaluation needs a square matrix")
    sums = [0j] * n
    total = 0j
    sign = 1
    prev_gray = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        changed = gray ^ prev_gray
        j = changed.bit_length() - 1
        direction = 1 if gray & changed else -1
        for i in range(n):
            sums[i] += direction * matrix[i][j]
        prev_gray = gray
        sign = -sign
        prod = 1 + 0j
        for s in sums:
            prod *= s
        total += sign * prod
    if n % 2:
        total = -total
    return total


@dataclass(frozen=True)
class Involution:
    """A self-inverse permutation of {0, ..., n-1}: disjoint 2-cycles plus fixed points."""

    pairs: tuple[tuple[int, int], ...]
    fixed: tuple[int, ...]


def enumerate_involutions(n: int) -> Iterator[Involution]:
    """All involutions of {0, ..., n-1}.

    Counts follow the telescoping recurrence I(n) = I(n-1) + (n-1) I(n-2):
    1, 1, 2, 4, 10, 26, 76, 232, ...
    """
    if n < 0:
        raise BadParams("n must be nonnegative")

    def build(remaining: tuple[int, ...]) -> Iterator[tuple[tuple[tuple[int, int], ...], tuple[int, ...]]]:
        if not remaining:
            yield (), ()
            return
        head, rest = remaining[0], remaining[1:]
        for pairs, fixed in build(rest):
            yield pairs, (head,) + fixed
        for idx in range(len(rest)):
            partner = rest[idx]
            leftover = rest[:idx] + rest[idx + 1 :]
            for pairs, fixed in build(leftover):
                yield ((head, partner),) + pairs, fixed

    for pairs, fixed in build(tuple(range(n))):
        yield Involution(pairs, fixed)


def involution_weighted_sum(
    X: Sequence[complex], fixed_weight: Callable[[int], complex]
) -> complex:
    """Sum over involutions with pair weight 1/(x_i - x_j)^2.

    Each involution contributes the product of 1/(x_i - x_j)^2 over its
    2-cycles times the product of fixed_weight(k) over its fixed points.
    The x values must be pairwise distinct.
    """
    n = len(X)
    inv_sq = [[0j] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            diff = X[i] - X[j]
            if abs(diff) < SINGULAR_TOL:
                raise RepeatedXRoot(f"x_{i} and x_{j} nearly coincide")
            inv_sq[i][j] = inv_sq[j][i] = 1.0 / diff**2
    weights = [fixed_weight(k) for k in range(n)]
    total = 0j
    for sigma in enumerate_involutions(n):
        term = 1 + 0j
        for i, j in sigma.pairs:
            term *= inv_sq[i][j]
        for k in sigma.fixed:
            term *= weights[k]
        total += term
    return total


def involution_sum(X: Sequence[complex], Y: Sequence[complex]) -> complex:
    """Permanent of (1/(x_i - y_j)) as a sum over involutions of the rows.

    The fixed-point weight at x_k is
    sum over other x of 1/(x - x_k) + sum over y of 1/(x_k - y).
    Valid for any number of y values, including fewer than x values.
    """
    def charge(k: int) -> complex:
        s = X[k]
        acc = 0j
        for i, x in enumerate(X):
            if i != k:
                acc += 1.0 / (x - s)
        for y in Y:
            diff = s - y
            if abs(diff) < SINGULAR_TOL:
                raise SingularEntry(f"x={s!r} and y={y!r} nearly coincide")
            acc += 1.0 / diff
        return acc

    return involution_weighted_sum(X, charge)


def delta(values: Sequence[complex]) -> complex:
    """Product of (values[i] - values[j]) over i < j."""
    out = 1 + 0j
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            out *= values[i] - values[j]
    return out


def difference_product(X: Sequence[complex], Y: Sequence[complex]) -> complex:
    """Product of (x - y) over all pairs; the resultant of the monic minimal polynomials."""
    out = 1 + 0j
    for x in X:
        for y in Y:
            out *= x - y
    return out


def _bordered(top: list[list[complex]], Y: Sequence[complex], n: int, m: int) -> np.ndarray:
    mat = np.zeros((m, m), dtype=complex)
    for i in range(n):
        mat[i, :] = top[i]
    # Border rows run y^(m-n-1) down to y^0: with descending powers the sign law
    # det C = (-1)^(n(n-1)/2) Delta(X) Delta(Y) / R(X,Y) holds for every m >= n,
    # whereas ascending powers flip it by (-1)^((m-n)(m-n-1)/2).  The ratio
    # det B / det C is independent of the shared border order.
    for k in range(m - n):
        mat[n + k, :] = [y ** (m - n - 1 - k) for y in Y]
    return mat


def cauchy_matrix_det(X: Sequence[complex], Y: Sequence[complex]) -> complex:
    """Determinant of the Cauchy matrix 1/(x_i - y_j), bordered when rectangular.

    With n = len(X) <= m = len(Y), the matrix is m x m: the first n rows are
    the Cauchy entries and the remaining rows are the Vandermonde rows
    y_j^0, ..., y_j^(m-n-1).
    """
    n, m = len(X), len(Y)
    if n > m:
        raise BadParams("need len(X) <= len(Y)")
    return complex(np.linalg.det(_bordered(_reciprocal_difference_matrix(X, Y), Y, n, m)))


def borchardt_matrix_det(X: Sequence[complex], Y: Sequence[complex]) -> complex:
    """Determinant of the squared-entry matrix 1/(x_i - y_j)^2 with the same border."""
    n, m = len(X), len(Y)
    if n > m:
        raise BadParams("need len(X) <= len(Y)")
    return complex(
        np.linalg.det(_bordered(_reciprocal_difference_matrix(X, Y, power=2), Y, n, m))
    )


def random_coprime_pair(
    rng: random.Random,
    deg_p: int,
    deg_q: int,
    distinct_x: bool = True,
) -> tuple[Polynomial, Polynomial]:
    """A random pair of monic integer polynomials with no common factor.

    Coefficients are drawn uniformly from [-5, 5].  When distinct_x is set,
    candidates whose roots for the first polynomial come closer than 1e-6
    are rejected, so downstream 1/(x_i - x_j) terms stay well conditioned.
    """
    if deg_p < 1 or deg_q < 1:
        raise BadParams("both degrees must be at least 1")
    while True:
        p = Polynomial([rng.randint(-5, 5) for _ in range(deg_p)] + [1])
        q = Polynomial([rng.randint(-5, 5) for _ in range(deg_q)] + [1])
        if poly_gcd(p, q).degree != 0:
            continue
        if distinct_x:
            try:
                roots = find_roots(p)
            except DidNotConverge:
                continue
            if any(
                abs(roots[i] - roots[j]) < 1e-6
                for i in range(deg_p)
                for j in range(i + 1, deg_p)
            ):
                continue
        return p, q


def unit_roots(n: int, sign: int = 1) -> list[complex]:
    """Roots of x^n - 1 (sign=+1) or x^n + 1 (sign=-1), evenly on the unit circle."""
    if n < 1:
        raise BadParams("n must be positive")
    if sign == 1:
        return [cmath.exp(2j * cmath.pi * k / n) for k in range(n)]
    if sign == -1:
        return [cmath.exp(1j * cmath.pi * (2 * k + 1) / n) for k in range(n)]
    raise BadParams("sign must be +1 or -1")
