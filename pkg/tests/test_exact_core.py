"""Exact rational substrate: polynomial ring, series, determinants, resultants."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scottperm import (
    BothZero,
    NonSquare,
    Polynomial,
    RationalMatrix,
    ZeroConstantTerm,
    ZeroPolynomial,
    exact_det,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
    resultant,
    series_inverse,
    sylvester_matrix,
)

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=6)


def polys(max_degree: int = 6) -> st.SearchStrategy[Polynomial]:
    return st.lists(rationals, min_size=0, max_size=max_degree + 1).map(Polynomial)


def nonzero_polys(max_degree: int = 6) -> st.SearchStrategy[Polynomial]:
    return polys(max_degree).filter(lambda p: not p.is_zero)


def positive_degree_polys(max_degree: int = 5) -> st.SearchStrategy[Polynomial]:
    return polys(max_degree).filter(lambda p: p.degree is not None and p.degree >= 1)


X_MINUS_1 = Polynomial([-1, 1])
X_PLUS_1 = Polynomial([1, 1])
X2_MINUS_1 = Polynomial([-1, 0, 1])
X2_PLUS_1 = Polynomial([1, 0, 1])


class TestPolynomial:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial([1, 2, 0, 0]) == Polynomial([1, 2])
        assert Polynomial([1, 2, 0, 0]).degree == 1

    def test_zero_polynomial_has_no_degree(self):
        zero = Polynomial([0, 0, 0])
        assert zero.is_zero
        assert zero.degree is None
        assert zero == Polynomial([])

    def test_coeff_out_of_range_is_zero(self):
        p = Polynomial([5, 7])
        assert p.coeff(0) == 5
        assert p.coeff(1) == 7
        assert p.coeff(2) == 0
        assert p.coeff(99) == 0

    def test_from_pairs_accumulates_repeats(self):
        p = Polynomial.from_pairs([(0, 1), (2, 3), (2, -1)])
        assert p == Polynomial([1, 0, 2])

    def test_from_pairs_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            Polynomial.from_pairs([(-1, 2)])

    def test_monic(self):
        assert Polynomial([2, 0, 4]).monic() == Polynomial([Fraction(1, 2), 0, 1])

    @given(polys(), polys())
    def test_addition_commutes(self, p, q):
        assert p + q == q + p

    @given(polys(), polys())
    def test_multiplication_commutes(self, p, q):
        assert p * q == q * p

    @given(polys(3), polys(3), polys(3))
    def test_distributivity(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(nonzero_polys(4), nonzero_polys(4))
    def test_degree_adds_under_multiplication(self, p, q):
        assert (p * q).degree == p.degree + q.degree


class TestPolyEval:
    def test_root_of_quadratic(self):
        assert poly_eval(X2_MINUS_1, 1) == 0

    def test_direct_arithmetic(self):
        assert poly_eval(X2_MINUS_1, 3) == 8

    def test_zero_polynomial(self):
        assert poly_eval(Polynomial([]), 5) == 0

    @given(polys(4), polys(4), rationals)
    def test_evaluation_is_a_ring_homomorphism(self, p, q, x):
        assert poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x)
        assert poly_eval(poly_mul(p, q), x) == poly_eval(p, x) * poly_eval(q, x)


class TestPolyMul:
    def test_difference_of_squares(self):
        assert poly_mul(X_MINUS_1, X_PLUS_1) == X2_MINUS_1

    def test_zero_absorbs(self):
        assert poly_mul(Polynomial([1, 2, 3]), Polynomial([])) == Polynomial([])

    def test_binomial_square(self):
        assert poly_mul(X_PLUS_1, X_PLUS_1) == Polynomial([1, 2, 1])


class TestPolyDivmod:
    @given(polys(6), positive_degree_polys(4))
    def test_division_invariant(self, p, q):
        quotient, remainder = poly_divmod(p, q)
        assert q * quotient + remainder == p
        assert remainder.degree is None or remainder.degree < q.degree


class TestSeriesInverse:
    def test_geometric_series(self):
        assert series_inverse(Polynomial([1, -1]), 3) == [1, 1, 1, 1]

    def test_cubed_geometric_series(self):
        got = series_inverse(Polynomial([1, 0, 0, -1]), 7)
        assert got == [1, 0, 0, 1, 0, 0, 1, 0]

    def test_alternating_series(self):
        assert series_inverse(Polynomial([1, 1]), 3) == [1, -1, 1, -1]

    def test_zero_constant_term_rejected(self):
        with pytest.raises(ZeroConstantTerm):
            series_inverse(Polynomial([0, 1]), 3)

    @given(
        polys(6).filter(lambda p: p.coeff(0) != 0),
        st.integers(min_value=0, max_value=16),
    )
    def test_product_with_inverse_is_one_mod_t_k(self, p, order):
        inverse = Polynomial(series_inverse(p, order))
        product = poly_mul(p, inverse)
        assert product.coeff(0) == 1
        for k in range(1, order + 1):
            assert product.coeff(k) == 0


class TestResultant:
    def test_plus_minus_one_vs_squares_plus_one(self):
        assert resultant(X2_MINUS_1, X2_PLUS_1) == 4

    def test_binomial_cubic(self):
        assert resultant(X2_MINUS_1, Polynomial([-5, 0, 0, 3])) == 16

    def test_shared_roots_vanish(self):
        assert resultant(X2_MINUS_1, X2_MINUS_1) == 0

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ZeroPolynomial):
            resultant(Polynomial([]), X_PLUS_1)
        with pytest.raises(ZeroPolynomial):
            resultant(X_PLUS_1, Polynomial([]))

    @given(rationals, nonzero_polys(4))
    def test_linear_first_argument_evaluates(self, a, q):
        p = Polynomial([-a, 1])
        assert resultant(p, q) == poly_eval(q, a)

    @given(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=4),
        st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=4),
        st.integers(min_value=-4, max_value=4).filter(lambda c: c != 0),
    )
    def test_product_formula_over_known_roots(self, xs, ys, lead):
        p = Polynomial([1])
        for x in xs:
            p = p * Polynomial([-x, 1])
        q = Polynomial([lead])
        for y in ys:
            q = q * Polynomial([-y, 1])
        expected = Fraction(lead) ** len(xs)
        for x in xs:
            for y in ys:
                expected *= x - y
        assert resultant(p, q) == expected

    @given(positive_degree_polys(4), positive_degree_polys(4))
    def test_zero_resultant_iff_common_factor(self, p, q):
        vanishes = resultant(p, q) == 0
        shares = poly_gcd(p, q).degree >= 1
        assert vanishes == shares

    @given(positive_degree_polys(3), positive_degree_polys(3))
    def test_sylvester_matrix_determinant_is_the_resultant(self, p, q):
        matrix = sylvester_matrix(p, q)
        size = p.degree + q.degree
        assert matrix.rows == size and matrix.cols == size
        assert exact_det(matrix) == resultant(p, q)


def _cofactor_det(rows: list[list[Fraction]]) -> Fraction:
    if len(rows) == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, head in enumerate(rows[0]):
        if head == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * head * _cofactor_det(minor)
    return total


class TestExactDet:
    def test_identity(self):
        assert exact_det(RationalMatrix.identity(3)) == 1

    def test_two_by_two(self):
        assert exact_det(RationalMatrix.from_rows([[1, 2], [3, 4]])) == -2

    def test_repeated_rows_vanish(self):
        rows = [[1, 2, 3, 4], [5, 6, 7, 8], [1, 2, 3, 4], [9, 1, 2, 3]]
        assert exact_det(RationalMatrix.from_rows(rows)) == 0

    def test_non_square_rejected(self):
        with pytest.raises(NonSquare):
            exact_det(RationalMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))

    @given(
        st.integers(min_value=1, max_value=4).flatmap(
            lambda n: st.lists(
                st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n
            )
        )
    )
    def test_matches_cofactor_expansion(self, rows):
        rows = [[Fraction(v) for v in row] for row in rows]
        assert exact_det(RationalMatrix.from_rows(rows)) == _cofactor_det(rows)

    @given(
        st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3),
        st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3),
    )
    def test_multiplicative(self, rows_a, rows_b):
        a = RationalMatrix.from_rows(rows_a)
        b = RationalMatrix.from_rows(rows_b)
        assert exact_det(a @ b) == exact_det(a) * exact_det(b)


class TestPolyGcd:
    def test_common_factor(self):
        assert poly_gcd(X2_MINUS_1, X_MINUS_1) == X_MINUS_1

    def test_coprime(self):
        assert poly_gcd(X2_MINUS_1, X2_PLUS_1) == Polynomial([1])

    def test_zero_argument_yields_monic_other(self):
        assert poly_gcd(Polynomial([2, 0, 4]), Polynomial([])) == Polynomial(
            [Fraction(1, 2), 0, 1]
        )

    def test_both_zero_rejected(self):
        with pytest.raises(BothZero):
            poly_gcd(Polynomial([]), Polynomial([]))

    @given(nonzero_polys(4), nonzero_polys(4))
    def test_gcd_divides_both_and_is_monic(self, p, q):
        g = poly_gcd(p, q)
        assert g.leading == 1
        _, remainder_p = poly_divmod(p, g)
        _, remainder_q = poly_divmod(q, g)
        assert remainder_p.is_zero
        assert remainder_q.is_zero
