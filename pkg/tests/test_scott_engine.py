"""Determinant engine: H/E builders, the exact permanent, and cross-route verify."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scottperm import (
    EvalResult,
    Polynomial,
    SharedRoot,
    VerifyReport,
    ZeroDegree,
    build_E,
    build_H,
    exact_det,
    poly_eval,
    random_coprime_pair,
    relative_gap,
    resultant,
    scott_permanent,
    verify,
)

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=5)


def power_poly(n: int, constant: int) -> Polynomial:
    return Polynomial.from_pairs([(0, constant), (n, 1)])


class TestBuildH:
    def test_golden_four_by_six(self):
        H = build_H(power_poly(4, -1), 3)
        assert H.to_lists() == [
            [1, 0, 0, 0, 1, 0],
            [0, 1, 0, 0, 0, 1],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
        ]

    @given(rationals)
    def test_single_variable_row_is_geometric(self, c):
        H = build_H(Polynomial([-c, 1]), 2)
        assert H.to_lists() == [[1, c]]

    def test_two_by_two_alternating(self):
        H = build_H(Polynomial([-1, 0, 1]), 1)
        assert H.to_lists() == [[1, 0], [0, 1]]

    def test_normalizes_non_monic_input(self):
        assert build_H(Polynomial([-2, 0, 2]), 2).to_lists() == build_H(
            Polynomial([-1, 0, 1]), 2
        ).to_lists()


class TestBuildE:
    def test_golden_six_by_four(self):
        Q = Polynomial([5, -3, 2, 1])  # y^3 + 2y^2 - 3y + 5
        e0, e1, e2, e3 = 1, -2, -3, -5
        E = build_E(Q, 4)
        assert E.to_lists() == [
            [e2, e3, 0, 0],
            [-2 * e1, 0, 2 * e3, 0],
            [3 * e0, -e1, -e2, 3 * e3],
            [0, 2 * e0, 0, -2 * e2],
            [0, 0, e0, e1],
            [0, 0, 0, 0],
        ]

    @given(st.lists(rationals, min_size=3, max_size=3))
    def test_single_column_weights(self, lower):
        Q = Polynomial(lower + [1])
        m = 3
        elementary = [(-1) ** s * Q.coeff(m - s) for s in range(m + 1)]
        E = build_E(Q, 1)
        expected = [[j * (-1) ** (m - j) * elementary[m - j]] for j in range(1, m + 1)]
        assert E.to_lists() == expected

    @given(rationals)
    def test_smallest_case_is_one(self, b):
        assert build_E(Polynomial([-b, 1]), 1).to_lists() == [[1]]


SCOTT_VALUES = {1: Fraction(1, 2), 2: 0, 3: Fraction(-3, 8), 4: 0, 5: Fraction(45, 32)}


def scott_closed_form(n: int) -> Fraction:
    """0 for even n; for odd n, a signed odd-double-factorial square over 2^n."""
    if n % 2 == 0:
        return Fraction(0)
    if n == 1:
        return Fraction(1, 2)
    odd_product = 1
    for k in range(1, n - 1, 2):
        odd_product *= k
    return Fraction((-1) ** ((n - 1) // 2) * n * odd_product**2, 2**n)


class TestScottPermanent:
    def test_even_case(self):
        assert scott_permanent(power_poly(2, -1), power_poly(2, 1)).value == 0

    def test_cube_case(self):
        assert scott_permanent(power_poly(3, -1), power_poly(3, 1)).value == Fraction(-3, 8)

    def test_coprime_quartic_case(self):
        result = scott_permanent(power_poly(3, -1), power_poly(4, 1))
        assert result.value == 12
        assert result.method == "theorem1"
        assert result.n == 3 and result.m == 4

    def test_alternating_family_small(self):
        for n, expected in SCOTT_VALUES.items():
            got = scott_permanent(power_poly(n, -1), power_poly(n, 1)).value
            assert got == expected == scott_closed_form(n)

    def test_shared_root_rejected(self):
        with pytest.raises(SharedRoot):
            scott_permanent(power_poly(2, -1), power_poly(2, -1))

    def test_constant_row_polynomial_rejected(self):
        with pytest.raises(ZeroDegree):
            scott_permanent(Polynomial([5]), power_poly(2, 1))

    def test_constant_column_polynomial_vanishes(self):
        result = scott_permanent(power_poly(2, -1), Polynomial([5]))
        assert result.value == 0
        assert any("vanishes" in note for note in result.notes)

    def test_vanishing_when_more_rows_than_columns(self):
        rng = random.Random(40)
        for _ in range(20):
            deg_q = rng.randint(1, 4)
            deg_p = rng.randint(deg_q + 1, 6)
            P, Q = random_coprime_pair(rng, deg_p, deg_q)
            result = scott_permanent(P, Q)
            assert result.value == 0
            assert any("vanishes" in note for note in result.notes)
            product = build_H(P, Q.degree) @ build_E(Q, P.degree)
            assert exact_det(product) == 0

    def test_numerator_identity(self):
        rng = random.Random(41)
        for _ in range(30):
            deg_p = rng.randint(1, 5)
            deg_q = rng.randint(deg_p, 6)
            P, Q = random_coprime_pair(rng, deg_p, deg_q)
            result = scott_permanent(P, Q)
            numerator = exact_det(build_H(P, Q.degree) @ build_E(Q, P.degree))
            assert result.value * resultant(P, Q) == numerator

    @given(
        st.fractions(min_value=-6, max_value=6, max_denominator=4).filter(bool),
        st.integers(min_value=0, max_value=2**31 - 1),
    )
    def test_scaling_invariance(self, scale, seed):
        rng = random.Random(seed)
        P, Q = random_coprime_pair(rng, rng.randint(1, 4), rng.randint(1, 5))
        scaled = Polynomial([scale * Q.coeff(k) for k in range(Q.degree + 1)])
        assert scott_permanent(P, scaled) == scott_permanent(P, Q)

    def test_single_row_is_logarithmic_derivative(self):
        rng = random.Random(42)
        for _ in range(25):
            P, Q = random_coprime_pair(rng, 1, rng.randint(1, 6))
            a = -P.coeff(0)
            derivative = Polynomial([k * Q.coeff(k) for k in range(1, Q.degree + 1)])
            expected = poly_eval(derivative, a) / poly_eval(Q, a)
            assert scott_permanent(P, Q).value == expected


class TestRelativeGap:
    def test_floor_at_one(self):
        assert relative_gap(0, Fraction(1, 10**7)) == pytest.approx(1e-7)

    def test_scales_by_magnitude(self):
        assert relative_gap(Fraction(10**6), 10**6 + 1) == pytest.approx(1e-6, rel=1e-3)

    def test_mixed_exact_and_complex(self):
        assert relative_gap(Fraction(-3, 8), complex(-0.375, 0)) == 0


class TestVerify:
    def test_full_agreement_on_cube_case(self):
        report = verify(power_poly(3, -1), power_poly(3, 1))
        assert isinstance(report, VerifyReport)
        assert report.n == 3 and report.m == 3
        assert report.tolerance == 1e-6
        methods = [route.method for route in report.routes]
        assert methods == ["theorem1", "oracle", "involution", "fes", "closed_form"]
        assert all(route.error is None for route in report.routes)
        assert all(route.elapsed_ms >= 0 for route in report.routes)
        assert len(report.agreements) == 10
        assert report.all_agree

    def test_exact_routes_agree_exactly(self):
        report = verify(power_poly(3, -1), power_poly(4, 1))
        values = {route.method: route.value for route in report.routes}
        assert values["theorem1"] == 12
        assert values["fes"] == 12
        assert values["closed_form"] == 12

    def test_shared_root_raises(self):
        with pytest.raises(SharedRoot):
            verify(power_poly(2, -1), power_poly(2, -1))

    def test_oracle_skipped_beyond_cost_limit(self):
        report = verify(power_poly(7, -1), power_poly(7, 2), oracle_cost_limit=1000)
        oracle = next(route for route in report.routes if route.method == "oracle")
        assert oracle.value is None
        assert any("skipped" in note for note in oracle.notes)
        assert report.all_agree


class TestEvalResult:
    def test_fields_echo_the_computation(self):
        result = scott_permanent(power_poly(2, -1), power_poly(3, 2))
        assert isinstance(result, EvalResult)
        assert result.method == "theorem1"
        assert (result.n, result.m) == (2, 3)
        assert isinstance(result.notes, tuple)
