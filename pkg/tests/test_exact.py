"""Exact-number layer: Bernoulli, Euler polynomials, Genocchi."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulersums.exact import (
    RationalPolynomial,
    bernoulli,
    bernoulli_modified,
    euler_eval,
    euler_polynomial,
    euler_zero,
    genocchi,
)


class TestBernoulli:
    def test_base_cases(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)

    def test_known_value_b12(self):
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_matches_recurrence_oracle(self, bernoulli_oracle):
        for n in range(0, 60):
            assert bernoulli(n) == bernoulli_oracle[n]

    def test_odd_vanish(self):
        assert all(bernoulli(n) == 0 for n in range(3, 200, 2))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            bernoulli(-1)

    def test_modified_flips_b1_only(self):
        assert bernoulli_modified(1) == Fraction(1, 2)
        assert bernoulli_modified(0) == 1
        assert bernoulli_modified(2) == bernoulli(2)
        assert all(bernoulli_modified(n) == bernoulli(n) for n in range(2, 30))


class TestEulerPolynomials:
    def test_low_orders(self):
        assert euler_polynomial(0).coefficients == (Fraction(1),)
        assert euler_polynomial(1).coefficients == (Fraction(-1, 2), Fraction(1))
        assert euler_polynomial(2).coefficients == (
            Fraction(0), Fraction(-1), Fraction(1),
        )
        assert euler_polynomial(3).coefficients == (
            Fraction(1, 4), Fraction(0), Fraction(-3, 2), Fraction(1),
        )

    def test_matches_generating_function_oracle(self, euler_poly_oracle):
        for n in range(0, 40):
            assert list(euler_polynomial(n).coefficients) == euler_poly_oracle[n]

    def test_euler_eval_examples(self):
        assert euler_eval(1, Fraction(1, 2)) == 0
        assert euler_eval(3, 0) == Fraction(1, 4)
        assert euler_eval(2, 1) == 0

    def test_euler_zero_examples(self):
        assert euler_zero(1) == Fraction(-1, 2)
        assert euler_zero(2) == 0
        assert euler_zero(5) == Fraction(-1, 2)

    def test_even_index_zeros(self):
        assert all(euler_zero(2 * n) == 0 for n in range(1, 201))

    def test_constant_term_agrees_with_closed_form(self):
        for n in range(0, 101):
            assert euler_polynomial(n).coefficients[0] == euler_zero(n)

    def test_reflection_at_one(self):
        for n in range(1, 101):
            assert euler_eval(n, 1) == -euler_zero(n)

    @pytest.mark.parametrize("t", [Fraction(0), Fraction(1, 2), Fraction(1),
                                   Fraction(-1), Fraction(3, 7)])
    def test_addition_identity_sample_points(self, t):
        for n in range(0, 51):
            assert euler_eval(n, t + 1) + euler_eval(n, t) == 2 * t**n

    @given(
        n=st.integers(min_value=0, max_value=50),
        t=st.fractions(min_value=-4, max_value=4, max_denominator=40),
    )
    @settings(max_examples=60, deadline=None)
    def test_addition_identity_property(self, n, t):
        assert euler_eval(n, t + 1) + euler_eval(n, t) == 2 * t**n

    def test_polynomial_type_invariants(self):
        with pytest.raises(ValueError):
            RationalPolynomial(())
        with pytest.raises(ValueError):
            RationalPolynomial((Fraction(1), Fraction(0)))


class TestGenocchi:
    def test_examples(self):
        assert genocchi(0) == 0
        assert genocchi(1) == 1
        assert genocchi(6) == -3
        assert genocchi(8) == 17

    def test_table_against_bernoulli_oracle(self, bernoulli_oracle):
        for n in range(1, 40):
            expected = 2 * (1 - 2**n) * bernoulli_oracle[n]
            assert expected.denominator == 1
            assert genocchi(n) == int(expected)

    def test_integrality_and_odd_vanishing(self):
        for n in range(0, 201):
            g = genocchi(n)
            assert isinstance(g, int)
            if n % 2 == 1 and n >= 3:
                assert g == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            genocchi(-2)
