"""Closed-form values, residues, and the exact convolution identities."""

import math
from fractions import Fraction
from math import factorial

import pytest

from eulersums.closed_forms import (
    Log2Linear,
    c_coefficients,
    check_bridge,
    check_corollary1,
    eta_nonpositive,
    g_exact_neg_even,
    u_value,
    v_residue,
    v_value_even,
    w_pole,
    w_value,
    zeta_nonpositive,
)


class TestZetaEta:
    def test_zeta_examples(self):
        assert zeta_nonpositive(0) == Fraction(-1, 2)
        assert zeta_nonpositive(2) == 0
        assert zeta_nonpositive(1) == Fraction(-1, 12)

    def test_eta_examples(self):
        assert eta_nonpositive(0) == Fraction(1, 2)
        assert eta_nonpositive(1) == Fraction(1, 4)
        assert eta_nonpositive(4) == 0

    def test_relation_to_zeta(self):
        # eta(-k) = (1 - 2^(1+k)) zeta(-k)
        for k in range(0, 201):
            assert eta_nonpositive(k) == (1 - Fraction(2) ** (1 + k)) * zeta_nonpositive(k)


class TestUValues:
    def test_examples(self):
        assert u_value(0) == Log2Linear.of(0, Fraction(1, 2))
        assert u_value(1) == Log2Linear.of(Fraction(1, 4), Fraction(-1, 4))
        assert u_value(2) == Log2Linear.of(Fraction(-1, 8), 0)
        assert u_value(3) == Log2Linear.of(Fraction(-3, 16), Fraction(1, 8))

    def test_even_values_are_rational_with_closed_form(self, bernoulli_oracle):
        # u(-2n) = (2^2n - 1)(1 - 2n) B_2n / (4n), and the log-2 part vanishes
        for n in range(1, 101):
            got = u_value(2 * n)
            assert got.log2_coeff == 0
            expected = (
                (2 ** (2 * n) - 1) * (1 - 2 * n) * bernoulli_oracle[2 * n]
                / (4 * n)
            )
            assert got.rational_part == expected

    def test_log2linear_to_float(self):
        assert math.isclose(u_value(0).to_float(), 0.5 * math.log(2.0))


class TestVValues:
    def test_examples(self):
        assert v_value_even(1) == Fraction(5, 24)
        assert v_value_even(2) == Fraction(-59, 240)

    def test_v_minus_six_via_convolution_oracle(self, bernoulli_oracle):
        # v(-2n) = (1/(4n) + 2^(2n-1) - 1/2) B_2n + zeta(1-2n), combining the
        # two exact identities; independent of the package formula for v.
        n = 3
        expected = (
            (Fraction(1, 4 * n) + 2 ** (2 * n - 1) - Fraction(1, 2))
            * bernoulli_oracle[2 * n]
            - bernoulli_oracle[2 * n] / (2 * n)
        )
        assert expected == Fraction(377, 504)
        assert v_value_even(3) == expected

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            v_value_even(0)


class TestResidues:
    def test_v_residues(self):
        assert v_residue(0).residue == Fraction(1, 2)
        assert v_residue(0).order == 1
        assert v_residue(-1).residue == Fraction(-1, 4)
        assert v_residue(-3).residue == Fraction(1, 8)

    @pytest.mark.parametrize("loc", [-2, -4, 5, 1])
    def test_non_pole_locations_rejected(self, loc):
        with pytest.raises(ValueError):
            v_residue(loc)

    def test_w_pole(self):
        pole = w_pole()
        assert pole.location == 1
        assert pole.order == 1
        assert pole.residue == Log2Linear.of(0, 1)
        assert pole.residue.to_float() != 0.0


class TestWValues:
    def test_examples(self):
        assert w_value(0) == Log2Linear.of(Fraction(-1, 2), Fraction(1, 2))
        assert w_value(2) == Log2Linear.of(Fraction(1, 24), 0)
        assert w_value(1) == Log2Linear.of(Fraction(1, 8), Fraction(-1, 12))

    def test_even_values_have_no_log2(self):
        for n in range(1, 101):
            assert w_value(2 * n).log2_coeff == 0


def _convolution_oracle(count, bernoulli_oracle, euler_poly_oracle):
    """Cauchy product computed from the oracle tables only."""
    b_mod = [Fraction(0)] + [
        (Fraction(1, 2) if k == 1 else bernoulli_oracle[k]) / (factorial(k) * k)
        for k in range(1, count + 1)
    ]
    e_one = [
        sum(euler_poly_oracle[j], Fraction(0)) / (2 * factorial(j))
        for j in range(count + 1)
    ]
    out = []
    for n in range(1, count + 1):
        out.append(sum(b_mod[k] * e_one[n - k] for k in range(1, n + 1)))
    return out


class TestConvolution:
    def test_first_coefficients(self):
        cs = c_coefficients(3)
        assert cs == [Fraction(1, 4), Fraction(7, 48), Fraction(1, 96)]

    def test_against_oracle_product(self, bernoulli_oracle, euler_poly_oracle):
        assert c_coefficients(24) == _convolution_oracle(
            24, bernoulli_oracle, euler_poly_oracle
        )

    @pytest.mark.parametrize("n", [1, 2, 50])
    def test_corollary_identity(self, n):
        check = check_corollary1(n)
        assert check.passed, f"{check.lhs} != {check.rhs}"
        if n == 1:
            assert check.lhs == Fraction(7, 24)

    @pytest.mark.parametrize("n", [1, 2, 100])
    def test_bridge_identity(self, n):
        check = check_bridge(n)
        assert check.passed, f"{check.lhs} != {check.rhs}"

    def test_bridge_witness_n1(self):
        check = check_bridge(1)
        assert check.lhs == Fraction(7, 24)
        assert check.rhs == Fraction(5, 24) - Fraction(-1, 12)

    def test_g_exact(self):
        assert g_exact_neg_even(1) == Fraction(7, 24)
        assert g_exact_neg_even(2) == Fraction(-61, 240)
        # both routes agree across a range (g_exact verifies internally)
        for n in range(1, 31):
            g_exact_neg_even(n)
