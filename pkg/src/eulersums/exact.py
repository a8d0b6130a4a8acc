"""Exact Bernoulli numbers, Euler polynomials and Genocchi numbers.

Everything in this module is integer/rational arithmetic on
``fractions.Fraction``; nothing ever rounds.

Sign convention: B_1 = -1/2 (the "first" convention).  Both conventions
circulate; this one is forced by the identities used downstream, where the
modified sequence B(n) with B(1) = -B_1 = +1/2 supplies the Taylor
coefficients of z*e^z/(e^z - 1).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

__all__ = [
    "Rational",
    "RationalPolynomial",
    "bernoulli",
    "bernoulli_modified",
    "euler_polynomial",
    "euler_eval",
    "euler_zero",
    "genocchi",
]

# Public alias: the exact scalar type used throughout the package.
Rational = Fraction


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial over Fraction; coefficients[k] multiplies x**k."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("coefficient vector must be non-empty")
        if len(self.coefficients) > 1 and self.coefficients[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact Horner evaluation."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __call__(self, x: Fraction | int) -> Fraction:
        return self.evaluate(x)


_bernoulli_lock = threading.Lock()
_bernoulli_table: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2).

    Generated by the defining recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0,
    memoized.  O(n^2) rational operations to fill the table; adequate for
    the few hundred indices used at desk scale.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    with _bernoulli_lock:
        while len(_bernoulli_table) <= n:
            m = len(_bernoulli_table)
            acc = Fraction(0)
            for k in range(m):
                acc += comb(m + 1, k) * _bernoulli_table[k]
            _bernoulli_table.append(-acc / (m + 1))
        return _bernoulli_table[n]


def bernoulli_modified(n: int) -> Fraction:
    """B(n): equal to B_n except B(1) = +1/2.

    These are the Taylor coefficients of z*e^z/(e^z - 1), i.e. the series
    whose term-by-term integral gives log((e^z - 1)/z).
    """
    if n == 1:
        return Fraction(1, 2)
    return bernoulli(n)


def euler_zero(n: int) -> Fraction:
    """E_n(0) = 2 (1 - 2^(n+1)) B_(n+1) / (n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return 2 * (1 - 2 ** (n + 1)) * bernoulli(n + 1) / (n + 1)


_euler_lock = threading.Lock()
_euler_table: list[tuple[Fraction, ...]] = [(Fraction(1),)]


def euler_polynomial(n: int) -> RationalPolynomial:
    """Euler polynomial E_n(x), exactly.

    Built by the Appell property E_n'(x) = n E_{n-1}(x) with the constant
    term seeded from euler_zero, so the polynomial table and the closed-form
    constants come from distinct recurrences and can cross-check each other.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    with _euler_lock:
        while len(_euler_table) <= n:
            m = len(_euler_table)
            prev = _euler_table[m - 1]
            coeffs = [euler_zero(m)]
            coeffs.extend(Fraction(m, k + 1) * prev[k] for k in range(m))
            _euler_table.append(tuple(coeffs))
        return RationalPolynomial(_euler_table[n])


def euler_eval(n: int, x: Fraction | int) -> Fraction:
    """Exact value E_n(x)."""
    return euler_polynomial(n).evaluate(x)


def genocchi(n: int) -> int:
    """Genocchi number G_n = 2 (1 - 2^n) B_n = n E_{n-1}(0); G_0 = 0.

    Computes both formulas and insists they agree and are integral; a
    mismatch would signal a corrupted Bernoulli/Euler table, so it raises
    rather than returning anything.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    via_bernoulli = 2 * (1 - 2**n) * bernoulli(n)
    via_euler = n * euler_zero(n - 1)
    if via_bernoulli != via_euler:
        raise ArithmeticError(
            f"Genocchi formulas disagree at n={n}: "
            f"{via_bernoulli} != {via_euler}"
        )
    if via_bernoulli.denominator != 1:
        raise ArithmeticError(f"Genocchi number at n={n} is not integral")
    return int(via_bernoulli)
