"""Exact values, residues and identities for the three series u, v, w.

u(s) = sum (-1)^(n-1) H_n / n^s        (alternating outer, plain H_n)
v(s) = sum (-1)^(n-1) H_n^- / n^s      (alternating outer and inner)
w(s) = sum H_n^- / n^s                 (plain outer, alternating inner)

At non-positive integer arguments all three take values in Q + Q*log(2);
log 2 only ever enters through eta(1).  ``Log2Linear`` is that closed value
space.  v has simple poles at 0, -1, -3, ...; w has a simple pole at s = 1
with residue log 2; u is entire.

The module also builds the convolution coefficients C_n of

    (e^z/(e^z+1)) * log((e^z-1)/z) = sum_{n>=1} C_n z^n,

which tie v(-2n) to the Bernoulli numbers two independent ways:

    (2n)! C_2n = (1/(4n) + 2^(2n-1) - 1/2) B_2n       (closed form)
    (2n)! C_2n = v(-2n) - zeta(1-2n)                  (bridge)
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, perm

from .exact import bernoulli, bernoulli_modified, euler_zero

__all__ = [
    "Log2Linear",
    "PoleReport",
    "IdentityCheck",
    "zeta_nonpositive",
    "eta_nonpositive",
    "u_value",
    "v_value_even",
    "v_residue",
    "w_value",
    "w_pole",
    "c_coefficients",
    "check_corollary1",
    "check_bridge",
    "g_exact_neg_even",
]

LN2 = math.log(2.0)


@dataclass(frozen=True)
class Log2Linear:
    """Exact value a + b*log(2) with a, b rational."""

    rational_part: Fraction
    log2_coeff: Fraction

    @classmethod
    def of(cls, rational=0, log2=0) -> "Log2Linear":
        return cls(Fraction(rational), Fraction(log2))

    def to_float(self) -> float:
        return float(self.rational_part) + float(self.log2_coeff) * LN2

    def __str__(self) -> str:
        return f"{self.rational_part} + {self.log2_coeff}*ln2"


@dataclass(frozen=True)
class PoleReport:
    """Simple-pole description: location, residue, order (always 1 here)."""

    location: int
    residue: Fraction | Log2Linear
    order: int = 1


@dataclass(frozen=True)
class IdentityCheck:
    """Witnessed pass/fail record for an exact identity at index n."""

    name: str
    n: int
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def zeta_nonpositive(k: int) -> Fraction:
    """zeta(-k) for k >= 0: zeta(0) = -1/2, zeta(-2n) = 0,
    zeta(1-2n) = -B_2n/(2n)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Fraction(-1, 2)
    if k % 2 == 0:
        return Fraction(0)
    m = k + 1
    return -bernoulli(m) / m


def eta_nonpositive(k: int) -> Fraction:
    """eta(-k) for k >= 0: eta(0) = 1/2, eta(-2n) = 0,
    eta(1-2n) = (2^2n - 1) B_2n / (2n)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Fraction(1, 2)
    if k % 2 == 0:
        return Fraction(0)
    m = k + 1
    return (2**m - 1) * bernoulli(m) / m


def u_value(m: int) -> Log2Linear:
    """u(-m) exactly.

    Even arguments: 2 u(-2n) = eta(1-2n) + n E_{2n-1}(0), a pure rational.
    Odd arguments come from the tail expansion specialized at s = 1-2n:

      2 u(1-2n) = eta(2-2n)
                  + sum_{j=1}^{n} perm(2n-1, 2j-1)/(2j-1)! * E_{2j-1}(0)
                                  * eta(2j+1-2n),

    where the j = n term carries eta(1) = log 2 (the only log-2 source) and
    the eta(2-2n) term is nonzero only for n = 1, i.e. u(-1).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Log2Linear.of(0, Fraction(1, 2))
    if m % 2 == 0:
        n = m // 2
        val = (eta_nonpositive(2 * n - 1) + n * euler_zero(2 * n - 1)) / 2
        return Log2Linear(val, Fraction(0))
    n = (m + 1) // 2
    rational = eta_nonpositive(2 * n - 2)
    log2 = Fraction(0)
    for j in range(1, n + 1):
        coeff = (
            Fraction(perm(2 * n - 1, 2 * j - 1), factorial(2 * j - 1))
            * euler_zero(2 * j - 1)
        )
        if j == n:
            log2 += coeff
        else:
            rational += coeff * eta_nonpositive(2 * n - 2 * j - 1)
    return Log2Linear(rational / 2, log2 / 2)


def v_value_even(n: int) -> Fraction:
    """v(-2n) = (zeta(1-2n) - n E_{2n-1}(0)) / 2 for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (zeta_nonpositive(2 * n - 1) - n * euler_zero(2 * n - 1)) / 2


def v_residue(location: int) -> PoleReport:
    """Residue of v at one of its simple poles 0, -1, -3, -5, ...

    Res[s=0] = 1/2 and Res[s=-(2n+1)] = E_{2n+1}(0)/2.  Raises for any
    other location (v is finite at negative even integers).
    """
    if location == 0:
        return PoleReport(0, Fraction(1, 2))
    if location < 0 and location % 2 == 1:
        return PoleReport(location, euler_zero(-location) / 2)
    raise ValueError(f"v(s) has no pole at s = {location}")


def w_value(m: int) -> Log2Linear:
    """w(-m) exactly.

    Even arguments: w(-2n) = eta(1-2n)/2 - B_2n * eta(0).
    Odd arguments, from the Euler-Maclaurin representation at s = 1-2n:

      w(1-2n) = -eta(1-2n)/(2n) + eta(2-2n)/2
                - sum_{j=1}^{n} perm(2n-1, 2j-1)/(2j)! * B_2j
                                * eta(2j+1-2n),

    where again the j = n term supplies the log 2 via eta(1) and the
    eta(2-2n)/2 term survives only at n = 1.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Log2Linear.of(Fraction(-1, 2), Fraction(1, 2))
    if m % 2 == 0:
        n = m // 2
        val = eta_nonpositive(2 * n - 1) / 2 - bernoulli(2 * n) / 2
        return Log2Linear(val, Fraction(0))
    n = (m + 1) // 2
    rational = (
        -eta_nonpositive(2 * n - 1) / (2 * n) + eta_nonpositive(2 * n - 2) / 2
    )
    log2 = Fraction(0)
    for j in range(1, n + 1):
        coeff = (
            Fraction(perm(2 * n - 1, 2 * j - 1), factorial(2 * j))
            * bernoulli(2 * j)
        )
        if j == n:
            log2 -= coeff
        else:
            rational -= coeff * eta_nonpositive(2 * n - 2 * j - 1)
    return Log2Linear(rational, log2)


def w_pole() -> PoleReport:
    """The single pole of w: simple, at s = 1, residue log 2."""
    return PoleReport(1, Log2Linear.of(0, 1))


_c_lock = threading.Lock()
_c_table: list[Fraction] = []  # _c_table[i] == C_{i+1}
_log_coeff: list[Fraction] = [Fraction(0)]  # B(k)/(k! k), 0 placeholder at k=0
_exp_coeff: list[Fraction] = [Fraction(1, 2)]  # E_j(1)/(2 j!)


def _euler_at_one(j: int) -> Fraction:
    # E_j(1) = -E_j(0) for j >= 1; E_0(1) = 1.  The reflection is verified
    # independently against the polynomial table in the test suite.
    return Fraction(1) if j == 0 else -euler_zero(j)


def c_coefficients(count: int) -> list[Fraction]:
    """C_1..C_count as the Cauchy product of (1/2) sum E_j(1) z^j/j!
    (that is, e^z/(e^z+1)) and sum B(k) z^k/(k! k) (log((e^z-1)/z))."""
    if count < 1:
        raise ValueError("count must be >= 1")
    with _c_lock:
        while len(_c_table) < count:
            n = len(_c_table) + 1
            while len(_log_coeff) <= n:
                k = len(_log_coeff)
                _log_coeff.append(bernoulli_modified(k) / (factorial(k) * k))
            while len(_exp_coeff) <= n:
                j = len(_exp_coeff)
                _exp_coeff.append(_euler_at_one(j) / (2 * factorial(j)))
            total = Fraction(0)
            for k in range(1, n + 1):
                total += _log_coeff[k] * _exp_coeff[n - k]
            _c_table.append(total)
        return list(_c_table[:count])


def check_corollary1(n: int) -> IdentityCheck:
    """Exact check of (2n)! C_2n = (1/(4n) + 2^(2n-1) - 1/2) B_2n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = factorial(2 * n) * c_coefficients(2 * n)[2 * n - 1]
    rhs = (Fraction(1, 4 * n) + 2 ** (2 * n - 1) - Fraction(1, 2)) * bernoulli(2 * n)
    return IdentityCheck("corollary1", n, lhs, rhs)


def check_bridge(n: int) -> IdentityCheck:
    """Exact check of (2n)! C_2n = v(-2n) - zeta(1-2n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = factorial(2 * n) * c_coefficients(2 * n)[2 * n - 1]
    rhs = v_value_even(n) - zeta_nonpositive(2 * n - 1)
    return IdentityCheck("bridge", n, lhs, rhs)


def g_exact_neg_even(n: int) -> Fraction:
    """G(-2n) = (2n)! C_2n, with the independent route v(-2n) - zeta(1-2n)
    verified internally; disagreement raises (it would mean a broken
    Bernoulli/Euler table, not a representable result)."""
    check = check_bridge(n)
    if not check.passed:
        raise ArithmeticError(
            f"G(-2n) routes disagree at n={n}: {check.lhs} != {check.rhs}"
        )
    return check.lhs
