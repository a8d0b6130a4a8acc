"""Shared independent oracles for the test suite.

These deliberately re-derive values through different recurrences/routes
than the package uses, so agreement is evidence rather than tautology.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import comb

import numpy as np
import pytest

EULER_GAMMA = 0.5772156649015329  # Euler-Mascheroni constant


@pytest.fixture(scope="session")
def bernoulli_oracle():
    """B_0..B_400 via the defining recurrence, computed independently."""
    table = [Fraction(1)]
    for m in range(1, 401):
        acc = Fraction(0)
        for k, bk in enumerate(table):
            acc += comb(m + 1, k) * bk
        table.append(-acc / (m + 1))
    return table


@pytest.fixture(scope="session")
def euler_poly_oracle():
    """E_0..E_60 coefficient lists from the generating-function recurrence
    E_n(x) = x^n - (1/2) sum_{k<n} C(n,k) E_k(x) (a different recurrence
    than the package's Appell construction)."""
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(1, 61):
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        for k in range(n):
            c = Fraction(comb(n, k), 2)
            for i, a in enumerate(polys[k]):
                coeffs[i] -= c * a
        polys.append(coeffs)
    return polys


def alternating_sum_oracle(term, n_terms: int = 20000) -> float:
    """Midpoint-of-partial-sums evaluation of sum (-1)^(n-1) term(n)."""
    n = np.arange(1, n_terms + 2, dtype=float)
    vals = term(n)
    signs = np.where(np.arange(1, n_terms + 2) % 2 == 1, 1.0, -1.0)
    partial = float(np.sum(signs[:-1] * vals[:-1]))
    return partial + signs[-1] * float(vals[-1]) / 2.0


def eta_oracle(s: float, n_terms: int = 20000) -> float:
    return alternating_sum_oracle(lambda n: n ** (-s), n_terms)


def eta_prime_oracle(s: float, n0: int = 400, levels: int = 40) -> float:
    """sum_{n>=2} (-1)^n log(n)/n^s by repeated averaging of partial sums."""
    sums = []
    acc = 0.0
    for n in range(2, n0 + levels + 1):
        acc += (-1) ** n * math.log(n) / n**s
        if n >= n0:
            sums.append(acc)
    arr = np.array(sums)
    while arr.size > 1:
        arr = (arr[:-1] + arr[1:]) / 2.0
    return float(arr[0])
