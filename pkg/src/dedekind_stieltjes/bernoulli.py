"""Exact Bernoulli numbers B_0 .. B_64 (B_1 = -1/2 convention)."""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

MAX_INDEX = 64


@lru_cache(maxsize=None)
def _table():
    B = [Fraction(1)]
    for m in range(1, MAX_INDEX + 1):
        B.append(-sum(comb(m + 1, k) * B[k] for k in range(m)) / (m + 1))
    return tuple(B)


def bernoulli(k):
    if not 0 <= k <= MAX_INDEX:
        raise ValueError(f"Bernoulli numbers are tabulated for 0 <= k <= {MAX_INDEX}")
    return _table()[k]


def bernoulli_over_factorial(k):
    """B_k / k! as an exact fraction."""
    return bernoulli(k) / factorial(k)
