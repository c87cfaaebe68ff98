import math
from functools import lru_cache

import mpmath
import numpy as np
import pytest

from dedekind_stieltjes import FieldInvariants, build_ideal_counts, laurent_coeffs, make_field


@lru_cache(maxsize=None)
def cached_laurent(D, N, precision):
    return laurent_coeffs(make_field(D), N, precision)


@lru_cache(maxsize=None)
def cached_table(D, xmax):
    return build_ideal_counts(make_field(D), xmax)


def stieltjes_partial_sum_oracle(n, x=10**6):
    """Classical gamma_n from its defining limit, in float64.

    T(x) = sum_{m<=x} (log m)^n/m - (log x)^(n+1)/(n+1) - (log x)^n/(2x) has an
    error of order x^-2; one Richardson step on (x, 2x) removes most of it.
    """
    m = np.arange(1, 2 * x + 1, dtype=np.float64)
    f = np.log(m) ** n / m

    def T(y):
        return math.fsum(f[:y]) - math.log(y) ** (n + 1) / (n + 1) - f[y - 1] / 2

    return (4 * T(2 * x) - T(x)) / 3


# Class number 1 for all of these; regulators are logs of fundamental units.
def _fixture_invariants():
    mpmath.mp.prec = 400
    inv = {
        -3: FieldInvariants(1, 1, 6, 3),
        -4: FieldInvariants(1, 1, 4, 4),
        -7: FieldInvariants(1, 1, 2, 7),
        -8: FieldInvariants(1, 1, 2, 8),
        5: FieldInvariants(1, mpmath.log((1 + mpmath.sqrt(5)) / 2), 2, 5),
        8: FieldInvariants(1, mpmath.log(1 + mpmath.sqrt(2)), 2, 8),
        12: FieldInvariants(1, mpmath.log(2 + mpmath.sqrt(3)), 2, 12),
        13: FieldInvariants(1, mpmath.log((3 + mpmath.sqrt(13)) / 2), 2, 13),
    }
    mpmath.mp.prec = 53
    return inv


FIXTURE_INVARIANTS = _fixture_invariants()


@pytest.fixture
def invariants():
    return FIXTURE_INVARIANTS


@pytest.fixture(autouse=True)
def _reset_mp():
    mpmath.mp.prec = 53
    yield
    mpmath.mp.prec = 53


# One PASS/FAIL line per acceptance criterion, printed after the run.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
