"""Signs of gamma_n(K) and the even/odd splitting of the Laurent series.

Indices n >= 1 are sorted into four classes: even n with gamma_n(K) < 0 or > 0
(C1-, C1+) and odd n with gamma_n(K) < 0 or > 0 (C2-, C2+). A coefficient
whose magnitude does not exceed its error bound is left unclassified.

The parity identities, for 0 < t < 1:

    zeta_K(1+t) + zeta_K(1-t)             = 2 sum_{n even} gamma_n(K) t^n
    zeta_K(1+t) - zeta_K(1-t) - 2 r / t   = 2 sum_{n odd}  gamma_n(K) t^n
"""

from dataclasses import dataclass

import mpmath

from .errors import DomainError
from .laurent import laurent_coeffs
from .lfunc import DEFAULT_PRECISION, zeta_k_real

CLASS_NAMES = ("C1-", "C1+", "C2-", "C2+")


@dataclass(frozen=True)
class SignReport:
    field: object
    N: int
    signs: tuple  # signs[n - 1] for n = 1..N; 0 marks an indeterminate sign
    classes: dict  # class name -> tuple of indices
    indeterminate: tuple
    first_sign_change_even: object = None
    first_sign_change_odd: object = None

    @property
    def class_counts(self):
        return {name: len(self.classes[name]) for name in CLASS_NAMES}

    def sign(self, n):
        return self.signs[n - 1]


def _first_change(signs, parity):
    previous = 0
    for n, s in enumerate(signs, start=1):
        if n % 2 != parity or s == 0:
            continue
        if previous and s != previous:
            return n
        previous = s
    return None


def sign_table(coeffs):
    """Classify the signs of gamma_1(K) .. gamma_N(K) against their error bounds."""
    signs = []
    indeterminate = []
    classes = {name: [] for name in CLASS_NAMES}
    for n in range(1, coeffs.N + 1):
        value, err = coeffs.gammas[n], coeffs.error_bounds[n]
        if abs(value) <= err:
            signs.append(0)
            indeterminate.append(n)
            continue
        s = 1 if value > 0 else -1
        signs.append(s)
        prefix = "C1" if n % 2 == 0 else "C2"
        classes[prefix + ("+" if s > 0 else "-")].append(n)
    signs = tuple(signs)
    return SignReport(
        coeffs.field,
        coeffs.N,
        signs,
        {name: tuple(v) for name, v in classes.items()},
        tuple(indeterminate),
        _first_change(signs, 0),
        _first_change(signs, 1),
    )


def parity_sums(coeffs, t, report=None):
    """(2 sum_{even n} gamma_n t^n, 2 sum_{odd n} gamma_n t^n) over n <= N.

    With a SignReport the odd and positive even indices are taken from its
    classes (gamma_0 is always included); only classified indices contribute.
    """
    if report is None:
        even = [n for n in range(0, coeffs.N + 1, 2)]
        odd = [n for n in range(1, coeffs.N + 1, 2)]
    else:
        even = sorted((0,) + report.classes["C1-"] + report.classes["C1+"])
        odd = sorted(report.classes["C2-"] + report.classes["C2+"])
    with mpmath.workprec(coeffs.precision_bits + 16):
        t = mpmath.mpf(t)
        even_sum = 2 * mpmath.fsum(coeffs.gammas[n] * t**n for n in even)
        odd_sum = 2 * mpmath.fsum(coeffs.gammas[n] * t**n for n in odd)
    return even_sum, odd_sum


def parity_series_check(
    field, t, N=40, precision=DEFAULT_PRECISION, coeffs=None, report=None, omit_pole=False
):
    """Residuals of the even and odd parity identities at 0 < t < 1.

    ``omit_pole`` drops the 2 r / t term from the odd identity; used to check
    that the term matters.
    """
    with mpmath.workprec(precision + 16):
        t = mpmath.mpf(t)
        if not 0 < t < 1:
            raise DomainError("t must lie in (0, 1)")
        s_plus, s_minus = 1 + t, 1 - t
    if coeffs is None:
        coeffs = laurent_coeffs(field, N, precision)
    plus = zeta_k_real(field, s_plus, precision)
    minus = zeta_k_real(field, s_minus, precision)
    even_sum, odd_sum = parity_sums(coeffs, t, report)
    with mpmath.workprec(precision + 16):
        pole = 0 if omit_pole else 2 * coeffs.residue / t
        even_residual = abs(plus + minus - even_sum)
        odd_residual = abs(plus - minus - pole - odd_sum)
    return even_residual, odd_residual
