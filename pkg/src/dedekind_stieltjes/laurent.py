"""Laurent coefficients of zeta_K(s) at s = 1 by convolution.

zeta_K(s) = gamma_{-1}(K)/(s-1) + sum_n gamma_n(K) (s-1)^n, with the gamma_n(K)
the bare Taylor coefficients (no (-1)^n/n! factor). Since zeta_K = zeta * L,

    gamma_{-1}(K) = b_0,   gamma_n(K) = b_{n+1} + sum_{k<=n} g_k b_{n-k},

where b_j are the Taylor coefficients of L(s, chi_D) and
g_k = (-1)^k gamma_k / k! those of zeta(s) - 1/(s-1).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from ._ball import Ball
from .errors import IndexTooLarge, PrecisionTooLow
from .lfunc import DEFAULT_PRECISION, N_MAX, _check_precision, hurwitz_stieltjes_all, l_taylor_coeffs


@dataclass(frozen=True)
class LaurentCoefficients:
    field: object
    residue: mpmath.mpf
    residue_error: mpmath.mpf
    gammas: tuple
    error_bounds: tuple
    precision_bits: int

    @property
    def N(self):
        return len(self.gammas) - 1

    def alpha(self, n):
        """Coefficients of zeta_K(s) - residue * s/(s-1): gamma_0 - residue at n = 0, gamma_n after."""
        if n == 0:
            with mpmath.workprec(self.precision_bits):
                return self.gammas[0] - self.residue
        return self.gammas[n]


def _zeta_taylor_balls(precision):
    """g_k = (-1)^k gamma_k / k! for k = 0 .. N_MAX + 1.

    The batch size is fixed so that every caller sees bit-identical values.
    """
    raw = hurwitz_stieltjes_all(N_MAX + 1, Fraction(1), precision)
    wp = precision + 16
    with mpmath.workprec(wp):
        return [g * Ball.rounded(mpmath.mpf((-1) ** k) / factorial(k)) for k, g in enumerate(raw)]


def _round(ball, precision):
    with mpmath.workprec(precision):
        value = +ball.mid
        return value, ball.rad + abs(value - ball.mid)


def gamma_q_reference(n, precision=DEFAULT_PRECISION):
    """gamma_n(Q): the n-th Taylor coefficient of zeta(s) - 1/(s-1) at s = 1.

    Equal to (-1)^n/n! times the classical Stieltjes constant; computed via
    Euler-Maclaurin, not the slowly converging defining limit.
    """
    return gamma_q_reference_with_error(n, precision)[0]


def gamma_q_reference_with_error(n, precision=DEFAULT_PRECISION):
    _check_precision(precision)
    if not 0 <= n <= N_MAX:
        raise IndexTooLarge(f"index must lie in [0, {N_MAX}]")
    return _round(_zeta_taylor_balls(precision)[n], precision)


def laurent_coeffs(field, N, precision=DEFAULT_PRECISION):
    """Residue and gamma_0(K) .. gamma_N(K) with propagated error bounds."""
    _check_precision(precision)
    if not 0 <= N <= N_MAX:
        raise IndexTooLarge(f"N must lie in [0, {N_MAX}]")
    if precision < 4 * N:
        raise PrecisionTooLow(f"N = {N} needs at least {4 * N} bits")

    if field.is_rational:
        pairs = [gamma_q_reference_with_error(n, precision) for n in range(N + 1)]
        zero = mpmath.mpf(0)
        return LaurentCoefficients(
            field,
            mpmath.mpf(1),
            zero,
            tuple(v for v, _ in pairs),
            tuple(e for _, e in pairs),
            precision,
        )

    wp = precision + 32
    b = l_taylor_coeffs(field, N + 1, wp).balls()
    g = _zeta_taylor_balls(wp)
    with mpmath.workprec(wp):
        gam = []
        for n in range(N + 1):
            acc = b[n + 1]
            for k in range(n + 1):
                acc = acc + g[k] * b[n - k]
            gam.append(acc)
    residue, residue_err = _round(b[0], precision)
    pairs = [_round(x, precision) for x in gam]
    return LaurentCoefficients(
        field,
        residue,
        residue_err,
        tuple(v for v, _ in pairs),
        tuple(e for _, e in pairs),
        precision,
    )


def euler_kronecker(coeffs):
    """gamma_K = gamma_0(K) / gamma_{-1}(K)."""
    with mpmath.workprec(coeffs.precision_bits):
        return coeffs.gammas[0] / coeffs.residue
