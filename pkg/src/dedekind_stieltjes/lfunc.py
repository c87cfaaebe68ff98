"""L(s, chi_D) near s = 1 through the Hurwitz zeta function.

Everything here is driven by Euler-Maclaurin summation with exact Bernoulli
numbers. Truncation errors are bounded rigorously and rounding errors are
bounded a priori from the magnitudes of the summed terms, so every value
comes with an error bound that dominates both.

Conventions: ``zeta(s, a) = 1/(s-1) + sum_k (-1)^k gamma_k(a) (s-1)^k / k!``
defines the generalized Stieltjes constants ``gamma_k(a)``; ``gamma_k(1)`` are
the classical ones (gamma_0 = Euler's constant, gamma_1 = -0.0728...).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, factorial, log2

import mpmath

from ._ball import Ball
from .bernoulli import MAX_INDEX as BERNOULLI_MAX, bernoulli_over_factorial
from .errors import DomainError, IndexTooLarge, PoleAt1, PrecisionTooLow

N_MAX = 64
DEFAULT_PRECISION = 256
MIN_PRECISION = 64
_K = BERNOULLI_MAX // 2


@dataclass(frozen=True)
class HurwitzStieltjesValue:
    n: int
    a: Fraction
    value: mpmath.mpf
    error_bound: mpmath.mpf


@dataclass(frozen=True)
class LTaylorCoefficients:
    """Taylor coefficients b_j of L(s, chi_D) = sum_j b_j (s-1)^j; b_0 is the residue of zeta_K."""

    field: object
    order: int
    coeffs: tuple
    precision_bits: int
    error_bounds: tuple

    @property
    def residue(self):
        return self.coeffs[0]

    def balls(self):
        return [Ball(c, e) for c, e in zip(self.coeffs, self.error_bounds)]


def _mpf(fraction):
    return mpmath.mpf(fraction.numerator) / fraction.denominator


def _check_precision(precision):
    if precision < MIN_PRECISION:
        raise PrecisionTooLow(f"precision must be at least {MIN_PRECISION} bits")


def _as_parameter(a):
    a = Fraction(a)
    if not 0 < a <= 1:
        raise DomainError(f"Hurwitz parameter must lie in (0, 1], got {a}")
    return a


@lru_cache(maxsize=None)
def _log_power_derivatives(n, jmax):
    """Integer polynomials P_j with d^j/dx^j [(log x)^n / x] = x^(-1-j) P_j(log x).

    P_j is stored as a coefficient tuple indexed by the power of log x.
    """
    P = [0] * n + [1]
    out = [tuple(P)]
    for j in range(jmax):
        P = [-(1 + j) * P[i] + (i + 1) * (P[i + 1] if i + 1 <= n else 0) for i in range(n + 1)]
        out.append(tuple(P))
    return tuple(out)


def _stieltjes_tail_bound(nmax, X, logX):
    """Bound on the Euler-Maclaurin remainder after _K correction terms, for each n <= nmax.

    |R| <= |B_2K|/(2K)! * int_X^oo |f^(2K)|, with |f^(2K)(x)| <= x^(-1-2K) sum_i |c_i| (log x)^i
    and int_X^oo x^(-1-s) (log x)^i dx = G_i, G_i = (log X)^i X^-s / s + (i/s) G_(i-1).
    """
    s = 2 * _K
    scale = abs(_mpf(bernoulli_over_factorial(s)))
    G = []
    g = X ** (-s) / s
    G.append(g)
    for i in range(1, nmax + 1):
        g = logX**i * X ** (-s) / s + i * g / s
        G.append(g)
    bounds = []
    for n in range(nmax + 1):
        P = _log_power_derivatives(n, s)[s]
        bounds.append(scale * mpmath.fsum(abs(c) * G[i] for i, c in enumerate(P)))
    return bounds


def _stieltjes_cutoff(nmax, a, target_log2):
    """Smallest M (on a geometric grid) whose remainder bound is below 2^target_log2 for all n."""
    M = 4
    with mpmath.workprec(64):
        while True:
            X = M + mpmath.mpf(a.numerator) / a.denominator
            bounds = _stieltjes_tail_bound(nmax, X, mpmath.log(X))
            worst = max(bounds) * (1 + mpmath.mpf(2) ** -20)
            if worst < mpmath.ldexp(1, target_log2):
                return M, bounds
            M = int(ceil(M * 1.25))


@lru_cache(maxsize=256)
def _stieltjes_batch(nmax, a, precision):
    """gamma_n(a) for n = 0 .. nmax with absolute error < 2^(8 - precision) (plus final rounding).

    Returns a tuple of (value, error_bound) pairs; values carry the working precision.
    """
    p, q = a.numerator, a.denominator
    target = 8 - precision
    M, tails = _stieltjes_cutoff(nmax, a, target - 1)

    # guard bits against cancellation between the partial sum and its compensator
    with mpmath.workprec(64):
        X = M + mpmath.mpf(p) / q
        logX = mpmath.log(X)
        mag = max(logX ** (n + 1) / (n + 1) for n in range(nmax + 1))
        if a < 1:
            la = abs(mpmath.log(mpmath.mpf(p) / q))
            mag = max(mag, max(la**n for n in range(nmax + 1)) * q / p)
            kappa = 1 + 1 / min(la, mpmath.log(1 + mpmath.mpf(1) / q))
        else:
            kappa = 1 + 1 / mpmath.log(2)
        guard = 16 + int(ceil(log2(max(float(mag), 1.0)))) + int(ceil(log2(float(kappa))))
    wp = precision + guard

    with mpmath.workprec(wp):
        u = mpmath.ldexp(1, 1 - wp)
        sums = [mpmath.mpf(0)] * (nmax + 1)
        abs_sums = [mpmath.mpf(0)] * (nmax + 1)
        for m in range(M):
            x = mpmath.mpf(m * q + p) / q
            L = mpmath.log(x)
            t = 1 / x
            for n in range(nmax + 1):
                sums[n] += t
                abs_sums[n] += abs(t)
                t *= L

        X = mpmath.mpf(M * q + p) / q
        LX = mpmath.log(X)
        invX = 1 / X
        bern = [_mpf(bernoulli_over_factorial(2 * k)) for k in range(_K + 1)]
        out = []
        for n in range(nmax + 1):
            derivs = _log_power_derivatives(n, 2 * _K)
            value = sums[n] - LX ** (n + 1) / (n + 1) + LX**n * invX / 2
            corr_abs = LX ** (n + 1) / (n + 1) + LX**n * invX / 2
            xpow = mpmath.mpf(1)
            invX2 = invX * invX
            for k in range(1, _K + 1):
                xpow *= invX2
                P = derivs[2 * k - 1]
                poly = mpmath.mpf(0)
                poly_abs = mpmath.mpf(0)
                for c in reversed(P):
                    poly = poly * LX + c
                    poly_abs = poly_abs * LX + abs(c)
                # xpow = X^(-2k) and f^(2k-1)(X) = X^(-2k) P_(2k-1)(log X)
                value -= bern[k] * xpow * poly
                corr_abs += abs(bern[k]) * xpow * poly_abs
            rounding = u * (
                ((n + 4) * kappa + M) * abs_sums[n]
                + (3 * n + 2 * _K + 16) * corr_abs
                + abs(value)
            )
            out.append((+value, tails[n] + rounding))
    return tuple(out)


def hurwitz_stieltjes(n, a=1, precision=DEFAULT_PRECISION):
    """Generalized Stieltjes constant gamma_n(a), 0 < a <= 1, with an error bound.

    >>> float(hurwitz_stieltjes(0, 1, 128).value)
    0.5772156649015329
    """
    _check_precision(precision)
    if not 0 <= n <= N_MAX:
        raise IndexTooLarge(f"index must lie in [0, {N_MAX}]")
    a = _as_parameter(a)
    value, err = _stieltjes_batch(n, a, precision)[n]
    with mpmath.workprec(precision):
        rounded = +value
        err = err + abs(rounded - value)
    return HurwitzStieltjesValue(n, a, rounded, err)


def hurwitz_stieltjes_all(nmax, a, precision=DEFAULT_PRECISION):
    """Balls for gamma_0(a) .. gamma_nmax(a), at the working precision of the batch."""
    _check_precision(precision)
    a = _as_parameter(a)
    return [Ball(v, e) for v, e in _stieltjes_batch(nmax, a, precision)]


def l_taylor_coeffs(field, J, precision=DEFAULT_PRECISION):
    """b_0 .. b_J of L(s, chi_D) at s = 1.

    Uses L(s, chi) = q^-s sum_a chi(a) zeta(s, a/q), q = |D|. The poles of the
    Hurwitz terms cancel because the character sums to zero over a period,
    leaving b_j = sum_(i+k=j) [(-log q)^i / (i! q)] [sum_a chi(a) (-1)^k gamma_k(a/q) / k!].
    """
    _check_precision(precision)
    if not 0 <= J <= N_MAX + 1:
        raise IndexTooLarge(f"order must lie in [0, {N_MAX + 1}]")
    if field.is_rational:
        zero = mpmath.mpf(0)
        coeffs = (mpmath.mpf(1),) + (zero,) * J
        return LTaylorCoefficients(field, J, coeffs, precision, (zero,) * (J + 1))
    if field.character_sum() != 0:
        raise DomainError("character does not sum to zero over a period")

    q = field.character_period
    wp = precision + 16 + int(ceil(log2(q))) + J
    with mpmath.workprec(wp):
        c = [Ball(0) for _ in range(J + 1)]
        for r in range(1, q):
            chi = field.chi(r)
            if chi == 0:
                continue
            gam = hurwitz_stieltjes_all(J, Fraction(r, q), wp)
            for k in range(J + 1):
                c[k] = c[k] + gam[k] if chi > 0 else c[k] - gam[k]
        for k in range(J + 1):
            c[k] = c[k] * Ball.rounded(mpmath.mpf((-1) ** k) / factorial(k))

        mlogq = Ball.rounded(-mpmath.log(q))
        e = [Ball.rounded(mpmath.mpf(1) / q)]
        for i in range(1, J + 1):
            e.append(e[-1] * mlogq * Ball.rounded(mpmath.mpf(1) / i))
        b = []
        for j in range(J + 1):
            acc = Ball(0)
            for i in range(j + 1):
                acc = acc + e[i] * c[j - i]
            b.append(acc)

    with mpmath.workprec(precision):
        coeffs = tuple(+x.mid for x in b)
        errs = tuple(x.rad + abs(cf - x.mid) for x, cf in zip(b, coeffs))
    return LTaylorCoefficients(field, J, coeffs, precision, errs)


def residue_from_invariants(field, inv, precision=DEFAULT_PRECISION):
    """Class number formula 2^r1 (2 pi)^r2 h R / (w sqrt|d|)."""
    inv.check(field)
    r1, r2 = field.signature
    with mpmath.workprec(precision + 16):
        value = (
            mpmath.mpf(2) ** r1
            * (2 * mpmath.pi) ** r2
            * inv.class_number
            * mpmath.mpf(inv.regulator)
            / (inv.roots_of_unity * mpmath.sqrt(inv.abs_discriminant))
        )
    with mpmath.workprec(precision):
        return +value


# --- point values on (0, 2) -------------------------------------------------


@lru_cache(maxsize=None)
def _borwein_weights(n):
    """d_k = n sum_(i<=k) (n+i-1)! 4^i / ((n-i)! (2i)!) for k = 0 .. n, as exact integers."""
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(factorial(n + i - 1) * 4**i, factorial(n - i) * factorial(2 * i))
        d.append(n * acc)
    assert all(x.denominator == 1 for x in d)
    return tuple(int(x) for x in d)


def _eta(s, wp):
    """Dirichlet eta function by Borwein's accelerated alternating sum."""
    # error <= 3 (3 + sqrt 8)^-n (1 + 2|Im s|) / |Gamma(s)|, and 1/Gamma <= 1.13 on (0, 2)
    n = int(ceil((wp + 4) / log2(3 + 8**0.5))) + 2
    d = _borwein_weights(n)
    with mpmath.workprec(wp):
        total = mpmath.mpf(0)
        for k in range(n):
            term = (d[k] - d[n]) / mpmath.power(k + 1, s)
            total += term if k % 2 == 0 else -term
        return -total / d[n]


def _riemann_zeta(s, wp):
    with mpmath.workprec(wp):
        return _eta(s, wp) / (1 - mpmath.power(2, 1 - s))


def _hurwitz_zeta_cutoff(s, a, target_log2):
    """M such that the Euler-Maclaurin remainder for zeta(s, a) is below 2^target_log2."""
    with mpmath.workprec(64):
        coeff = abs(_mpf(bernoulli_over_factorial(2 * _K))) * mpmath.rf(s, 2 * _K - 1)
        M = 4
        while True:
            X = M + mpmath.mpf(a.numerator) / a.denominator
            if coeff * X ** (1 - s - 2 * _K) < mpmath.ldexp(1, target_log2):
                return M
            M = int(ceil(M * 1.25))


def _hurwitz_zeta(s, a, wp):
    """zeta(s, a) for real s != 1 by Euler-Maclaurin, at working precision wp."""
    p, q = a.numerator, a.denominator
    M = _hurwitz_zeta_cutoff(s, a, -wp)
    with mpmath.workprec(wp):
        total = mpmath.fsum(mpmath.power(mpmath.mpf(m * q + p) / q, -s) for m in range(M))
        X = mpmath.mpf(M * q + p) / q
        total += mpmath.power(X, 1 - s) / (s - 1) + mpmath.power(X, -s) / 2
        rising = s
        xpow = mpmath.power(X, -s - 1)
        for k in range(1, _K + 1):
            total += _mpf(bernoulli_over_factorial(2 * k)) * rising * xpow
            rising *= (s + 2 * k - 1) * (s + 2 * k)
            xpow /= X * X
        return total


def _near_pole_bits(s):
    with mpmath.workprec(64):
        return max(0, int(ceil(-log2(float(abs(s - 1))))))


def _l_value(field, s, wp):
    q = field.character_period
    with mpmath.workprec(wp):
        L = mpmath.fsum(
            field.chi(r) * _hurwitz_zeta(s, Fraction(r, q), wp) for r in range(1, q) if field.chi(r)
        )
        return L * mpmath.power(q, -s)


def zeta_k_real(field, s, precision=DEFAULT_PRECISION):
    """zeta_K(s) = zeta(s) L(s, chi_D) for real 0 < s < 2, s != 1.

    zeta(s) comes from the accelerated alternating (eta) series, L(s, chi_D)
    from the Hurwitz decomposition.
    """
    _check_precision(precision)
    with mpmath.workprec(precision + 32):
        s = mpmath.mpf(s)
    if s == 1:
        raise PoleAt1("zeta_K has a pole at s = 1")
    if not 0 < s < 2:
        raise DomainError("zeta_k_real is restricted to 0 < s < 2")
    wp = precision + 32 + _near_pole_bits(s)
    with mpmath.workprec(wp):
        z = _riemann_zeta(s, wp)
        if not field.is_rational:
            z *= _l_value(field, s, wp)
    with mpmath.workprec(precision):
        return +z


def l_function_real(field, s, precision=DEFAULT_PRECISION):
    """L(s, chi_D) for real 0 < s < 2 (s = 1 allowed for D != 1)."""
    _check_precision(precision)
    with mpmath.workprec(precision + 32):
        s = mpmath.mpf(s)
    if not 0 < s < 2:
        raise DomainError("l_function_real is restricted to 0 < s < 2")
    if field.is_rational:
        return mpmath.mpf(1)
    if s == 1:
        return l_taylor_coeffs(field, 0, precision).residue
    wp = precision + 32 + _near_pole_bits(s)
    L = _l_value(field, s, wp)
    with mpmath.workprec(precision):
        return +L
