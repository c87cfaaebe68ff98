import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIXTURE_INVARIANTS, cached_laurent
from dedekind_stieltjes import (
    IndexTooLarge,
    PrecisionTooLow,
    euler_kronecker,
    gamma_q_reference,
    laurent_coeffs,
    make_field,
    residue_from_invariants,
)


def mpmath_zeta_k(D, s):
    """zeta(s) L(s, chi_D) entirely from mpmath, for s away from 1."""
    K = make_field(D)
    chi = [K.chi(a) for a in range(K.character_period)]
    return mpmath.zeta(s) * mpmath.dirichlet(s, chi)


def symmetric_gamma0(D, h):
    """Even part of zeta_K at 1 +- h with one Richardson step: gamma_0 + O(h^4)."""
    h = mpmath.mpf(h)
    E = lambda u: (mpmath_zeta_k(D, 1 + u) + mpmath_zeta_k(D, 1 - u)) / 2
    return (4 * E(h) - E(2 * h)) / 3


def test_q_first_coefficients():
    c = laurent_coeffs(make_field(1), 2, 256)
    mpmath.mp.dps = 80
    assert c.residue == 1
    assert abs(c.gammas[0] - mpmath.euler) < 1e-70
    mpmath.mp.dps = 40
    assert abs(c.gammas[1] + mpmath.stieltjes(1)) < 1e-38
    assert abs(c.gammas[2] - mpmath.stieltjes(2) / 2) < 1e-38


def test_q_matches_reference_bit_for_bit():
    c = cached_laurent(1, 40, 256)
    for n in range(41):
        assert c.gammas[n] == gamma_q_reference(n, 256)


@pytest.mark.parametrize("D", [-4, -3, 5, 13])
def test_gamma0_against_symmetric_difference(D):
    c = cached_laurent(D, 4, 256)
    mpmath.mp.dps = 50
    oracle = symmetric_gamma0(D, "1e-6")
    # oracle truncation ~ |gamma_4| h^4 ~ 1e-26
    assert abs(c.gammas[0] - oracle) < 1e-22 + c.error_bounds[0]


@pytest.mark.parametrize("D", [-4, 5])
def test_gamma1_against_odd_difference(D):
    c = cached_laurent(D, 4, 256)
    mpmath.mp.dps = 50
    r = c.residue

    def O(u):
        u = mpmath.mpf(u)
        return (mpmath_zeta_k(D, 1 + u) - mpmath_zeta_k(D, 1 - u) - 2 * r / u) / (2 * u)

    oracle = (4 * O("1e-6") - O("2e-6")) / 3
    assert abs(c.gammas[1] - oracle) < 1e-20


@pytest.mark.parametrize("D", sorted(FIXTURE_INVARIANTS))
def test_residue_matches_class_number_formula(D):
    c = cached_laurent(D, 2, 256)
    expected = residue_from_invariants(make_field(D), FIXTURE_INVARIANTS[D], 256)
    assert abs(c.residue - expected) < mpmath.mpf(10) ** -70


def test_euler_kronecker_of_q_is_euler_gamma():
    c = cached_laurent(1, 2, 256)
    mpmath.mp.dps = 70
    assert abs(euler_kronecker(c) - mpmath.euler) < 1e-70


def test_euler_kronecker_gaussian():
    # gamma_K = gamma + L'(1)/L(1) = 2 gamma + 2 log 2 + 3 log pi - 4 log Gamma(1/4)
    c = cached_laurent(-4, 2, 256)
    mpmath.mp.dps = 70
    pi = mpmath.pi
    expected = 2 * mpmath.euler + 2 * mpmath.log(2) + 3 * mpmath.log(pi) - 4 * mpmath.loggamma(mpmath.mpf(1) / 4)
    assert abs(euler_kronecker(c) - expected) < 1e-65


def test_euler_kronecker_eisenstein():
    # 2 gamma + 4 log 2 - (3/2) log 3 + 4 log pi - 6 log Gamma(1/3)
    c = cached_laurent(-3, 2, 256)
    mpmath.mp.dps = 70
    expected = (
        2 * mpmath.euler
        + 4 * mpmath.log(2)
        - mpmath.log(3) * 3 / 2
        + 4 * mpmath.log(mpmath.pi)
        - 6 * mpmath.loggamma(mpmath.mpf(1) / 3)
    )
    assert abs(euler_kronecker(c) - expected) < 1e-65


def test_alpha_view():
    c = cached_laurent(5, 6, 256)
    mpmath.mp.prec = 256
    assert c.alpha(0) == c.gammas[0] - c.residue
    for n in range(1, 7):
        assert c.alpha(n) == c.gammas[n]


def test_precision_guard():
    with pytest.raises(PrecisionTooLow):
        laurent_coeffs(make_field(-4), 40, 128)
    laurent_coeffs(make_field(-4), 32, 128)


def test_index_guard():
    with pytest.raises(IndexTooLarge):
        laurent_coeffs(make_field(-4), 65, 512)


def test_error_bounds_shrink_with_precision():
    lo = cached_laurent(-4, 20, 256)
    hi = cached_laurent(-4, 20, 512)
    for n in range(21):
        assert lo.error_bounds[n] > 0
        assert hi.error_bounds[n] < lo.error_bounds[n] / 2**100
        assert abs(lo.gammas[n] - hi.gammas[n]) <= lo.error_bounds[n] + hi.error_bounds[n]


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([-3, -4, -7, -8, 5, 8, 12, 13]), st.integers(1, 24))
def test_truncations_are_consistent(D, N):
    # a shorter run is a prefix of a longer one, within the stated bounds
    short = laurent_coeffs(make_field(D), N, 192)
    full = cached_laurent(D, 24, 192)
    for n in range(N + 1):
        assert abs(short.gammas[n] - full.gammas[n]) <= short.error_bounds[n] + full.error_bounds[n]
