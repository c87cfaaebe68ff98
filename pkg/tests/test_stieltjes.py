import math

import mpmath
import pytest

from conftest import cached_laurent, cached_table
from dedekind_stieltjes import (
    OutOfRange,
    ResidueMismatch,
    TooFewCheckpoints,
    build_ideal_counts,
    gamma_limit,
    make_field,
)
from dedekind_stieltjes.stieltjes import default_checkpoints

XMAX = 10**7


def limit(D, n, **kw):
    K = make_field(D)
    r = cached_laurent(D, 4, 256).residue
    return gamma_limit(K, n, cached_table(D, XMAX), r, **kw)


def test_default_checkpoints():
    # 10^7 / 4^7 is below 1000 and is dropped
    assert default_checkpoints(XMAX) == sorted(int(XMAX / 4**k) for k in range(7))
    assert default_checkpoints(10**4) == [2500, 10**4]


@pytest.mark.parametrize("D", [1, -4, 5])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_limit_matches_convolution(D, n):
    est = limit(D, n)
    exact = cached_laurent(D, 4, 256).gammas[n]
    assert abs(est.extrapolated_value - exact) < 1e-3
    assert est.method == "theorem1"
    assert est.xmax == XMAX


@pytest.mark.parametrize("D", [-3, 8, 13])
def test_limit_other_fields(D):
    exact = cached_laurent(D, 4, 256).gammas
    for n in range(4):
        est = limit(D, n)
        assert abs(est.extrapolated_value - exact[n]) < 1e-2


def test_q_first_constant_is_harmonic_limit():
    est = limit(1, 0)
    # raw S_0(x) = H_floor(x) - log x, so the raw values approach gamma from above
    for x, S in est.raw_checkpoint_values:
        H = mpmath.harmonic(x)
        assert abs(S - (H - math.log(x))) < 1e-12
        assert S > mpmath.euler
    assert abs(est.extrapolated_value - mpmath.euler) < 1e-9


def test_q_first_derivative_sign():
    # Taylor convention: +0.0728..., the negative of the classical gamma_1
    est = limit(1, 1)
    assert abs(est.extrapolated_value + mpmath.stieltjes(1)) < 1e-8


def test_residue_shift_matters_at_zero():
    r = cached_laurent(-4, 4, 256).residue
    mpmath.mp.prec = 128
    on = limit(-4, 0).extrapolated_value
    off = limit(-4, 0, add_residue_term=False).extrapolated_value
    assert abs(on - off - r) < 1e-20
    exact = cached_laurent(-4, 4, 256).gammas[0]
    assert abs(off - exact) > 0.5


@pytest.mark.parametrize("D", [-4, 5])
@pytest.mark.parametrize("n", [1, 2])
def test_raw_chain_converges(D, n):
    # the raw error should shrink along x = xmax / 4^k by some power of x;
    # single steps are noisy, so look at the geometric mean over the chain
    exact = cached_laurent(D, 4, 256).gammas[n]
    scale = mpmath.mpf((-1) ** n) / math.factorial(n)
    errs = [abs(scale * S - exact) for _, S in limit(D, n).raw_checkpoint_values]
    ratio = (errs[0] / errs[-1]) ** (1 / mpmath.mpf(len(errs) - 1))
    assert ratio > 1.7


def test_fit_residual_reported():
    est = limit(5, 1)
    assert 0 <= est.model_residual < 1e-2
    assert len(est.raw_checkpoint_values) == len(default_checkpoints(XMAX))


def test_custom_checkpoints():
    xs = [10**4, 10**5, 10**6, 10**7]
    est = limit(-4, 1, checkpoints=xs)
    assert [x for x, _ in est.raw_checkpoint_values] == xs
    assert abs(est.extrapolated_value - cached_laurent(-4, 4, 256).gammas[1]) < 1e-2


def test_too_few_checkpoints():
    with pytest.raises(TooFewCheckpoints):
        limit(-4, 1, checkpoints=[10**5, 10**6, 10**7])
    with pytest.raises(TooFewCheckpoints):
        limit(-4, 1, checkpoints=[10**5, 10**5, 10**6, 10**7])


def test_checkpoint_out_of_range():
    with pytest.raises(OutOfRange):
        limit(-4, 1, checkpoints=[100, 10**5, 10**6, 10**7])
    with pytest.raises(OutOfRange):
        limit(-4, 1, checkpoints=[10**4, 10**5, 10**6, 10**8])


def test_residue_mismatch():
    K = make_field(-4)
    table = build_ideal_counts(K, 10**5)
    with pytest.raises(ResidueMismatch):
        gamma_limit(K, 1, table, 1.0)
    # a small error in the residue is accepted
    gamma_limit(K, 1, table, mpmath.pi / 4 * 1.01)
