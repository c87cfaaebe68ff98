"""Cross-route verification suite behind the ``verify`` command.

Each check compares two independent computations and yields a dict with a
name, a pass flag and a short detail string. Nothing time-dependent goes into
the report, so repeated runs produce identical output.
"""

import mpmath

from .field import fundamental_discriminants, make_field
from .invariants import KNOWN_DISCRIMINANTS, known_invariants
from .laurent import laurent_coeffs
from .lfunc import l_taylor_coeffs, residue_from_invariants, zeta_k_real
from .sieve import build_ideal_counts, build_ideal_counts_multiplicative, ideal_count_prefix
from .signscan import parity_series_check, sign_table
from .stieltjes import gamma_limit

DEFAULT_SUITE = (1, -4, 5)


def _fmt(x):
    return mpmath.nstr(x, 6)


def _check(name, passed, detail):
    return {"name": name, "passed": bool(passed), "detail": detail}


def check_residue(field, precision):
    if field.discriminant not in KNOWN_DISCRIMINANTS:
        return None
    inv = known_invariants(field.discriminant, precision)
    formula = residue_from_invariants(field, inv, precision)
    b0 = l_taylor_coeffs(field, 0, precision).residue
    diff = abs(formula - b0)
    return _check("residue", diff < mpmath.mpf("1e-30"), f"|formula - L(1)| = {_fmt(diff)}")


def check_limit_formula(field, coeffs, table, nmax=2):
    out = []
    for n in range(min(nmax, coeffs.N) + 1):
        est = gamma_limit(field, n, table, coeffs.residue)
        diff = abs(est.extrapolated_value - coeffs.gammas[n])
        tol = max(mpmath.mpf("1e-3"), 10 * est.model_residual)
        out.append(
            _check(f"limit_formula[n={n}]", diff < tol, f"|limit - convolution| = {_fmt(diff)}, tol {_fmt(tol)}")
        )
    return out


def check_parity(field, coeffs, precision, t="0.5"):
    even, odd = parity_series_check(field, t, coeffs=coeffs, precision=precision)
    tol = mpmath.mpf("1e-8")
    return _check("parity", even < tol and odd < tol, f"even {_fmt(even)}, odd {_fmt(odd)}")


def check_series(field, coeffs, precision, t="0.25"):
    with mpmath.workprec(precision):
        t = mpmath.mpf(t)
        approx = mpmath.fsum(g * t**n for n, g in enumerate(coeffs.gammas)) + coeffs.residue / t
        diff = abs(approx - zeta_k_real(field, 1 + t, precision))
    return _check("series", diff < mpmath.mpf("1e-8"), f"|series - zeta_K(1+t)| = {_fmt(diff)}")


def check_sign_stability(field, coeffs, precision):
    low = sign_table(coeffs)
    high = sign_table(laurent_coeffs(field, coeffs.N, 2 * precision))
    flips = [
        n
        for n in range(1, coeffs.N + 1)
        if low.sign(n) and high.sign(n) and low.sign(n) != high.sign(n)
    ]
    counts = ", ".join(f"{k}={v}" for k, v in low.class_counts.items())
    return _check("sign_stability", not flips, f"flips {flips}; {counts}")


def check_ideal_asymptotic(field, table, residue):
    points = [t for t in (10**4, 10**5, 10**6) if t <= table.xmax]
    if field.is_rational or not points:
        return None
    worst = max(abs(ideal_count_prefix(table, t) - residue * t) / mpmath.sqrt(t) for t in points)
    return _check("ideal_count_asymptotic", worst <= 10, f"max |N_K(t) - r t|/sqrt t = {_fmt(worst)}")


def check_sieve_equivalence(xmax=10**5, limit=50):
    bad = []
    for D in [1] + fundamental_discriminants(limit):
        f = make_field(D)
        a = build_ideal_counts(f, xmax)
        b = build_ideal_counts_multiplicative(f, xmax)
        if a != b:
            bad.append(D)
    return _check("sieve_equivalence", not bad, f"mismatching discriminants: {bad}")


def run_suite(discriminants=DEFAULT_SUITE, n_max=40, xmax=10**7, precision=256):
    """Run every check; returns (all_passed, list of check dicts)."""
    checks = []
    for D in discriminants:
        field = make_field(D)
        coeffs = laurent_coeffs(field, n_max, precision)
        table = build_ideal_counts(field, xmax)
        field_checks = [
            check_residue(field, precision),
            *check_limit_formula(field, coeffs, table),
            check_parity(field, coeffs, precision),
            check_series(field, coeffs, precision),
            check_sign_stability(field, coeffs, precision),
            check_ideal_asymptotic(field, table, coeffs.residue),
        ]
        for c in field_checks:
            if c is not None:
                c["discriminant"] = D
                checks.append(c)
    checks.append(check_sieve_equivalence(min(xmax, 10**5)))
    return all(c["passed"] for c in checks), checks
