"""Stieltjes constants of a field straight from the ideal counts.

For n >= 1,

    gamma_n(K) = (-1)^n/n! lim_x [ sum_{N a <= x} (log N a)^n / N a - r (log x)^(n+1)/(n+1) ]

with r = gamma_{-1}(K). At finite x the bracket S_n(x) differs from its limit by
the boundary term (N_K(x) - r x)(log x)^n / x, which is known exactly from the
table, plus a smooth remainder of size about x^(-1/m)(log x)^n. The fit removes
the boundary term and then extrapolates the remainder by weighted least squares.

For n = 0 the fitted quantity is alpha_0 = gamma_0(K) - r, the value at s = 1
of zeta_K(s) - r s/(s-1); gamma_0(K) is recovered by adding r back.
"""

from dataclasses import dataclass
from math import factorial

import mpmath

from .errors import OutOfRange, ResidueMismatch, TooFewCheckpoints
from .laurent import gamma_q_reference  # noqa: F401  (re-exported)
from .sieve import ideal_count_prefix, log_moment_sums

MIN_CHECKPOINT = 10**3
MIN_CHECKPOINTS = 4
_FIT_PRECISION = 128


@dataclass(frozen=True)
class LimitEstimate:
    field: object
    n: int
    xmax: int
    raw_checkpoint_values: tuple  # (x, S_n(x)) pairs
    extrapolated_value: mpmath.mpf
    model_residual: mpmath.mpf
    method: str = "theorem1"


def default_checkpoints(xmax):
    """x = xmax / 4^k for k = 0..7, keeping those at or above MIN_CHECKPOINT."""
    xs = [xmax / 4**k for k in range(8)]
    return sorted(int(x) for x in xs if x >= MIN_CHECKPOINT)


def _fit_limit(xs, ys, n, m):
    """Weighted least squares for y ~ L + c x^(-1/m) (log x)^n; returns (L, max residual)."""
    rows, rhs, basis = [], [], []
    for x, y in zip(xs, ys):
        x = mpmath.mpf(x)
        g = x ** (-mpmath.mpf(1) / m) * mpmath.log(x) ** n
        w = 1 / g
        rows.append([w, w * g])
        rhs.append(w * y)
        basis.append(g)
    sol, _ = mpmath.qr_solve(mpmath.matrix(rows), mpmath.matrix(rhs))
    L, c = sol[0], sol[1]
    residual = max(abs(y - (L + c * g)) for y, g in zip(ys, basis))
    return L, residual


def gamma_limit(field, n, table, residue, checkpoints=None, add_residue_term=True, precision=128):
    """Estimate gamma_n(K) from the ideal-count table.

    ``add_residue_term`` only matters for n = 0; switching it off returns alpha_0
    instead of gamma_0 and exists to test that the shift is applied.
    """
    if checkpoints is None:
        checkpoints = default_checkpoints(table.xmax)
    xs = sorted(set(int(x) for x in checkpoints))
    if len(xs) < MIN_CHECKPOINTS:
        raise TooFewCheckpoints(f"need at least {MIN_CHECKPOINTS} distinct checkpoints")
    if xs[0] < MIN_CHECKPOINT or xs[-1] > table.xmax:
        raise OutOfRange(f"checkpoints must lie in [{MIN_CHECKPOINT}, {table.xmax}]")

    with mpmath.workprec(_FIT_PRECISION):
        r = mpmath.mpf(residue)
        drift = mpmath.mpf(ideal_count_prefix(table, table.xmax)) / table.xmax
        if abs(drift - r) > r / 10:
            raise ResidueMismatch(
                f"N_K(x)/x = {mpmath.nstr(drift, 6)} is far from the residue {mpmath.nstr(r, 6)}"
            )

    sums = log_moment_sums(table, [n], xs, precision)[n]
    m = field.degree
    with mpmath.workprec(_FIT_PRECISION):
        raw, ys = [], []
        for x, s in zip(xs, sums):
            lx = mpmath.log(x)
            S = s - r * lx ** (n + 1) / (n + 1)
            raw.append((x, S))
            count = ideal_count_prefix(table, x)
            boundary = (count - r * x) * lx**n / x
            y = S - boundary
            if n == 0:
                y -= r
            ys.append(y)
        L, residual = _fit_limit(xs, ys, n, m)
        scale = mpmath.mpf((-1) ** n) / factorial(n)
        value = scale * L
        if n == 0 and add_residue_term:
            value += r
        residual = residual / factorial(n)
    return LimitEstimate(field, n, table.xmax, tuple(raw), value, residual)
