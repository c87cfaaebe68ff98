"""
The constants from counting ideals
==================================

gamma_n(K) is also a limit of sums of (log N a)^n / N a over ideals of norm
up to x. Convergence is slow, like x^(-1/2) for a quadratic field, so a
short extrapolation over checkpoints is applied. The result is compared with
the convolution route.
"""

import time

import mpmath

from dedekind_stieltjes import build_ideal_counts, gamma_limit, laurent_coeffs, make_field

K = make_field(-4)
exact = laurent_coeffs(K, 3, 256)

t0 = time.perf_counter()
table = build_ideal_counts(K, 10**7)
print(f"ideal counts up to 1e7 for {K} in {time.perf_counter() - t0:.1f} s")

for n in range(4):
    est = gamma_limit(K, n, table, exact.residue)
    x, S = est.raw_checkpoint_values[-1]
    raw = (-1) ** n / mpmath.factorial(n) * S
    print(
        f"n={n}: raw at x={x:.0e} {mpmath.nstr(raw, 10):>14}"
        f"   fitted {mpmath.nstr(est.extrapolated_value, 10):>14}"
        f"   convolution {mpmath.nstr(exact.gammas[n], 10):>14}"
    )

# For n = 0 the fitted quantity is gamma_0 - residue; forgetting to add it back shows up at once
off = gamma_limit(K, 0, table, exact.residue, add_residue_term=False)
print("without the residue shift:", mpmath.nstr(off.extrapolated_value, 10))
