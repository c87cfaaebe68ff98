"""
Signs of gamma_n(K)
===================

Split the indices into even and odd and look at the signs. Each sign is
certified by the error bound; the table is repeated at twice the precision.
The even and odd parts of the series are then checked against zeta_K(1 +- t).
"""

import mpmath

from dedekind_stieltjes import laurent_coeffs, make_field, parity_series_check, sign_table

for D in (1, -4, -3, 5):
    K = make_field(D)
    lo = sign_table(laurent_coeffs(K, 40, 256))
    hi = sign_table(laurent_coeffs(K, 40, 512))
    line = "".join("+" if s > 0 else "-" if s < 0 else "?" for s in lo.signs)
    print(f"{str(K):>12}  {line}  {lo.class_counts}  stable={lo.signs == hi.signs}")

K = make_field(5)
coeffs = laurent_coeffs(K, 40, 256)
for t in ("0.1", "0.5", "0.9"):
    even, odd = parity_series_check(K, t, coeffs=coeffs)
    print(f"t={t}: even residual {mpmath.nstr(even, 3)}, odd residual {mpmath.nstr(odd, 3)}")
