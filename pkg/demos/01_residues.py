"""
Residues of Dedekind zeta functions
===================================

The pole of zeta_K(s) at s = 1 has residue L(1, chi_D). For a quadratic field
this is also given by the class number formula, so the two can be compared.
"""

import mpmath

from dedekind_stieltjes import l_taylor_coeffs, make_field, residue_from_invariants
from dedekind_stieltjes.invariants import known_invariants

mpmath.mp.prec = 256

# L(1, chi_D) from the Hurwitz decomposition, with a propagated error bound
for D in (-3, -4, -7, -8, 5, 8, 12, 13):
    K = make_field(D)
    b = l_taylor_coeffs(K, 0, 256)
    formula = residue_from_invariants(K, known_invariants(D, 256), 256)
    print(f"{str(K):>12}  {mpmath.nstr(b.residue, 30)}  diff {mpmath.nstr(abs(b.residue - formula), 3)}")

# The Gaussian field gives the Leibniz series
print("pi/4 =", mpmath.nstr(mpmath.pi / 4, 30))
