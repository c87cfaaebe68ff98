"""
Laurent coefficients at s = 1
=============================

zeta_K(s) = gamma_{-1}/(s-1) + sum gamma_n(K) (s-1)^n. For Q the gamma_n are
(-1)^n/n! times the classical Stieltjes constants, so gamma_1(Q) is positive.
"""

import mpmath

from dedekind_stieltjes import euler_kronecker, laurent_coeffs, make_field

mpmath.mp.dps = 30

q = laurent_coeffs(make_field(1), 5, 256)
for n, g in enumerate(q.gammas):
    classical = (-1) ** n * mpmath.factorial(n) * g
    print(f"n={n}  gamma_n(Q) = {mpmath.nstr(g, 25):>30}   classical {mpmath.nstr(classical, 20)}")

# A real and an imaginary field side by side
for D in (-4, 5):
    c = laurent_coeffs(make_field(D), 10, 256)
    print(f"\nD = {D}: residue {mpmath.nstr(c.residue, 20)}, Euler-Kronecker {mpmath.nstr(euler_kronecker(c), 20)}")
    for n in range(0, 11, 2):
        print(f"  gamma_{n:<2} = {mpmath.nstr(c.gammas[n], 20):>28}  +- {mpmath.nstr(c.error_bounds[n], 2)}")
