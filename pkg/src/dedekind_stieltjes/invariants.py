"""Class numbers, regulators and roots of unity for a few small fields.

Used by the ``residue`` and ``verify`` commands to cross-check the residue
against the class number formula. All listed fields have class number 1.
"""

import mpmath

from .field import FieldInvariants

# real fields: D -> ((x, y, z), r), fundamental unit (x + y sqrt r) / z
_UNITS = {
    5: ((1, 1, 2), 5),     # (1 + sqrt 5) / 2
    8: ((1, 1, 1), 2),     # 1 + sqrt 2
    12: ((2, 1, 1), 3),    # 2 + sqrt 3
    13: ((3, 1, 2), 13),   # (3 + sqrt 13) / 2
}
_IMAGINARY_W = {-3: 6, -4: 4, -7: 2, -8: 2}

KNOWN_DISCRIMINANTS = (1, -3, -4, -7, -8, 5, 8, 12, 13)


def known_invariants(D, precision=256):
    """FieldInvariants for D in KNOWN_DISCRIMINANTS, regulator at the given precision."""
    if D == 1:
        return FieldInvariants.rational()
    if D in _IMAGINARY_W:
        return FieldInvariants(1, 1, _IMAGINARY_W[D], abs(D))
    if D in _UNITS:
        (x, y, z), r = _UNITS[D]
        with mpmath.workprec(precision + 16):
            R = mpmath.log((x + y * mpmath.sqrt(r)) / z)
        return FieldInvariants(1, R, 2, abs(D))
    raise KeyError(f"no stored invariants for D = {D}")
