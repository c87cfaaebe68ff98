"""The base field Q and quadratic fields Q(sqrt(D)).

A field is identified by its discriminant: 1 for Q, otherwise a fundamental
discriminant D. Q carries the principal character of period 1, so that
downstream code can treat zeta_K = zeta * L(s, chi_D) uniformly.
"""

from dataclasses import dataclass, field as dc_field
from enum import Enum
from math import isqrt

import numpy as np

from .errors import (
    BoundExceeded,
    InconsistentInvariants,
    NonFundamentalDiscriminant,
    NotQuadratic,
    ValidationError,
)

DEFAULT_DISCRIMINANT_BOUND = 10**6


class Splitting(Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


def is_squarefree(n):
    n = abs(n)
    if n == 0:
        return False
    if n % 4 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 2
    return True


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % p for p in range(3, isqrt(n) + 1, 2))


def is_fundamental_discriminant(d):
    """True for discriminants of quadratic fields (1 is not one)."""
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def jacobi(a, m):
    """Jacobi symbol (a/m) for odd m > 0."""
    if m <= 0 or m % 2 == 0:
        raise ValueError("jacobi symbol needs an odd positive modulus")
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def kronecker(D, n):
    """Kronecker symbol (D/n) for n >= 0.

    For a fundamental D this is the primitive real character of conductor |D|.
    """
    if n < 0:
        raise ValueError("kronecker symbol is only defined here for n >= 0")
    if n == 0:
        return 1 if abs(D) == 1 else 0
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * jacobi(D, n)


@dataclass(frozen=True)
class FieldDescriptor:
    discriminant: int
    degree: int
    signature: tuple
    character_period: int
    # chi_D(a) for a = 0 .. |D|-1, as a read-only int8 array
    character_values: np.ndarray = dc_field(repr=False, compare=False)

    @property
    def is_rational(self):
        return self.degree == 1

    def chi(self, n):
        return int(self.character_values[n % self.character_period])

    def character_sum(self):
        return int(self.character_values.sum(dtype=np.int64))

    def __str__(self):
        if self.is_rational:
            return "Q"
        return f"Q(sqrt({self.discriminant}))"


def make_field(d, bound=DEFAULT_DISCRIMINANT_BOUND):
    """Build a validated :class:`FieldDescriptor` for discriminant ``d``.

    ``d = 1`` gives Q. Any other value must be a fundamental discriminant with
    ``|d| <= bound``.
    """
    d = int(d)
    if d == 1:
        chars = np.ones(1, dtype=np.int8)
        chars.setflags(write=False)
        return FieldDescriptor(1, 1, (1, 0), 1, chars)
    if abs(d) > bound:
        raise BoundExceeded(f"|D| = {abs(d)} exceeds the discriminant bound {bound}")
    if not is_fundamental_discriminant(d):
        raise NonFundamentalDiscriminant(f"{d} is not a fundamental discriminant")
    q = abs(d)
    chars = np.fromiter((kronecker(d, a) for a in range(q)), dtype=np.int8, count=q)
    chars.setflags(write=False)
    signature = (2, 0) if d > 0 else (0, 1)
    return FieldDescriptor(d, 2, signature, q, chars)


def splitting_type(field, p):
    """Decomposition of the rational prime ``p`` in a quadratic field."""
    if field.degree != 2:
        raise NotQuadratic("splitting type needs a quadratic field")
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if field.discriminant % p == 0:
        return Splitting.RAMIFIED
    return Splitting.SPLIT if kronecker(field.discriminant, p) == 1 else Splitting.INERT


@dataclass(frozen=True)
class FieldInvariants:
    """Class number, regulator, number of roots of unity and |disc|.

    The regulator is 1 by convention for Q and imaginary quadratic fields.
    """

    class_number: int
    regulator: object
    roots_of_unity: int
    abs_discriminant: int

    @classmethod
    def rational(cls):
        return cls(1, 1, 2, 1)

    def check(self, field):
        if self.class_number < 1:
            raise InconsistentInvariants("class number must be positive")
        if not self.regulator > 0:
            raise InconsistentInvariants("regulator must be positive")
        if self.abs_discriminant != field.character_period:
            raise InconsistentInvariants(
                f"|d| = {self.abs_discriminant} does not match the field ({field.character_period})"
            )
        D = field.discriminant
        if field.is_rational or D < 0:
            if self.regulator != 1:
                raise InconsistentInvariants("regulator is 1 by convention here")
        if field.is_rational or D > 0:
            expected_w = {2}
        else:
            expected_w = {-4: {4}, -3: {6}}.get(D, {2})
        if self.roots_of_unity not in expected_w:
            raise InconsistentInvariants(
                f"w = {self.roots_of_unity} is impossible for discriminant {D}"
            )


def fundamental_discriminants(limit):
    """All fundamental discriminants with 0 < |D| <= limit, ordered by |D| then sign."""
    out = []
    for q in range(3, limit + 1):
        for d in (-q, q):
            if is_fundamental_discriminant(d):
                out.append(d)
    return out
