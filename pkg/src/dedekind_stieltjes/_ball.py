"""Midpoint-radius bookkeeping for forward error propagation.

Arithmetic happens at the ambient mpmath precision; every operation adds the
rounding error of its midpoint to the radius.
"""

import mpmath

# slack on radii so that rounding inside the radius computation stays covered
_INFLATE = mpmath.mpf(1) + mpmath.mpf(2) ** -20


def _ulp(x):
    return abs(x) * mpmath.ldexp(1, 1 - mpmath.mp.prec)


class Ball:
    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=0):
        # existing mpf values are kept as they are; mpf() would round them
        self.mid = mid if isinstance(mid, mpmath.mpf) else mpmath.mpf(mid)
        self.rad = rad if isinstance(rad, mpmath.mpf) else mpmath.mpf(rad)

    @classmethod
    def rounded(cls, mid, rad=0):
        """A freshly computed value: its own rounding error is added."""
        if not isinstance(mid, mpmath.mpf):
            mid = mpmath.mpf(mid)
        return cls(mid, (rad + _ulp(mid)) * _INFLATE)

    def __add__(self, other):
        other = _coerce(other)
        mid = self.mid + other.mid
        return Ball(mid, (self.rad + other.rad + _ulp(mid)) * _INFLATE)

    __radd__ = __add__

    def __neg__(self):
        return Ball(-self.mid, self.rad)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        mid = self.mid * other.mid
        rad = abs(self.mid) * other.rad + abs(other.mid) * self.rad + self.rad * other.rad
        return Ball(mid, (rad + _ulp(mid)) * _INFLATE)

    __rmul__ = __mul__

    def upper(self):
        return abs(self.mid) + self.rad

    def __repr__(self):
        return f"Ball({mpmath.nstr(self.mid, 15)} +/- {mpmath.nstr(self.rad, 3)})"


def _coerce(x):
    if isinstance(x, Ball):
        return x
    # ints and mpf constants passed in are taken as exact
    return Ball(x)


def ball_sum(items):
    total = Ball(0)
    for item in items:
        total = total + item
    return total
