"""Ideal counts a_K(n) = #{ideals of norm n} and their log-moment sums.

For a quadratic field a_K = 1 * chi_D (Dirichlet convolution); for Q every
a_K(n) is 1. Counts are exact integers, so the two constructions below can be
compared bit for bit.
"""

import os
import struct
from dataclasses import dataclass
from math import isqrt

import mpmath
import numpy as np

from .errors import BoundExceeded, OutOfRange, PrecisionTooLow, ValidationError
from .field import FieldDescriptor, Splitting, make_field, splitting_type

# bytes per table entry: int32 counts + int64 prefix, plus int32 scratch
_BYTES_PER_ENTRY = 16
DEFAULT_MEMORY_BUDGET = 2 * 1024**3
DEFAULT_N_MAX = 64
BLOCK_SIZE = 1 << 16

CACHE_MAGIC = b"IDCT"
CACHE_VERSION = 1
_HEADER = struct.Struct("<4sIqQ")


@dataclass(frozen=True, eq=False)
class IdealCountTable:
    """``counts[n] = a_K(n)`` and ``prefix[t] = N_K(t)`` for ``0 <= n, t <= xmax``.

    Index 0 is a zero placeholder so that arrays are indexed by the norm itself.
    """

    field: FieldDescriptor
    xmax: int
    counts: np.ndarray
    prefix: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, IdealCountTable):
            return NotImplemented
        return (
            self.field == other.field
            and self.xmax == other.xmax
            and np.array_equal(self.counts, other.counts)
        )

    __hash__ = None


def _check_budget(xmax, budget):
    if xmax < 1:
        raise ValidationError("xmax must be at least 1")
    if xmax * _BYTES_PER_ENTRY > budget:
        raise BoundExceeded(f"xmax = {xmax} exceeds the memory budget of {budget} bytes")


def _character_table(field, xmax):
    """chi_D(e) for e = 0 .. xmax."""
    reps = xmax // field.character_period + 1
    return np.tile(field.character_values.astype(np.int32), reps)[: xmax + 1]


def _finish(field, xmax, counts):
    counts[0] = 0
    prefix = np.cumsum(counts, dtype=np.int64)
    counts.setflags(write=False)
    prefix.setflags(write=False)
    return IdealCountTable(field, xmax, counts, prefix)


def build_ideal_counts(field, xmax, memory_budget=DEFAULT_MEMORY_BUDGET):
    """Divisor-pass sieve: add chi(e) to every multiple of e.

    The pairs (e, n/e) are split at sqrt(xmax) so that each numpy pass is a
    long strided slice: small e are swept directly, large e are swept by their
    small cofactor.
    """
    xmax = int(xmax)
    _check_budget(xmax, memory_budget)
    counts = np.zeros(xmax + 1, dtype=np.int32)
    if field.is_rational:
        counts[:] = 1
        return _finish(field, xmax, counts)

    chi = _character_table(field, xmax)
    r = isqrt(xmax)
    for e in range(1, r + 1):
        if chi[e]:
            counts[e::e] += chi[e]
    for d in range(1, xmax // (r + 1) + 1):
        top = xmax // d
        if top > r:
            counts[d * (r + 1) : d * top + 1 : d] += chi[r + 1 : top + 1]
    return _finish(field, xmax, counts)


def _prime_power_count(kind, k):
    if kind is None or kind is Splitting.RAMIFIED:
        return 1
    if kind is Splitting.SPLIT:
        return k + 1
    return 1 if k % 2 == 0 else 0


def primes_up_to(n):
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve)


def build_ideal_counts_multiplicative(field, xmax, memory_budget=DEFAULT_MEMORY_BUDGET):
    """Multiplicative build: a_K(n) as a product of local factors a_K(p^k).

    The local factor is read off from the splitting type of p, independently
    of the divisor sieve.
    """
    xmax = int(xmax)
    _check_budget(xmax, memory_budget)
    counts = np.ones(xmax + 1, dtype=np.int32)
    if field.is_rational:
        return _finish(field, xmax, counts)

    for p in primes_up_to(xmax).tolist():
        kind = splitting_type(field, p)
        if kind is Splitting.RAMIFIED:
            continue
        # local[j] is the p-part factor of n = p * (j + 1)
        local = np.full(xmax // p, _prime_power_count(kind, 1), dtype=np.int32)
        pk, k = p * p, 2
        while pk <= xmax:
            step = pk // p
            local[step - 1 :: step] = _prime_power_count(kind, k)
            pk *= p
            k += 1
        counts[p::p] *= local
    return _finish(field, xmax, counts)


def ideal_count_prefix(table, t):
    """N_K(t), the number of ideals of norm at most t."""
    if t > table.xmax:
        raise OutOfRange(f"t = {t} is beyond the table bound {table.xmax}")
    if t < 1:
        return 0
    return int(table.prefix[int(t)])


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _compensated_sum(values):
    """Pairwise summation with error-free transformations at every level."""
    n = values.size
    if n == 0:
        return values.dtype.type(0), values.dtype.type(0)
    size = 1 << (n - 1).bit_length()
    s = np.zeros(size, dtype=values.dtype)
    s[:n] = values
    err = np.zeros(size, dtype=values.dtype)
    while s.size > 1:
        s, e = _two_sum(s[0::2], s[1::2])
        err = err[0::2] + err[1::2] + e
    return s[0], err[0]


def _to_mpf(x):
    num, den = x.as_integer_ratio()
    return mpmath.mpf(num) / den


def _block_moments(table, lo, hi, ns):
    """Compensated sums of a(k) (log k)^n / k over lo <= k < hi, as mpf, for each n."""
    k = np.arange(lo, hi, dtype=np.longdouble)
    base = table.counts[lo:hi].astype(np.longdouble) / k
    logs = np.log(k)
    out = {}
    power = np.ones_like(k)
    current = 0
    for n in sorted(ns):
        while current < n:
            power *= logs
            current += 1
        s, e = _compensated_sum(base * power)
        out[n] = _to_mpf(s) + _to_mpf(e)
    return out


def log_moment_sums(table, ns, xs, precision=128, n_max=DEFAULT_N_MAX):
    """Partial sums sum_{k <= x} a(k) (log k)^n / k for every n in ``ns`` and x in ``xs``.

    Summation order is fixed: blocks of ``BLOCK_SIZE`` norms on a grid starting
    at 1, each summed with compensated pairwise summation in extended-precision
    floats, then accumulated in ``precision``-bit arithmetic in index order. A
    checkpoint inside a block adds its partial block separately, so the result
    for a given x does not depend on which other checkpoints are requested.

    Returns ``{n: [S(x) for x in xs]}``.
    """
    if precision < 64:
        raise PrecisionTooLow("log-moment sums need at least 64 bits")
    ns = sorted(set(int(n) for n in ns))
    if ns and (ns[0] < 0 or ns[-1] > n_max):
        raise OutOfRange(f"moment index must lie in [0, {n_max}]")
    xs = [float(x) for x in xs]
    for x in xs:
        if x < 1 or x > table.xmax:
            raise OutOfRange(f"x = {x} outside [1, {table.xmax}]")
    tops = [int(x) for x in xs]

    with mpmath.workprec(precision):
        result = {n: [None] * len(xs) for n in ns}
        acc = {n: mpmath.mpf(0) for n in ns}
        pending = sorted(range(len(tops)), key=lambda i: tops[i])
        lo = 1
        pos = 0
        while pos < len(pending):
            hi = lo + BLOCK_SIZE
            while pos < len(pending) and tops[pending[pos]] < hi:
                i = pending[pos]
                partial = _block_moments(table, lo, tops[i] + 1, ns)
                for n in ns:
                    result[n][i] = acc[n] + partial[n]
                pos += 1
            if pos == len(pending):
                break
            block = _block_moments(table, lo, hi, ns)
            for n in ns:
                acc[n] += block[n]
            lo = hi
    return result


def log_moment_sum(table, n, x, precision=128, n_max=DEFAULT_N_MAX):
    """sum over ideals of norm <= x of (log N a)^n / N a."""
    return log_moment_sums(table, [n], [x], precision, n_max)[n][0]


def cache_filename(discriminant, xmax):
    return f"idct_D{discriminant}_x{xmax}_v{CACHE_VERSION}.bin"


def dump_table(table, path):
    """Write counts as little-endian int32 after a header (magic, version, D, xmax)."""
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(CACHE_MAGIC, CACHE_VERSION, table.field.discriminant, table.xmax))
        fh.write(table.counts[1:].astype("<i4").tobytes())


def load_table(path, field=None):
    """Read a table written by :func:`dump_table`.

    Returns None for files with a different magic or format version.
    """
    with open(path, "rb") as fh:
        header = fh.read(_HEADER.size)
        if len(header) < _HEADER.size:
            return None
        magic, version, d, xmax = _HEADER.unpack(header)
        if magic != CACHE_MAGIC or version != CACHE_VERSION:
            return None
        raw = fh.read()
    if len(raw) != 4 * xmax:
        raise ValidationError(f"{path}: truncated ideal-count cache")
    if field is None:
        field = make_field(d)
    elif field.discriminant != d:
        raise ValidationError(f"{path} holds D = {d}, expected {field.discriminant}")
    counts = np.zeros(xmax + 1, dtype=np.int32)
    counts[1:] = np.frombuffer(raw, dtype="<i4")
    return _finish(field, xmax, counts)


def cached_ideal_counts(field, xmax, cache_dir=None):
    """Build the table, going through ``cache_dir`` when one is given."""
    if cache_dir is None:
        return build_ideal_counts(field, xmax)
    path = os.path.join(cache_dir, cache_filename(field.discriminant, xmax))
    if os.path.exists(path):
        table = load_table(path, field)
        if table is not None and table.xmax == xmax:
            return table
    table = build_ideal_counts(field, xmax)
    os.makedirs(cache_dir, exist_ok=True)
    dump_table(table, path)
    return table
