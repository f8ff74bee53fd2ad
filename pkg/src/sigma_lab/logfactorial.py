"""Rigorous enclosures of ln(n!).

Two evaluation paths, switched at ``N_SWITCH``:

* exact summation (n <= N_SWITCH): ln(n!) is accumulated as logarithms of
  exact integer partial products with outward rounding.  Partial sums are
  cached per precision at fixed grid positions, so sequential sweeps and
  binary-search probes both pay roughly the marginal cost of the gap since
  the nearest cached prefix.

* asymptotic series (n > N_SWITCH): the de Moivre form
  ``(n + 1/2) ln n - n + ln(2 pi)/2 + sum B_{2k} / (2k (2k-1) n^{2k-1})``
  truncated after ``SERIES_TERMS`` terms, with the remainder enclosed by
  plus/minus the first omitted term.  That envelope property of the
  alternating coefficients is assumed, not proven here; it is cross-checked
  against exact summation both below and around the switch point by the
  test suite.

Every returned interval is additionally intersected with the two-sided
factorial sandwich ``1/(12n+1) < ln n! - base < 1/(12n)``, which serves as
an independent containment check on whichever path produced the result.
"""

from __future__ import annotations

import bisect
import functools
import math
import threading

import gmpy2

from .bounds import (
    DEFAULT_POLICY,
    BoundedReal,
    DomainError,
    PrecisionPolicy,
    _ctx,
    ln_int,
    pi_enclosure,
)

__all__ = ["ln_factorial", "series_ln_factorial", "factorial_sandwich", "N_SWITCH", "SERIES_TERMS"]

N_SWITCH = 10**6
SERIES_TERMS = 8

# B_2 .. B_18 as exact rationals; B_18 only bounds the truncation remainder.
_BERNOULLI = {
    2: gmpy2.mpq(1, 6),
    4: gmpy2.mpq(-1, 30),
    6: gmpy2.mpq(1, 42),
    8: gmpy2.mpq(-1, 30),
    10: gmpy2.mpq(5, 66),
    12: gmpy2.mpq(-691, 2730),
    14: gmpy2.mpq(7, 6),
    16: gmpy2.mpq(-3617, 510),
    18: gmpy2.mpq(43867, 798),
}

_PREFIX_GRID = 4096

# bits -> ({n: (lo, hi)}, sorted key list).  Inserts are idempotent facts,
# so concurrent writers can only duplicate work, never corrupt a value.
_prefix_caches: dict[int, tuple[dict, list]] = {}
_cache_lock = threading.Lock()


def _prefix_state(bits: int):
    with _cache_lock:
        state = _prefix_caches.get(bits)
        if state is None:
            zero = gmpy2.mpfr(0)
            state = ({1: (zero, zero)}, [1])
            _prefix_caches[bits] = state
    return state


def _ln_prefix(n: int, bits: int):
    """(lo, hi) bounds of ``ln n!`` by outward-rounded summation."""
    table, keys = _prefix_state(bits)
    hit = table.get(n)
    if hit is not None:
        return hit
    pos = bisect.bisect_right(keys, n) - 1
    start = keys[pos]
    lo, hi = table[start]
    down, up = _ctx(bits)
    k = start
    while k < n:
        stop = min(n, (k // _PREFIX_GRID + 1) * _PREFIX_GRID)
        block = math.prod(range(k + 1, stop + 1))
        lo = down.add(lo, down.log(block))
        hi = up.add(hi, up.log(block))
        k = stop
        if k not in table:
            table[k] = (lo, hi)
            bisect.insort(keys, k)
    return lo, hi


def _half_ln_two_pi(bits: int) -> BoundedReal:
    two_pi = pi_enclosure(bits) * 2
    from .bounds import ln  # local import keeps module init order simple

    return ln(two_pi) / 2


def _series_base(n: int, bits: int) -> BoundedReal:
    # (n + 1/2) ln n - n + ln(2 pi)/2
    return ln_int(n, bits) * gmpy2.mpq(2 * n + 1, 2) - n + _half_ln_two_pi(bits)


def series_ln_factorial(n: int, bits: int, terms: int = SERIES_TERMS) -> BoundedReal:
    """Series enclosure of ln(n!); valid for every n >= 1.

    ``terms`` may be forced for cross-checks; at most 8 terms are supported
    because the remainder bound needs the next Bernoulli coefficient.
    """
    if n < 1:
        raise DomainError(f"ln_factorial requires n >= 1, got {n}")
    if not 1 <= terms <= 8:
        raise ValueError("terms must be between 1 and 8")
    tail = gmpy2.mpq(0)
    for k in range(1, terms + 1):
        tail += _BERNOULLI[2 * k] / (2 * k * (2 * k - 1) * gmpy2.mpz(n) ** (2 * k - 1))
    kk = terms + 1
    omitted = abs(_BERNOULLI[2 * kk]) / (2 * kk * (2 * kk - 1) * gmpy2.mpz(n) ** (2 * kk - 1))
    enc = _series_base(n, bits) + BoundedReal.from_rational(tail, bits)
    down, up = _ctx(bits)
    return BoundedReal(down.sub(enc.lo, omitted), up.add(enc.hi, omitted), bits)


def factorial_sandwich(n: int, bits: int) -> BoundedReal:
    """Outer bounds of the strict two-sided factorial estimate.

    The true ln(n!) lies strictly between ``base + 1/(12n+1)`` and
    ``base + 1/(12n)``; the returned closed interval bounds that open one
    from outside.
    """
    base = _series_base(n, bits)
    lower = base + gmpy2.mpq(1, 12 * n + 1)
    upper = base + gmpy2.mpq(1, 12 * n)
    return BoundedReal(lower.lo, upper.hi, bits)


@functools.lru_cache(maxsize=65536)
def _ln_factorial_cached(n: int, bits: int) -> BoundedReal:
    if n <= N_SWITCH:
        lo, hi = _ln_prefix(n, bits)
        enc = BoundedReal(lo, hi, bits)
    else:
        enc = series_ln_factorial(n, bits)
    # Containment cross-check; a disjoint intersection would mean one of the
    # two computations is broken, and must not pass silently.
    return enc.intersect(factorial_sandwich(n, bits))


def ln_factorial(n: int, policy: PrecisionPolicy | None = None, *, bits: int | None = None) -> BoundedReal:
    """Certified enclosure of ln(n!) for n >= 1.

    ``bits`` selects the working precision directly; otherwise the policy's
    initial precision is used.  Callers that need comparisons resolved are
    expected to re-invoke at escalated precision themselves.
    """
    if n < 1:
        raise DomainError(f"ln_factorial requires n >= 1, got {n}")
    if bits is None:
        bits = (policy or DEFAULT_POLICY).initial_bits
    return _ln_factorial_cached(n, bits)
