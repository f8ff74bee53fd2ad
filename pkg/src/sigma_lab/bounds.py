"""Certified enclosures of real numbers at arbitrary working precision.

A :class:`BoundedReal` is a pair of MPFR endpoints ``[lo, hi]`` together with
the working precision in bits.  Every operation rounds the lower endpoint
toward -inf and the upper endpoint toward +inf, so the exact mathematical
result of composing operations is always contained in the returned interval.
Strict inequalities between real quantities are decided only when the two
enclosures are disjoint; otherwise the comparison is reported as UNDECIDED
and the caller may retry at higher precision (see :class:`PrecisionPolicy`).

All values are immutable after construction and safe for unrestricted
concurrent use.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator

import gmpy2

__all__ = [
    "BoundedReal",
    "Comparison",
    "PrecisionPolicy",
    "DEFAULT_POLICY",
    "DomainError",
    "PrecisionExhaustedError",
    "interval_arith",
    "enclose_elementary",
    "compare_certified",
    "resolve_comparison",
    "ln",
    "exp",
    "ln_int",
    "pi_enclosure",
    "e_enclosure",
    "decimal_str",
]

class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class PrecisionExhaustedError(RuntimeError):
    """A comparison stayed undecided at the precision cap.

    Carries enough context (``detail``) for the caller to report what could
    not be separated instead of guessing an answer.
    """

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.detail = detail


class Comparison(Enum):
    LT = "LT"
    GT = "GT"
    UNDECIDED = "UNDECIDED"


@functools.lru_cache(maxsize=None)
def _ctx(bits: int):
    """Shared (round-down, round-up) context pair for one precision.

    The contexts are created once and never mutated afterwards.
    """
    down = gmpy2.context(precision=bits, round=gmpy2.RoundDown)
    up = gmpy2.context(precision=bits, round=gmpy2.RoundUp)
    return down, up


def _is_exact(value) -> bool:
    return isinstance(value, (int, Fraction, gmpy2.mpz().__class__, gmpy2.mpq().__class__))


@dataclass(frozen=True, slots=True)
class BoundedReal:
    """Interval ``[lo, hi]`` guaranteed to contain one exact real value.

    Invariants: ``lo <= hi``, both endpoints finite, and the true value of
    the enclosed expression lies between them (directed rounding).
    """

    lo: object
    hi: object
    bits: int

    def __post_init__(self):
        if self.bits < 2:
            raise ValueError(f"working precision must be at least 2 bits, got {self.bits}")
        if not (gmpy2.is_finite(self.lo) and gmpy2.is_finite(self.hi)):
            raise OverflowError("enclosure endpoint is not finite")
        if self.lo > self.hi:
            raise ValueError(f"inverted enclosure [{self.lo}, {self.hi}]")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_int(cls, n, bits: int) -> "BoundedReal":
        down, up = _ctx(bits)
        zero = gmpy2.mpfr(0)
        return cls(down.add(zero, n), up.add(zero, n), bits)

    @classmethod
    def from_rational(cls, q, bits: int) -> "BoundedReal":
        if isinstance(q, Fraction):
            q = gmpy2.mpq(q.numerator, q.denominator)
        down, up = _ctx(bits)
        zero = gmpy2.mpfr(0)
        return cls(down.add(zero, q), up.add(zero, q), bits)

    @classmethod
    def from_float(cls, x: float, bits: int) -> "BoundedReal":
        # A Python float is an exact dyadic rational; no rounding happens
        # as long as bits >= 53.
        if bits < 53:
            return cls.from_rational(Fraction(x), bits)
        v = gmpy2.mpfr(x, bits)
        return cls(v, v, bits)

    @classmethod
    def exact(cls, value, bits: int) -> "BoundedReal":
        if isinstance(value, float):
            return cls.from_float(value, bits)
        if isinstance(value, (Fraction, gmpy2.mpq(0).__class__)):
            return cls.from_rational(value, bits)
        return cls.from_int(value, bits)

    # -- inspection --------------------------------------------------------

    @property
    def width(self):
        _, up = _ctx(self.bits)
        return up.sub(self.hi, self.lo)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, q) -> bool:
        """Exact membership test for an integer or rational ``q``."""
        if isinstance(q, Fraction):
            q = gmpy2.mpq(q.numerator, q.denominator)
        return self.lo <= q <= self.hi

    def intersect(self, other: "BoundedReal") -> "BoundedReal":
        """Intersection of two enclosures of the same real value."""
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise DomainError("enclosures are disjoint; they cannot bound the same value")
        return BoundedReal(lo, hi, min(self.bits, other.bits))

    def __repr__(self):
        return f"BoundedReal([{self.lo}, {self.hi}], bits={self.bits})"

    # -- arithmetic --------------------------------------------------------

    def _operand(self, other):
        """Return (lo, hi, bits) for the second operand, or None if unsupported."""
        if isinstance(other, BoundedReal):
            return other.lo, other.hi, other.bits
        if _is_exact(other):
            if isinstance(other, Fraction):
                other = gmpy2.mpq(other.numerator, other.denominator)
            return other, other, self.bits
        return None

    def __add__(self, other):
        op = self._operand(other)
        if op is None:
            return NotImplemented
        blo, bhi, bbits = op
        bits = min(self.bits, bbits)
        down, up = _ctx(bits)
        return BoundedReal(down.add(self.lo, blo), up.add(self.hi, bhi), bits)

    __radd__ = __add__

    def __sub__(self, other):
        op = self._operand(other)
        if op is None:
            return NotImplemented
        blo, bhi, bbits = op
        bits = min(self.bits, bbits)
        down, up = _ctx(bits)
        return BoundedReal(down.sub(self.lo, bhi), up.sub(self.hi, blo), bits)

    def __rsub__(self, other):
        op = self._operand(other)
        if op is None:
            return NotImplemented
        blo, bhi, bbits = op
        bits = min(self.bits, bbits)
        down, up = _ctx(bits)
        return BoundedReal(down.sub(blo, self.hi), up.sub(bhi, self.lo), bits)

    def __neg__(self):
        return BoundedReal(-self.hi, -self.lo, self.bits)

    def __mul__(self, other):
        op = self._operand(other)
        if op is None:
            return NotImplemented
        blo, bhi, bbits = op
        bits = min(self.bits, bbits)
        down, up = _ctx(bits)
        pairs = ((self.lo, blo), (self.lo, bhi), (self.hi, blo), (self.hi, bhi))
        lo = min(down.mul(a, b) for a, b in pairs)
        hi = max(up.mul(a, b) for a, b in pairs)
        return BoundedReal(lo, hi, bits)

    __rmul__ = __mul__

    def __truediv__(self, other):
        op = self._operand(other)
        if op is None:
            return NotImplemented
        blo, bhi, bbits = op
        if blo <= 0 <= bhi:
            raise DomainError("division by an interval containing zero")
        bits = min(self.bits, bbits)
        down, up = _ctx(bits)
        pairs = ((self.lo, blo), (self.lo, bhi), (self.hi, blo), (self.hi, bhi))
        lo = min(down.div(a, b) for a, b in pairs)
        hi = max(up.div(a, b) for a, b in pairs)
        return BoundedReal(lo, hi, bits)

    def __rtruediv__(self, other):
        op = self._operand(other)
        if op is None:
            return NotImplemented
        if self.lo <= 0 <= self.hi:
            raise DomainError("division by an interval containing zero")
        blo, bhi, bbits = op
        bits = min(self.bits, bbits)
        down, up = _ctx(bits)
        pairs = ((blo, self.lo), (blo, self.hi), (bhi, self.lo), (bhi, self.hi))
        lo = min(down.div(a, b) for a, b in pairs)
        hi = max(up.div(a, b) for a, b in pairs)
        return BoundedReal(lo, hi, bits)


# -- elementary functions ---------------------------------------------------


def ln(x: BoundedReal) -> BoundedReal:
    """Enclosure of the natural logarithm; requires ``x > 0``."""
    if x.lo <= 0:
        raise DomainError(f"ln of an interval touching zero or below: [{x.lo}, {x.hi}]")
    down, up = _ctx(x.bits)
    return BoundedReal(down.log(x.lo), up.log(x.hi), x.bits)


def exp(x: BoundedReal) -> BoundedReal:
    """Enclosure of the exponential (monotone endpoint evaluation)."""
    down, up = _ctx(x.bits)
    return BoundedReal(down.exp(x.lo), up.exp(x.hi), x.bits)


def ln_int(n, bits: int) -> BoundedReal:
    """Enclosure of ``ln n`` for an exact positive integer ``n``.

    The integer is consumed exactly; only the logarithm is rounded.
    """
    if n <= 0:
        raise DomainError(f"ln of non-positive integer {n}")
    down, up = _ctx(bits)
    return BoundedReal(down.log(n), up.log(n), bits)


def interval_arith(kind: str, a: BoundedReal, b: BoundedReal) -> BoundedReal:
    """Dispatch one of the four arithmetic operations by name."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def enclose_elementary(kind: str, x: BoundedReal) -> BoundedReal:
    """Dispatch ``ln`` or ``exp`` by name."""
    if kind == "ln":
        return ln(x)
    if kind == "exp":
        return exp(x)
    raise ValueError(f"unknown elementary kind {kind!r}")


# -- comparison -------------------------------------------------------------


def compare_certified(a, b) -> Comparison:
    """Certified comparison of two enclosures (or an enclosure and an exact
    integer/rational).  LT and GT are returned only when the operands are
    provably disjoint; any overlap yields UNDECIDED.
    """
    alo, ahi = (a.lo, a.hi) if isinstance(a, BoundedReal) else (a, a)
    blo, bhi = (b.lo, b.hi) if isinstance(b, BoundedReal) else (b, b)
    if isinstance(alo, Fraction):
        alo = ahi = gmpy2.mpq(alo.numerator, alo.denominator)
    if isinstance(blo, Fraction):
        blo = bhi = gmpy2.mpq(blo.numerator, blo.denominator)
    if ahi < blo:
        return Comparison.LT
    if alo > bhi:
        return Comparison.GT
    return Comparison.UNDECIDED


@dataclass(frozen=True)
class PrecisionPolicy:
    """Escalation schedule: initial_bits, then multiply by growth_factor,
    never exceeding max_bits."""

    initial_bits: int = 128
    max_bits: int = 8192
    growth_factor: int = 2

    def __post_init__(self):
        if self.initial_bits < 2:
            raise ValueError("initial_bits must be positive (>= 2)")
        if self.initial_bits > self.max_bits:
            raise ValueError("initial_bits must not exceed max_bits")
        if self.growth_factor < 2:
            raise ValueError("growth_factor must be at least 2")

    def steps(self) -> Iterator[int]:
        b = self.initial_bits
        while b <= self.max_bits:
            yield b
            b *= self.growth_factor


DEFAULT_POLICY = PrecisionPolicy()


def resolve_comparison(
    compare_at: Callable[[int], Comparison], policy: PrecisionPolicy
) -> tuple[Comparison, int]:
    """Run ``compare_at(bits)`` along the escalation schedule until it
    resolves.  Returns the verdict together with the bits used; the verdict
    is UNDECIDED only if the precision cap was reached.
    """
    bits = policy.initial_bits
    for bits in policy.steps():
        verdict = compare_at(bits)
        if verdict is not Comparison.UNDECIDED:
            return verdict, bits
    return Comparison.UNDECIDED, bits


# -- constants ---------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def pi_enclosure(bits: int) -> BoundedReal:
    down, up = _ctx(bits)
    return BoundedReal(down.const_pi(), up.const_pi(), bits)


@functools.lru_cache(maxsize=None)
def e_enclosure(bits: int) -> BoundedReal:
    down, up = _ctx(bits)
    return BoundedReal(down.exp(gmpy2.mpfr(1)), up.exp(gmpy2.mpfr(1)), bits)


# -- decimal rendering --------------------------------------------------------


def decimal_str(x, bits: int) -> str:
    """Shortest decimal string that parses back to exactly ``x`` at the
    stated precision.  Internal state stays binary; this is I/O only.
    """
    x = gmpy2.mpfr(x, bits)
    if x.is_integer() and abs(x) < 10**40:
        return str(int(x))
    max_digits = int(bits * 0.30103) + 3
    for nd in range(2, max_digits + 1):
        s = format(x, f".{nd}g")
        if gmpy2.mpfr(s, bits) == x:
            return s
    return format(x, f".{max_digits}g")


def endpoints_decimal(v: BoundedReal) -> tuple[str, str]:
    return decimal_str(v.lo, v.bits), decimal_str(v.hi, v.bits)
