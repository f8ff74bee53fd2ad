"""Certified evaluation of the growth-estimate functions.

The certified comparisons throughout the package reduce to a small family
of closed forms, all evaluated here on enclosures:

    L(x)  = pi^(1/(2x)) * e^(1/((12x+1)x))       x > 0
    R(x)  = pi^(1/(2x)) * e^(1/(12 x^2))         x > 0
    P(x)  = x^(1/x)                              x > 0
    T(x)  = x P(x)                               x > 0
    p(x)  = P(2x)                                x > 0
    scriptL(x) = L(x) P(2x),  scriptR(x) = R(x) P(2x)
    QL(x) = alpha/ln(2x) + (1 + alpha/x)/2       x > 1/2
    QR(x) = (2/ln(2x) + 1) * x/(2x - ln(2x))     x > 1/2
    D(x)  = ln(2x) QR(x) - ln(2x) QL(x)          x > 1/2
    F(x)  = (1+x) ln(2x) / (2x - ln(2x))         x > 1/2
    G(y)  = (1 + e^y/2) * y/(e^y - y)            y >= 0
    H(y)  = alpha (1 + y/e^y) + y/2              y >= 0
    GN(y) = e^y - (y^2 + 2y - 2)                 y >= 0
    B0(y) = y^2 + (2 + ln pi) y + ln pi (2 + ln pi)
    C0(y) = y (y + ln pi) ln pi

with ``alpha = ln(pi)/2``.  The substitution y = ln(2x) links the two
variable conventions: F(x) = G(ln 2x) and ln(2x) QL(x) = H(ln 2x).

The rescaling ``a_F(x) = (F(x) - 1) x`` turns functions converging to 1
into bounded quantities; :func:`a_transform` applies it to any evaluable
tag.

Functions whose stated interesting range starts at e/2 (QL, QR, D) are
accepted on their full mathematical domain x > 1/2, since the boundary
e/2 is irrational and an honest enclosure of it necessarily dips below.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import gmpy2

from .bounds import (
    DEFAULT_POLICY,
    BoundedReal,
    DomainError,
    exp,
    ln,
    pi_enclosure,
)

__all__ = [
    "FunctionId",
    "ShiftParams",
    "alpha",
    "ln_pi",
    "evaluate",
    "a_transform",
    "delta",
    "delta_product_form",
    "eval_shifted",
    "g_prime",
    "h_prime",
    "gn_prime",
    "central_difference",
]


class FunctionId(Enum):
    """Tags for the evaluable closed forms; each maps to one definition."""

    L = "L"
    R = "R"
    P = "P"
    T = "T"
    p = "p"
    scriptL = "scriptL"
    scriptR = "scriptR"
    QL = "QL"
    QR = "QR"
    D = "D"
    F = "F"
    G = "G"
    H = "H"
    GN = "GN"
    B0 = "B0"
    C0 = "C0"


@functools.lru_cache(maxsize=None)
def ln_pi(bits: int) -> BoundedReal:
    return ln(pi_enclosure(bits))


@functools.lru_cache(maxsize=None)
def alpha(bits: int) -> BoundedReal:
    """Enclosure of ln(pi)/2, the shared limit of the rescaled estimates."""
    return ln_pi(bits) / 2


def _fn_L(x: BoundedReal) -> BoundedReal:
    b = x.bits
    return exp(ln_pi(b) / (2 * x) + 1 / ((12 * x + 1) * x))


def _fn_R(x: BoundedReal) -> BoundedReal:
    b = x.bits
    return exp(ln_pi(b) / (2 * x) + 1 / ((12 * x) * x))


def _fn_P(x: BoundedReal) -> BoundedReal:
    return exp(ln(x) / x)


def _fn_T(x: BoundedReal) -> BoundedReal:
    return x * _fn_P(x)


def _fn_p(x: BoundedReal) -> BoundedReal:
    return _fn_P(2 * x)


def _fn_scriptL(x: BoundedReal) -> BoundedReal:
    return _fn_L(x) * _fn_p(x)


def _fn_scriptR(x: BoundedReal) -> BoundedReal:
    return _fn_R(x) * _fn_p(x)


def _fn_QL(x: BoundedReal) -> BoundedReal:
    a = alpha(x.bits)
    return a / ln(2 * x) + (1 + a / x) / 2


def _fn_QR(x: BoundedReal) -> BoundedReal:
    t = ln(2 * x)
    return (2 / t + 1) * (x / (2 * x - t))


def _fn_D(x: BoundedReal) -> BoundedReal:
    t = ln(2 * x)
    return t * _fn_QR(x) - t * _fn_QL(x)


def _fn_F(x: BoundedReal) -> BoundedReal:
    t = ln(2 * x)
    return (1 + x) * t / (2 * x - t)


def _fn_G(y: BoundedReal) -> BoundedReal:
    ey = exp(y)
    return (1 + ey / 2) * (y / (ey - y))


def _fn_H(y: BoundedReal) -> BoundedReal:
    return alpha(y.bits) * (1 + y / exp(y)) + y / 2


def _fn_GN(y: BoundedReal) -> BoundedReal:
    return exp(y) - (y * y + 2 * y - 2)


def _fn_B0(y: BoundedReal) -> BoundedReal:
    lp = ln_pi(y.bits)
    return y * y + (2 + lp) * y + lp * (2 + lp)


def _fn_C0(y: BoundedReal) -> BoundedReal:
    lp = ln_pi(y.bits)
    return y * (y + lp) * lp


_DISPATCH = {
    FunctionId.L: _fn_L,
    FunctionId.R: _fn_R,
    FunctionId.P: _fn_P,
    FunctionId.T: _fn_T,
    FunctionId.p: _fn_p,
    FunctionId.scriptL: _fn_scriptL,
    FunctionId.scriptR: _fn_scriptR,
    FunctionId.QL: _fn_QL,
    FunctionId.QR: _fn_QR,
    FunctionId.D: _fn_D,
    FunctionId.F: _fn_F,
    FunctionId.G: _fn_G,
    FunctionId.H: _fn_H,
    FunctionId.GN: _fn_GN,
    FunctionId.B0: _fn_B0,
    FunctionId.C0: _fn_C0,
}

_NEEDS_POSITIVE = {
    FunctionId.L,
    FunctionId.R,
    FunctionId.P,
    FunctionId.T,
    FunctionId.p,
    FunctionId.scriptL,
    FunctionId.scriptR,
}
_NEEDS_ABOVE_HALF = {FunctionId.QL, FunctionId.QR, FunctionId.D, FunctionId.F}
_NEEDS_NONNEGATIVE = {FunctionId.G, FunctionId.H, FunctionId.GN, FunctionId.B0, FunctionId.C0}


def _coerce(x, bits: int | None) -> BoundedReal:
    if isinstance(x, BoundedReal):
        return x
    return BoundedReal.exact(x, bits or DEFAULT_POLICY.initial_bits)


def evaluate(fun: FunctionId, x, *, bits: int | None = None) -> BoundedReal:
    """Enclosure of ``fun`` at ``x`` (a BoundedReal, or an exact number)."""
    x = _coerce(x, bits)
    if fun in _NEEDS_POSITIVE and not x.lo > 0:
        raise DomainError(f"{fun.value} requires x > 0, got lower bound {x.lo}")
    if fun in _NEEDS_ABOVE_HALF and not x.lo > gmpy2.mpq(1, 2):
        raise DomainError(f"{fun.value} requires x > 1/2, got lower bound {x.lo}")
    if fun in _NEEDS_NONNEGATIVE and not x.lo >= 0:
        raise DomainError(f"{fun.value} requires x >= 0, got lower bound {x.lo}")
    return _DISPATCH[fun](x)


def a_transform(fun: FunctionId, x, *, bits: int | None = None) -> BoundedReal:
    """Rescaled deviation from 1: ``(fun(x) - 1) * x``."""
    x = _coerce(x, bits)
    return (evaluate(fun, x) - 1) * x


def delta(x, *, bits: int | None = None) -> BoundedReal:
    """Spread between the rescaled upper and lower estimates."""
    x = _coerce(x, bits)
    return a_transform(FunctionId.scriptR, x) - a_transform(FunctionId.scriptL, x)


def delta_product_form(x, *, bits: int | None = None) -> BoundedReal:
    """Same spread computed as ``(a_R(x) - a_L(x)) P(2x)``; the two routes
    must produce overlapping enclosures."""
    x = _coerce(x, bits)
    diff = a_transform(FunctionId.R, x) - a_transform(FunctionId.L, x)
    return diff * evaluate(FunctionId.p, x)


@dataclass(frozen=True)
class ShiftParams:
    """Shift z = y + a with its exponential factor A = e^a."""

    a_shift: BoundedReal
    A: BoundedReal

    @classmethod
    def from_shift(cls, a_shift: BoundedReal) -> "ShiftParams":
        return cls(a_shift, exp(a_shift))


def eval_shifted(shift: ShiftParams, y, *, bits: int | None = None) -> tuple[BoundedReal, BoundedReal]:
    """The two upward-opening quadratics controlling G(y+a) - H(y):

    B(a, y) = y^2 + (2 + a + ln(pi) (1 - A)) y + a (2 + ln pi)
    C(a, y) = y (y + a) ln(pi)
    """
    y = _coerce(y, bits)
    if not y.lo >= 0:
        raise DomainError(f"shifted quadratics require y >= 0, got lower bound {y.lo}")
    if not shift.a_shift.lo >= 0:
        raise DomainError("shift must be nonnegative")
    lp = ln_pi(y.bits)
    a = shift.a_shift
    b_val = y * y + (2 + a + lp * (1 - shift.A)) * y + a * (2 + lp)
    c_val = y * (y + a) * lp
    return b_val, c_val


# -- derivatives used by the monotonicity certificates ------------------------


def g_prime(y, *, bits: int | None = None) -> BoundedReal:
    """Derivative of G: ``e^y GN(y) / (2 (e^y - y)^2)``."""
    y = _coerce(y, bits)
    ey = exp(y)
    den = ey - y
    return ey * _fn_GN(y) / (2 * (den * den))


def h_prime(y, *, bits: int | None = None) -> BoundedReal:
    """Derivative of H: ``(e^y + ln(pi)(1 - y)) / (2 e^y)``."""
    y = _coerce(y, bits)
    ey = exp(y)
    return (ey + ln_pi(y.bits) * (1 - y)) / (2 * ey)


def gn_prime(y, *, bits: int | None = None) -> BoundedReal:
    """Derivative of GN: ``e^y - 2y - 2``."""
    y = _coerce(y, bits)
    return exp(y) - (2 * y + 2)


def central_difference(fun: FunctionId, y, h: Fraction = Fraction(1, 10**6), *, bits: int | None = None) -> BoundedReal:
    """Symmetric difference quotient of an evaluable tag at an exact point."""
    y = Fraction(y)
    b = bits or DEFAULT_POLICY.initial_bits
    upper = evaluate(fun, BoundedReal.from_rational(y + h, b))
    lower = evaluate(fun, BoundedReal.from_rational(y - h, b))
    return (upper - lower) / (2 * h)
