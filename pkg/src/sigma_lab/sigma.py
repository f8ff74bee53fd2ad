"""Certified computation of the factorial-growth threshold sequence.

``T_n = e * (n!)^(1/n)`` grows by roughly 1 per step; ``sigma_n`` is the
largest integer ``l`` with ``n + l - 1 <= T_n``.  Everything here is decided
through disjoint-enclosure comparisons of logarithms: the defining test is
equivalent to ``ln(n + l - 1) <= 1 + ln(n!)/n``.  When an enclosure overlap
leaves a comparison open, precision is escalated along the caller's
:class:`PrecisionPolicy`; the engine reports failure rather than guess.

``n_a_of`` answers the dual question: for a base a > 1, the smallest l with
``a^l <= l!``.  When a is supplied as an exact rational the (measure-zero)
tie ``a^l = l!`` is settled by exact integer arithmetic instead of being
left undecidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import gmpy2

from .bounds import (
    DEFAULT_POLICY,
    BoundedReal,
    Comparison,
    DomainError,
    PrecisionExhaustedError,
    PrecisionPolicy,
    compare_certified,
    e_enclosure,
    exp,
    ln,
    ln_int,
)
from .estimates import FunctionId, evaluate
from .logfactorial import N_SWITCH, ln_factorial

__all__ = [
    "SigmaCertificate",
    "CandidateBracket",
    "NaResult",
    "t_value",
    "sigma_bracket",
    "sigma_exact",
    "sigma",
    "n_a_of",
]


@dataclass(frozen=True)
class SigmaCertificate:
    """A certified value of sigma_n: both ``n + sigma - 1 <= T_n`` and
    ``T_n < n + sigma`` were decided with disjoint enclosures."""

    n: int
    sigma: int
    bits_used: int
    method: str  # "exact-sum" or "series"


@dataclass(frozen=True)
class CandidateBracket:
    """The open interval ``(ln(2n) QL(n), ln(2n) QR(n) + 1)`` and the
    integers inside it, widened outward to the enclosure endpoints so the
    true sigma_n can never be excluded by rounding."""

    n: int
    lower: BoundedReal
    upper: BoundedReal
    candidates: tuple[int, ...]


@dataclass(frozen=True)
class NaResult:
    """Smallest integer with a^l <= l!, plus its envelope cross-check data."""

    a: BoundedReal
    n_a: int
    n_env: int
    r: int


def t_value(n: int, policy: PrecisionPolicy | None = None, *, bits: int | None = None) -> BoundedReal:
    """Enclosure of ``T_n = e * (n!)^(1/n)``, via ``exp(1 + ln(n!)/n)``."""
    if n < 1:
        raise DomainError(f"t_value requires n >= 1, got {n}")
    if bits is None:
        bits = (policy or DEFAULT_POLICY).initial_bits
    return exp(ln_factorial(n, bits=bits) / n + 1)


def sigma_bracket(n: int, *, bits: int | None = None) -> CandidateBracket:
    """Two-sided integer bracket for sigma_n, n >= 2.

    For n >= 4 the open interval has length below 2 and therefore holds at
    most two integers; for n in {2, 3} it may hold one more.
    """
    if n < 2:
        raise DomainError(f"sigma_bracket requires n >= 2, got {n}")
    if bits is None:
        bits = DEFAULT_POLICY.initial_bits
    x = BoundedReal.from_int(n, bits)
    t = ln_int(2 * n, bits)
    lower = t * evaluate(FunctionId.QL, x)
    upper = t * evaluate(FunctionId.QR, x) + 1
    first = int(gmpy2.floor(lower.lo)) + 1
    candidates = []
    k = first
    while k < upper.hi:
        candidates.append(k)
        k += 1
    return CandidateBracket(n, lower, upper, tuple(candidates))


def _decision_rhs(n: int, bits: int) -> BoundedReal:
    return ln_factorial(n, bits=bits) / n + 1


def sigma_exact(n: int, policy: PrecisionPolicy | None = None) -> SigmaCertificate:
    """Certified sigma_n.

    Candidates come from :func:`sigma_bracket` (direct scan for n = 1); each
    is tested as ``ln(n + l - 1)`` versus ``1 + ln(n!)/n`` and precision is
    escalated until every needed comparison resolves.
    """
    policy = policy or DEFAULT_POLICY
    if n < 1:
        raise DomainError(f"sigma_exact requires n >= 1, got {n}")
    if n == 1:
        candidates: tuple[int, ...] = (2, 3)
    else:
        candidates = sigma_bracket(n, bits=policy.initial_bits).candidates
    probe = list(candidates) + [candidates[-1] + 1]
    method = "exact-sum" if n <= N_SWITCH else "series"

    verdicts: dict[int, Comparison] = {}
    bits_used = policy.initial_bits
    for bits in policy.steps():
        bits_used = bits
        rhs = _decision_rhs(n, bits)
        open_any = False
        for l in probe:
            if verdicts.get(l) in (Comparison.LT, Comparison.GT):
                continue
            verdicts[l] = compare_certified(ln_int(n + l - 1, bits), rhs)
            if verdicts[l] is Comparison.UNDECIDED:
                open_any = True
        if not open_any:
            break
    unresolved = [l for l in probe if verdicts[l] is Comparison.UNDECIDED]
    if unresolved:
        raise PrecisionExhaustedError(
            f"sigma_{n} undecided at {policy.max_bits} bits",
            n=n,
            unresolved=unresolved,
            candidates=list(candidates),
        )
    passing = [l for l in probe if verdicts[l] is Comparison.LT]
    if not passing or passing[-1] == probe[-1]:
        raise DomainError(
            f"candidate bracket for n={n} violated; decisions were {verdicts}"
        )
    s = passing[-1]
    if verdicts[s + 1] is not Comparison.GT or s < 2:
        raise DomainError(
            f"inconsistent threshold decisions for n={n}: {verdicts}"
        )
    return SigmaCertificate(n, s, bits_used, method)


def sigma(n: int, policy: PrecisionPolicy | None = None) -> int:
    return sigma_exact(n, policy).sigma


# -- smallest l with a^l <= l! ------------------------------------------------


def _as_exact_rational(a):
    if isinstance(a, int):
        return gmpy2.mpq(a)
    if isinstance(a, Fraction):
        return gmpy2.mpq(a.numerator, a.denominator)
    if isinstance(a, type(gmpy2.mpq(0))):
        return a
    if isinstance(a, BoundedReal) and a.is_point:
        return gmpy2.mpq(a.lo)
    return None


def _holds_certified(l: int, a_enc, exact, policy) -> bool:
    """Whether a^l <= l!, certified.  Exact ties fall back to integer
    arithmetic when a was given exactly."""

    def attempt(bits: int) -> Comparison:
        lhs = ln(a_enc(bits)) * l
        return compare_certified(lhs, ln_factorial(l, bits=bits))

    for bits in policy.steps():
        v = attempt(bits)
        if v is Comparison.LT:
            return True
        if v is Comparison.GT:
            return False
    if exact is not None:
        num, den = exact.numerator, exact.denominator
        return num**l <= gmpy2.fac(l) * den**l
    raise PrecisionExhaustedError(
        f"a^{l} versus {l}! undecided at {policy.max_bits} bits", l=l
    )


def n_a_of(a, policy: PrecisionPolicy | None = None) -> NaResult:
    """Certified smallest l with ``a^l <= l!`` for a > 1.

    The search starts from the envelope prediction
    ``n_env - sigma_{n_env} + 1`` (where ``n_env < a e <= n_env + 1``) and
    scans outward, so its correctness never depends on that prediction.
    """
    policy = policy or DEFAULT_POLICY
    exact = _as_exact_rational(a)
    if exact is not None:
        if not exact > 1:
            raise DomainError(f"n_a_of requires a > 1, got {exact}")

        def a_enc(bits: int) -> BoundedReal:
            return BoundedReal.from_rational(exact, bits)

    else:
        if not isinstance(a, BoundedReal):
            raise TypeError("a must be an int, Fraction, mpq, or BoundedReal")
        if not a.lo > 1:
            raise DomainError(f"n_a_of requires a > 1 certified, got lower bound {a.lo}")

        def a_enc(bits: int) -> BoundedReal:
            return a

    # n_env with n_env < a e <= n_env + 1 (a e is irrational for rational a,
    # so the enclosure eventually separates from both neighbours).
    n_env = None
    for bits in policy.steps():
        ae = a_enc(bits) * e_enclosure(bits)
        m = int(gmpy2.floor(ae.lo))
        if ae.lo > m and ae.hi < m + 1:
            n_env = m
            break
    if n_env is None:
        raise PrecisionExhaustedError(
            f"envelope index for a undecided at {policy.max_bits} bits"
        )

    sigma_env = sigma_exact(n_env, policy).sigma
    c = max(n_env - sigma_env + 1, 2)
    if _holds_certified(c, a_enc, exact, policy):
        while c > 2 and _holds_certified(c - 1, a_enc, exact, policy):
            c -= 1
    else:
        cap = 3 * n_env + 64
        while True:
            c += 1
            if c > cap:
                raise DomainError(
                    f"no l <= {cap} satisfies a^l <= l!; certification inconsistent"
                )
            if _holds_certified(c, a_enc, exact, policy):
                break
    return NaResult(a_enc(policy.initial_bits), c, n_env, c - n_env + sigma_env)
