"""Named certified checks over the package's inequality claims.

Each check evaluates one family of claims with interval enclosures and
returns a :class:`CheckReport` whose verdict is PASS, FAIL, or UNDECIDED.
A FAIL is only ever emitted on a certified counter-inequality (disjoint
enclosures the wrong way around); UNDECIDED only when the precision cap of
the supplied policy was reached.  Re-running at higher precision can
therefore resolve UNDECIDED but never flip PASS and FAIL.

Suites (see :data:`SUITE_NAMES`): robbins, lemma1, cor1, gn, threshold,
f3x, ffff, external, sn, or all of them in order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable

import gmpy2

from .bounds import (
    DEFAULT_POLICY,
    BoundedReal,
    Comparison,
    PrecisionPolicy,
    compare_certified,
    e_enclosure,
    endpoints_decimal,
    exp,
    ln,
    ln_int,
    resolve_comparison,
)
from .changepoints import ChangePointRecord, enumerate_changepoints
from .estimates import (
    FunctionId,
    a_transform,
    alpha,
    central_difference,
    delta,
    evaluate,
    gn_prime,
    h_prime,
    ln_pi,
)
from .logfactorial import ln_factorial

__all__ = [
    "Verdict",
    "CheckReport",
    "check_robbins",
    "check_lemma1",
    "check_cor1_thresholds",
    "check_gn_and_F",
    "check_y_threshold",
    "check_F3x",
    "check_eqffff",
    "check_external_facts",
    "check_sn",
    "run_suite",
    "SUITE_NAMES",
    "geometric_grid",
]


class Verdict(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    params: dict
    verdict: Verdict
    witnesses: list = field(default_factory=list)

    def witness_value(self, label: str):
        for key, value in self.witnesses:
            if key == label:
                return value
        raise KeyError(label)


def _render(value) -> str:
    if isinstance(value, BoundedReal):
        lo, hi = endpoints_decimal(value)
        return f"[{lo}, {hi}]"
    return str(value)


class _Audit:
    """Collects claim outcomes and witnesses for one check."""

    def __init__(self, check_id: str, policy: PrecisionPolicy, **params):
        self.check_id = check_id
        self.policy = policy
        self.params = {k: str(v) for k, v in params.items()}
        self.witnesses: list[tuple[str, str]] = []
        self.failed = False
        self.open = False

    def witness(self, label: str, value) -> None:
        self.witnesses.append((label, _render(value)))

    def claim(self, label: str, compare_at: Callable[[int], Comparison], expect: Comparison) -> bool:
        verdict, _ = resolve_comparison(compare_at, self.policy)
        if verdict is expect:
            return True
        if verdict is Comparison.UNDECIDED:
            self.open = True
            self.witness(label, "UNDECIDED at precision cap")
        else:
            self.failed = True
            self.witness(label, f"certified opposite ({verdict.value})")
        return False

    _DETAIL_CAP = 5

    def claim_each(
        self,
        label: str,
        items: Iterable,
        compare_at: Callable[[object, int], Comparison],
        expect: Comparison,
    ) -> None:
        """One logical claim quantified over points; summarized in a single
        witness plus detail for the first few failures."""
        total = ok = detailed = suppressed = 0
        for item in items:
            total += 1
            verdict, _ = resolve_comparison(lambda bits, it=item: compare_at(it, bits), self.policy)
            if verdict is expect:
                ok += 1
                continue
            if verdict is Comparison.UNDECIDED:
                self.open = True
                note = "UNDECIDED at precision cap"
            else:
                self.failed = True
                note = f"certified opposite ({verdict.value})"
            if detailed < self._DETAIL_CAP:
                detailed += 1
                self.witness(f"{label} @ {item}", note)
            else:
                suppressed += 1
        if suppressed:
            self.witness(label, f"{suppressed} further non-passing points suppressed")
        self.witness(label, f"held at {ok}/{total} points")

    def report(self) -> CheckReport:
        if self.failed:
            verdict = Verdict.FAIL
        elif self.open:
            verdict = Verdict.UNDECIDED
        else:
            verdict = Verdict.PASS
        return CheckReport(self.check_id, self.params, verdict, list(self.witnesses))


# -- grid helpers ---------------------------------------------------------------


def _float_above(v: BoundedReal) -> float:
    f = float(v.hi)
    while f <= v.hi:
        f = math.nextafter(f, math.inf)
    return f


def _e_half_start() -> float:
    return _float_above(e_enclosure(64) / 2)


def _e_squared_half_start() -> float:
    e = e_enclosure(64)
    return _float_above(e * e / 2)


def _e_start() -> float:
    return _float_above(e_enclosure(64))


def geometric_grid(lo: float, hi: float, per_decade: int = 64) -> list[float]:
    """Geometric sample points of [lo, hi], ``per_decade`` per factor of 10."""
    if not (lo > 0 and hi > lo):
        raise ValueError("geometric_grid requires 0 < lo < hi")
    ratio = 10.0 ** (1.0 / per_decade)
    points = [lo]
    x = lo
    while x * ratio < hi:
        x *= ratio
        points.append(x)
    points.append(hi)
    return points


def _pairs(points: list) -> list[tuple]:
    return list(zip(points, points[1:]))


# -- individual checks ------------------------------------------------------------


def _t_over_n(n: int, bits: int) -> BoundedReal:
    """Enclosure of e (n!)^(1/n) / n."""
    return exp(ln_factorial(n, bits=bits) / n + 1 - ln_int(n, bits))


def check_robbins(n_lo: int = 1, n_hi: int = 10**4, policy: PrecisionPolicy | None = None) -> CheckReport:
    """Strict factorial sandwich scriptL(n) < e (n!)^(1/n) / n < scriptR(n)."""
    policy = policy or DEFAULT_POLICY
    audit = _Audit("robbins", policy, n_lo=n_lo, n_hi=n_hi)

    def below(n: int, bits: int) -> Comparison:
        x = BoundedReal.from_int(n, bits)
        return compare_certified(evaluate(FunctionId.scriptL, x), _t_over_n(n, bits))

    def above(n: int, bits: int) -> Comparison:
        x = BoundedReal.from_int(n, bits)
        return compare_certified(_t_over_n(n, bits), evaluate(FunctionId.scriptR, x))

    rng = range(n_lo, n_hi + 1)
    audit.claim_each("scriptL(n) < T_n/n", rng, below, Comparison.LT)
    audit.claim_each("T_n/n < scriptR(n)", rng, above, Comparison.LT)
    audit.witness("T_n/n at n_hi", _t_over_n(n_hi, policy.initial_bits))
    return audit.report()


def check_lemma1(
    grid: list[float] | None = None,
    policy: PrecisionPolicy | None = None,
    *,
    limit_x: int = 2**30,
    tol: Fraction = Fraction(1, 1000),
) -> CheckReport:
    """Ordering, grid monotonicity, and limit proximity of the rescaled
    estimates a_scriptR > a_scriptL > a_p > 0."""
    policy = policy or DEFAULT_POLICY
    audit = _Audit("lemma1", policy, limit_x=limit_x, tol=tol)
    order_points = [2.0**k / 2 for k in range(0, 22)]

    def ordering(x, bits):
        xe = BoundedReal.from_float(x, bits)
        upper = a_transform(FunctionId.scriptR, xe)
        middle = a_transform(FunctionId.scriptL, xe)
        inner = a_transform(FunctionId.p, xe)
        for left, right in ((upper, middle), (middle, inner)):
            c = compare_certified(left, right)
            if c is not Comparison.GT:
                return c if c is Comparison.UNDECIDED else Comparison.LT
        if x > 0.5:
            return compare_certified(inner, 0)
        return Comparison.GT

    audit.claim_each("a_scriptR > a_scriptL > a_p ordering", order_points, ordering, Comparison.GT)
    audit.claim_each(
        "a_p > 0 for x > 1/2",
        [x for x in order_points if x > 0.5],
        lambda x, bits: compare_certified(a_transform(FunctionId.p, BoundedReal.from_float(x, bits)), 0),
        Comparison.GT,
    )
    # At the grid's left end the innermost term degenerates: (2x)^(1/(2x)) = 1
    # at x = 1/2, so a_p(1/2) = 0 exactly and strict positivity starts only
    # beyond that point.
    audit.witness("a_p(1/2)", a_transform(FunctionId.p, BoundedReal.from_float(0.5, policy.initial_bits)))

    pts = grid or geometric_grid(_e_half_start(), float(2**20))

    def decreasing(which):
        def cmp(pair, bits):
            x1, x2 = pair
            v1 = a_transform(which, BoundedReal.from_float(x1, bits)) - a_transform(
                FunctionId.p, BoundedReal.from_float(x1, bits)
            )
            v2 = a_transform(which, BoundedReal.from_float(x2, bits)) - a_transform(
                FunctionId.p, BoundedReal.from_float(x2, bits)
            )
            return compare_certified(v1, v2)

        return cmp

    audit.claim_each("a_scriptL - a_p strictly decreasing", _pairs(pts), decreasing(FunctionId.scriptL), Comparison.GT)
    audit.claim_each("a_scriptR - a_p strictly decreasing", _pairs(pts), decreasing(FunctionId.scriptR), Comparison.GT)

    _claim_within(
        audit,
        f"|a_scriptL - a_p - alpha| < {tol} at x={limit_x}",
        lambda bits: a_transform(FunctionId.scriptL, BoundedReal.from_int(limit_x, bits))
        - a_transform(FunctionId.p, BoundedReal.from_int(limit_x, bits))
        - alpha(bits),
        tol,
    )
    _claim_within(
        audit,
        f"|a_scriptR - a_p - alpha| < {tol} at x={limit_x}",
        lambda bits: a_transform(FunctionId.scriptR, BoundedReal.from_int(limit_x, bits))
        - a_transform(FunctionId.p, BoundedReal.from_int(limit_x, bits))
        - alpha(bits),
        tol,
    )
    _claim_within(
        audit,
        f"|delta| < {tol} at x={limit_x}",
        lambda bits: delta(BoundedReal.from_int(limit_x, bits)),
        tol,
    )
    audit.witness("delta at limit point", delta(BoundedReal.from_int(limit_x, policy.initial_bits)))
    return audit.report()


def _claim_within(audit: _Audit, label: str, make_value: Callable[[int], BoundedReal], tol: Fraction) -> None:
    q = gmpy2.mpq(tol.numerator, tol.denominator)
    audit.claim(label + " (upper)", lambda bits: compare_certified(make_value(bits), q), Comparison.LT)
    audit.claim(label + " (lower)", lambda bits: compare_certified(make_value(bits), -q), Comparison.GT)


def check_cor1_thresholds(policy: PrecisionPolicy | None = None) -> CheckReport:
    """Crossing of D through 1 near 3.92465/3.92466, monotonicity of
    QL, QR, D, and spot checks D(x) < 1 beyond the crossing."""
    policy = policy or DEFAULT_POLICY
    audit = _Audit("cor1", policy)
    lo_pt = Fraction("3.92465")
    hi_pt = Fraction("3.92466")

    audit.claim(
        "D(3.92465) > 1",
        lambda bits: compare_certified(evaluate(FunctionId.D, lo_pt, bits=bits), 1),
        Comparison.GT,
    )
    audit.claim(
        "D(3.92466) < 1",
        lambda bits: compare_certified(evaluate(FunctionId.D, hi_pt, bits=bits), 1),
        Comparison.LT,
    )
    audit.claim(
        "3.92466 > e^2/2",
        lambda bits: compare_certified(
            BoundedReal.from_rational(hi_pt, bits), exp(BoundedReal.from_int(2, bits)) / 2
        ),
        Comparison.GT,
    )
    audit.witness("D(3.92465)", evaluate(FunctionId.D, lo_pt))
    audit.witness("D(3.92466)", evaluate(FunctionId.D, hi_pt))

    def decreasing(fun):
        def cmp(pair, bits):
            x1, x2 = pair
            return compare_certified(
                evaluate(fun, BoundedReal.from_float(x1, bits)),
                evaluate(fun, BoundedReal.from_float(x2, bits)),
            )

        return cmp

    d_grid = geometric_grid(_e_squared_half_start(), float(2**20))
    q_grid = geometric_grid(_e_half_start(), float(2**20))
    audit.claim_each("D strictly decreasing", _pairs(d_grid), decreasing(FunctionId.D), Comparison.GT)
    audit.claim_each("QL strictly decreasing", _pairs(q_grid), decreasing(FunctionId.QL), Comparison.GT)
    audit.claim_each("QR strictly decreasing", _pairs(q_grid), decreasing(FunctionId.QR), Comparison.GT)

    audit.claim_each(
        "D(x) < 1",
        [4, 10, 100, 10**6],
        lambda x, bits: compare_certified(evaluate(FunctionId.D, x, bits=bits), 1),
        Comparison.LT,
    )
    audit.claim_each(
        "D(x) + 1 < 2",
        [4, 10, 100, 10**6],
        lambda x, bits: compare_certified(evaluate(FunctionId.D, x, bits=bits) + 1, 2),
        Comparison.LT,
    )

    # The decimal window 0.57236..0.57237 brackets alpha itself; 1 - alpha
    # sits near 0.4276, so the interval length D(x) + 1 tends to 1.4276...,
    # not 1.5723....  Certified both ways and reported.
    audit.claim(
        "alpha > 0.57236",
        lambda bits: compare_certified(alpha(bits), gmpy2.mpq(57236, 10**5)),
        Comparison.GT,
    )
    audit.claim(
        "alpha < 0.57237",
        lambda bits: compare_certified(alpha(bits), gmpy2.mpq(57237, 10**5)),
        Comparison.LT,
    )
    one_minus = 1 - alpha(policy.initial_bits)
    audit.witness("1 - alpha", one_minus)
    inside = (
        compare_certified(one_minus, gmpy2.mpq(57236, 10**5)) is Comparison.GT
        and compare_certified(one_minus, gmpy2.mpq(57237, 10**5)) is Comparison.LT
    )
    audit.witness("1 - alpha within (0.57236, 0.57237)", str(inside))
    return audit.report()


def check_gn_and_F(policy: PrecisionPolicy | None = None) -> CheckReport:
    """Sign change of GN' inside the stated bracket, positivity of GN at the
    bracket's right end, and strict growth of F on the certified domain."""
    policy = policy or DEFAULT_POLICY
    audit = _Audit("gn", policy)
    left = Fraction("1.67834")
    right = Fraction("1.67845")

    audit.claim(
        "GN'(1.67834) < 0",
        lambda bits: compare_certified(gn_prime(left, bits=bits), 0),
        Comparison.LT,
    )
    audit.claim(
        "GN'(1.67845) > 0",
        lambda bits: compare_certified(gn_prime(right, bits=bits), 0),
        Comparison.GT,
    )
    audit.claim(
        "GN(1.67845) > 0",
        lambda bits: compare_certified(evaluate(FunctionId.GN, right, bits=bits), 0),
        Comparison.GT,
    )
    audit.witness("GN(1.67845)", evaluate(FunctionId.GN, right))

    f_grid = geometric_grid(2.6785, float(2**20))
    audit.claim_each(
        "F strictly increasing",
        _pairs(f_grid),
        lambda pair, bits: compare_certified(
            evaluate(FunctionId.F, BoundedReal.from_float(pair[1], bits)),
            evaluate(FunctionId.F, BoundedReal.from_float(pair[0], bits)),
        ),
        Comparison.GT,
    )

    # Informational: how well the H derivative formula matches a symmetric
    # difference quotient, against the variant that drops the ln(pi) factor.
    bits = policy.initial_bits
    worst_true = worst_variant = 0.0
    for y in range(1, 11):
        fd = central_difference(FunctionId.H, y, bits=bits)
        formula = h_prime(y, bits=bits)
        ey = exp(BoundedReal.from_int(y, bits))
        variant = (ey - y + 1) / (2 * ey)
        worst_true = max(worst_true, float(abs_hi((fd - formula) / formula)))
        worst_variant = max(worst_variant, float(abs_hi((fd - variant) / variant)))
    audit.witness("H' formula max rel deviation from finite difference", f"{worst_true:.3e}")
    audit.witness(
        "H' variant without ln(pi) factor, max rel deviation", f"{worst_variant:.3e}"
    )
    return audit.report()


def abs_hi(v: BoundedReal):
    """Upper bound of |v| as an mpfr."""
    return max(abs(v.lo), abs(v.hi))


def check_y_threshold(policy: PrecisionPolicy | None = None) -> CheckReport:
    """The decay inequality B0(y)/e^y + C0(y)/e^(2y) < 3 (ln pi - ln 3)
    fails at y = 6.06520 and holds at y = 6.06521; and e^6.06521 / 2 lies in
    (215.30654, 215.30655)."""
    policy = policy or DEFAULT_POLICY
    audit = _Audit("threshold", policy)
    y_fail = Fraction("6.06520")
    y_hold = Fraction("6.06521")

    def lhs(y: Fraction, bits: int) -> BoundedReal:
        yv = BoundedReal.from_rational(y, bits)
        ey = exp(yv)
        return evaluate(FunctionId.B0, yv) / ey + evaluate(FunctionId.C0, yv) / (ey * ey)

    def rhs(bits: int) -> BoundedReal:
        return 3 * (ln_pi(bits) - ln_int(3, bits))

    audit.claim(
        "inequality fails at y=6.06520",
        lambda bits: compare_certified(lhs(y_fail, bits), rhs(bits)),
        Comparison.GT,
    )
    audit.claim(
        "inequality holds at y=6.06521",
        lambda bits: compare_certified(lhs(y_hold, bits), rhs(bits)),
        Comparison.LT,
    )
    audit.witness("lhs(6.06520)", lhs(y_fail, policy.initial_bits))
    audit.witness("lhs(6.06521)", lhs(y_hold, policy.initial_bits))
    audit.witness("rhs", rhs(policy.initial_bits))

    half_exp = lambda bits: exp(BoundedReal.from_rational(y_hold, bits)) / 2
    audit.claim(
        "e^6.06521/2 > 215.30654",
        lambda bits: compare_certified(half_exp(bits), gmpy2.mpq(21530654, 10**5)),
        Comparison.GT,
    )
    audit.claim(
        "e^6.06521/2 < 215.30655",
        lambda bits: compare_certified(half_exp(bits), gmpy2.mpq(21530655, 10**5)),
        Comparison.LT,
    )
    audit.witness("e^6.06521/2", half_exp(policy.initial_bits))
    return audit.report()


def check_F3x(grid: list | None = None, policy: PrecisionPolicy | None = None) -> CheckReport:
    """F(3x) < ln(2x) QL(x) at every point of a grid of the stated range."""
    policy = policy or DEFAULT_POLICY
    if grid is None:
        grid = [Fraction("215.30655")] + geometric_grid(216.0, float(2**20)) + [10**6]
    audit = _Audit("f3x", policy, points=len(grid))

    def cmp(x, bits):
        xe = BoundedReal.exact(x, bits)
        lhs = evaluate(FunctionId.F, 3 * xe)
        rhs = ln(2 * xe) * evaluate(FunctionId.QL, xe)
        return compare_certified(lhs, rhs)

    audit.claim_each("F(3x) < ln(2x) QL(x)", grid, cmp, Comparison.LT)
    return audit.report()


def _max_enclosure(a: BoundedReal, b: BoundedReal) -> BoundedReal:
    return BoundedReal(max(a.lo, b.lo), max(a.hi, b.hi), min(a.bits, b.bits))


def check_eqffff(records: list[ChangePointRecord], policy: PrecisionPolicy | None = None) -> CheckReport:
    """Consecutive-change-point spacing of a_scriptL.

    The verdict is carried by the bound that actually follows from the
    two-sided sigma estimates: -d(i) < a_scriptL(n_{i+1}) - a_scriptL(n_i)
    < 2 + d(i) with d(i) = max(delta(n_i), delta(n_{i+1})).  The narrower
    unit-centred window (1 - d, 1 + d) is evaluated and reported as data:
    the observed differences approach 1 but their distance from it is of
    the order of the sigma decision gaps, far above delta, so that window
    generally fails.
    """
    policy = policy or DEFAULT_POLICY
    audit = _Audit("ffff", policy, pairs=max(len(records) - 1, 0))
    if len(records) < 2:
        audit.witness("pairs", "none (need at least two records)")
        return audit.report()

    for a, b in zip(records, records[1:]):
        def diff_at(bits, n1=a.n, n2=b.n):
            return a_transform(FunctionId.scriptL, BoundedReal.from_int(n2, bits)) - a_transform(
                FunctionId.scriptL, BoundedReal.from_int(n1, bits)
            )

        def d_at(bits, n1=a.n, n2=b.n):
            return _max_enclosure(
                delta(BoundedReal.from_int(n1, bits)), delta(BoundedReal.from_int(n2, bits))
            )

        label = f"pair ({a.n}, {b.n})"
        audit.claim(
            label + ": diff > -d",
            lambda bits: compare_certified(diff_at(bits), -d_at(bits)),
            Comparison.GT,
        )
        audit.claim(
            label + ": diff < 2 + d",
            lambda bits: compare_certified(diff_at(bits), 2 + d_at(bits)),
            Comparison.LT,
        )
        bits = policy.initial_bits
        diff = diff_at(bits)
        d = d_at(bits)
        inside_low = compare_certified(diff, 1 - d)
        inside_high = compare_certified(diff, 1 + d)
        within = inside_low is Comparison.GT and inside_high is Comparison.LT
        audit.witness(label + " diff", diff)
        audit.witness(label + " d(i)", d)
        audit.witness(label + " within unit window (1-d, 1+d)", str(within))
    return audit.report()


def check_external_facts(grid: list | None = None, policy: PrecisionPolicy | None = None) -> CheckReport:
    """Spot checks of the imported comparison facts between the named
    functions and their rational/logarithmic envelopes."""
    policy = policy or DEFAULT_POLICY
    pts = grid or [_e_half_start(), 2.0, 10.0, 1000.0]
    audit = _Audit("external", policy, points=len(pts))

    def r_bound(x, bits):
        xe = BoundedReal.exact(x, bits)
        return compare_certified(evaluate(FunctionId.R, xe), 1 + Fraction(1) / Fraction(x))

    def p_upper(x, bits):
        xe = BoundedReal.exact(x, bits)
        t = ln(2 * xe)
        return compare_certified(evaluate(FunctionId.p, xe), (2 * xe) / (2 * xe - t))

    def p_lower(x, bits):
        xe = BoundedReal.exact(x, bits)
        t = ln(2 * xe)
        return compare_certified(evaluate(FunctionId.p, xe), 1 + t / (2 * xe))

    def l_bound(x, bits):
        xe = BoundedReal.exact(x, bits)
        return compare_certified(evaluate(FunctionId.L, xe), 1 + alpha(bits) / xe)

    audit.claim_each("R(x) < 1 + 1/x", pts, r_bound, Comparison.LT)
    audit.claim_each("P(2x) < 2x/(2x - ln 2x)", pts, p_upper, Comparison.LT)
    audit.claim_each("P(2x) > 1 + ln(2x)/(2x)", pts, p_lower, Comparison.GT)
    audit.claim_each("L(x) > 1 + alpha/x", pts, l_bound, Comparison.GT)

    p_grid = geometric_grid(_e_start(), float(2**20))
    audit.claim_each(
        "P strictly decreasing on [e, 2^20]",
        _pairs(p_grid),
        lambda pair, bits: compare_certified(
            evaluate(FunctionId.P, BoundedReal.from_float(pair[0], bits)),
            evaluate(FunctionId.P, BoundedReal.from_float(pair[1], bits)),
        ),
        Comparison.GT,
    )
    return audit.report()


def check_sn(n_lo: int = 1, n_hi: int = 1000, policy: PrecisionPolicy | None = None) -> CheckReport:
    """Successive-difference data: S_n = T_{n+1} - T_n written as
    1 + a(n)/n.  Reports the drift of a(n) toward 1/2 and whether the
    hypothesis S_n < 1 + 1/(2n) held at every tested n.  Data only; nothing
    here is asserted as a theorem."""
    policy = policy or DEFAULT_POLICY
    audit = _Audit("sn", policy, n_lo=n_lo, n_hi=n_hi)
    if n_hi < n_lo:
        audit.witness("range", "empty")
        return audit.report()
    bits = policy.initial_bits

    def t_at(n: int, b: int) -> BoundedReal:
        return exp(ln_factorial(n, bits=b) / n + 1)

    held = violated = undecided = 0
    first_violation = None
    a_first = a_last = None
    for n in range(n_lo, n_hi + 1):
        s_n = t_at(n + 1, bits) - t_at(n, bits)
        a_n = (s_n - 1) * n
        if n == n_lo:
            a_first = a_n
        a_last = a_n

        def hyp(b: int, n=n) -> Comparison:
            s = t_at(n + 1, b) - t_at(n, b)
            return compare_certified(s, 1 + gmpy2.mpq(1, 2 * n))

        verdict, _ = resolve_comparison(hyp, policy)
        if verdict is Comparison.LT:
            held += 1
        elif verdict is Comparison.GT:
            violated += 1
            if first_violation is None:
                first_violation = n
        else:
            undecided += 1
    audit.witness(f"a({n_lo})", a_first)
    audit.witness(f"a({n_hi})", a_last)
    audit.witness(f"a({n_hi}) - 1/2", a_last - Fraction(1, 2))
    audit.witness("S_n < 1 + 1/(2n) held", f"{held}/{n_hi - n_lo + 1}")
    if first_violation is not None:
        audit.witness("first violation at n", str(first_violation))
    if undecided:
        audit.witness("undecided hypothesis comparisons", str(undecided))
    return audit.report()


SUITE_NAMES = (
    "all",
    "robbins",
    "lemma1",
    "cor1",
    "gn",
    "threshold",
    "f3x",
    "ffff",
    "external",
    "sn",
)


def run_suite(
    name: str,
    policy: PrecisionPolicy | None = None,
    *,
    max_n: int | None = None,
    records: list[ChangePointRecord] | None = None,
) -> list[CheckReport]:
    """Run one named suite (or all of them) with CLI-friendly default sizes."""
    policy = policy or DEFAULT_POLICY
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")

    def ffff_records():
        if records is not None:
            return records
        return enumerate_changepoints(max_n or 3480, policy)

    runners = {
        "robbins": lambda: check_robbins(1, max_n or 2000, policy),
        "lemma1": lambda: check_lemma1(policy=policy),
        "cor1": lambda: check_cor1_thresholds(policy),
        "gn": lambda: check_gn_and_F(policy),
        "threshold": lambda: check_y_threshold(policy),
        "f3x": lambda: check_F3x(policy=policy),
        "ffff": lambda: check_eqffff(ffff_records(), policy),
        "external": lambda: check_external_facts(policy=policy),
        "sn": lambda: check_sn(1, max_n or 1000, policy),
    }
    if name == "all":
        return [runners[key]() for key in SUITE_NAMES[1:]]
    return [runners[name]()]
