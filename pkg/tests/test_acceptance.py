"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criterion 9 contains two assertions that cannot hold: QL - 1/2 and QR - 1/2
decay like alpha/ln(2x) and 1/ln(2x), so at x = 2^30 they sit near 0.027 and
0.047, far above the required 10^-3.  Those assertions are kept as stated and
fail; the same proximity certifies cleanly once ln(2x) is around 1150 (see
test_atlas.test_limit_proximity_at_matching_scale).
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import gmpy2
import pytest

from conftest import overlap
from sigma_lab import (
    BoundedReal,
    Comparison,
    FunctionId,
    a_transform,
    alpha,
    central_difference,
    check_robbins,
    compare_certified,
    corollary_gap_check,
    delta,
    enumerate_changepoints,
    evaluate,
    exp,
    g_prime,
    geometric_grid,
    h_prime,
    ln,
    ln_int,
    ln_pi,
    n_a_of,
    sigma_bracket,
    sigma_exact,
    Verdict,
)
from sigma_lab.changepoints import clear_probe_cache

SIGMA_TABLE = {
    1: 2,
    3: 2,
    4: 3,
    54: 3,
    55: 4,
    458: 4,
    459: 5,
    3480: 5,
    3481: 6,
    25867: 6,
    25868: 7,
    191351: 7,
    191352: 8,
}

CHANGE_POINTS = [3, 54, 458, 3480, 25867, 191351]

QUOTIENT_WINDOWS = {
    2: (Fraction("8.48"), Fraction("8.49")),
    3: (Fraction("7.59"), Fraction("7.6")),
    4: (Fraction("7.43"), Fraction("7.44")),
    5: (Fraction("7.39"), Fraction("7.40")),
}


@contextmanager
def announce(number: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number:02d} {title}: FAIL ({time.perf_counter() - start:.1f}s)")
        raise
    print(f"ACCEPTANCE {number:02d} {title}: PASS ({time.perf_counter() - start:.1f}s)")


@pytest.fixture(scope="module")
def records_200k():
    # Cleared probe cache so the measured enumeration does its own searches.
    clear_probe_cache()
    start = time.perf_counter()
    records = enumerate_changepoints(200000)
    return records, time.perf_counter() - start


@pytest.fixture(scope="module")
def sigma_sweep():
    return {n: sigma_exact(n).sigma for n in range(1, 5001)}


def test_criterion_01_sigma_table():
    with announce(1, "sigma table reproduction"):
        start = time.perf_counter()
        got = {n: sigma_exact(n).sigma for n in SIGMA_TABLE}
        elapsed = time.perf_counter() - start
        assert got == SIGMA_TABLE
        assert elapsed < 60


def test_criterion_02_sigma_at_1e12():
    with announce(2, "sigma at 10^12 via series"):
        start = time.perf_counter()
        cert = sigma_exact(10**12)
        elapsed = time.perf_counter() - start
        assert cert.sigma == 15
        assert cert.method == "series"
        assert elapsed < 5


def test_criterion_03_changepoint_enumeration(records_200k):
    with announce(3, "change points through 200000"):
        records, elapsed = records_200k
        print(f"  (enumeration took {elapsed:.1f}s)", end=" ")
        assert [r.n for r in records] == CHANGE_POINTS
        assert elapsed < 300


def test_criterion_04_quotient_brackets(records_200k):
    with announce(4, "quotient enclosures"):
        records, _ = records_200k
        quotients = {r.index: r.quotient for r in records if r.quotient is not None}
        first = quotients[1]
        assert first.lo == first.hi == 18
        for index, (low, high) in QUOTIENT_WINDOWS.items():
            q = quotients[index]
            assert low < q.lo and q.hi < high, f"quotient {index} leaves ({low}, {high})"
        # observed quotient sequence decreases strictly across the range
        ordered = [quotients[i] for i in sorted(quotients)]
        for a, b in zip(ordered, ordered[1:]):
            assert compare_certified(a, b) is Comparison.GT


def test_criterion_05_triple_growth(records_200k):
    with announce(5, "3 n_i <= n_{i+1}"):
        records, _ = records_200k
        results = corollary_gap_check(records)
        assert len(results) == len(CHANGE_POINTS) - 1
        assert all(results)


def test_criterion_06_threshold_certificates():
    with announce(6, "threshold certificates"):
        d_lo = evaluate(FunctionId.D, Fraction("3.92465"))
        d_hi = evaluate(FunctionId.D, Fraction("3.92466"))
        assert compare_certified(d_lo, 1) is Comparison.GT
        assert compare_certified(d_hi, 1) is Comparison.LT

        bits = 128

        def lhs(y: Fraction) -> BoundedReal:
            yv = BoundedReal.from_rational(y, bits)
            ey = exp(yv)
            return evaluate(FunctionId.B0, yv) / ey + evaluate(FunctionId.C0, yv) / (ey * ey)

        rhs = 3 * (ln_pi(bits) - ln_int(3, bits))
        assert compare_certified(lhs(Fraction("6.06520")), rhs) is Comparison.GT
        assert compare_certified(lhs(Fraction("6.06521")), rhs) is Comparison.LT

        half_exp = exp(BoundedReal.from_rational(Fraction("6.06521"), bits)) / 2
        assert compare_certified(half_exp, Fraction("215.30654")) is Comparison.GT
        assert compare_certified(half_exp, Fraction("215.30655")) is Comparison.LT


def test_criterion_07_factorial_sandwich_full_range():
    with announce(7, "two-sided estimate on [1, 10^4]"):
        start = time.perf_counter()
        report = check_robbins(1, 10**4)
        elapsed = time.perf_counter() - start
        assert report.verdict is Verdict.PASS
        assert elapsed < 120


def test_criterion_08_property_suite(records_200k, sigma_sweep):
    with announce(8, "property suite"):
        records, _ = records_200k
        # bracket containment and candidate count
        for n in range(4, 5001):
            br = sigma_bracket(n)
            assert sigma_sweep[n] in br.candidates
            assert len(br.candidates) <= 2
        # monotone unit steps
        for n in range(1, 5000):
            assert sigma_sweep[n + 1] - sigma_sweep[n] in (0, 1)
        # change-point position invariant
        for r in records:
            assert r.sigma_at == r.index + 1
            assert sigma_exact(r.n).sigma == r.sigma_at
            assert sigma_exact(r.n + 1).sigma == r.sigma_at + 1
        # product rule on the integer grid
        for f in (FunctionId.L, FunctionId.p):
            for g in (FunctionId.L, FunctionId.p):
                for x in range(1, 101):
                    xe = BoundedReal.from_int(x, 128)
                    joint = (evaluate(f, xe) * evaluate(g, xe) - 1) * xe
                    split = a_transform(f, xe) * evaluate(g, xe) + a_transform(g, xe)
                    assert overlap(joint, split)
        # the two closed forms of each bracket side
        e_half = float(gmpy2.mpfr(gmpy2.exp(1))) / 2 * (1 + 1e-15)
        for x in geometric_grid(e_half, float(2**20)):
            xe = BoundedReal.from_float(x, 128)
            t = ln(2 * xe)
            assert overlap(t * evaluate(FunctionId.QR, xe), 1 + evaluate(FunctionId.F, xe))
            assert overlap(
                t * evaluate(FunctionId.QL, xe),
                alpha(128) + t * ((xe + alpha(128)) / (2 * xe)),
            )
        # derivative formulas against symmetric difference quotients
        tol = Fraction(1, 10**4)
        for y in range(1, 11):
            for fun, formula in ((FunctionId.G, g_prime), (FunctionId.H, h_prime)):
                fd = central_difference(fun, y)
                dev = (fd - formula(y)) / formula(y)
                assert max(abs(dev.lo), abs(dev.hi)) < tol


def test_criterion_09_limit_proximity_at_2pow30():
    with announce(9, "limit proximity at 2^30"):
        bits = 128
        x = BoundedReal.from_int(2**30, bits)
        tol = gmpy2.mpq(1, 1000)
        a_p = a_transform(FunctionId.p, x)
        deviations = {
            "a_scriptL - a_p - alpha": a_transform(FunctionId.scriptL, x) - a_p - alpha(bits),
            "a_scriptR - a_p - alpha": a_transform(FunctionId.scriptR, x) - a_p - alpha(bits),
            "delta": delta(x),
            "QL - 1/2": evaluate(FunctionId.QL, x) - Fraction(1, 2),
            "QR - 1/2": evaluate(FunctionId.QR, x) - Fraction(1, 2),
            "D - (1 - alpha)": evaluate(FunctionId.D, x) - (1 - alpha(bits)),
        }
        failures = []
        for label, dev in deviations.items():
            inside = (
                compare_certified(dev, tol) is Comparison.LT
                and compare_certified(dev, -tol) is Comparison.GT
            )
            if not inside:
                failures.append(f"|{label}| = {float(max(abs(dev.lo), abs(dev.hi))):.4f}")
        # QL - 1/2 and QR - 1/2 shrink only like 1/ln(2x); at 2^30 they are
        # certifiably above the stated 10^-3, so this assertion fails.
        assert not failures, "outside 10^-3 at x=2^30: " + "; ".join(failures)


def brute_force_n_a(a: Fraction) -> int:
    power = a
    factorial = 1
    l = 1
    while power > factorial:
        l += 1
        power *= a
        factorial *= l
    return l


def test_criterion_10_n_a_cross_check():
    with announce(10, "n_a engine versus brute force"):
        rng = random.Random(20260808)
        for _ in range(100):
            a = Fraction(rng.randint(101, 40000), 100)
            result = n_a_of(a)
            assert result.n_a == brute_force_n_a(a)
            assert result.r in (1, 2, 3)
