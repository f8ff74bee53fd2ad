#!/usr/bin/env python3
"""Where sigma_n steps: change points, gaps, and quotients.

sigma is nondecreasing with unit steps; n_i marks the index just before
the i-th step.  Each n_i is found by a certified binary search.  The
quotients n_{i+1}/n_i start at 18 and drift down toward e^2 = 7.389...,
visibly decreasing over the enumerated range.
"""

from sigma_lab import (
    corollary_gap_check,
    endpoints_decimal,
    enumerate_changepoints,
    n_a_of,
    quotient_report,
)

MAX_N = 30000

print(f"== change points with n_i <= {MAX_N} ==")
records = enumerate_changepoints(MAX_N)
for r in records:
    line = f"   n_{r.index} = {r.n:>6}  (sigma there = {r.sigma_at})"
    if r.gap is not None:
        line += f"  next after gap {r.gap}"
    print(line)

print()
print("== quotients versus e^2 ==")
for row in quotient_report(records):
    qlo, qhi = endpoints_decimal(row.quotient)
    dlo, dhi = endpoints_decimal(row.distance_to_e_squared)
    print(f"   n_{row.index + 1}/n_{row.index} in [{qlo[:12]}, {qhi[:12]}],"
          f"  minus e^2 in [{dlo[:12]}, {dhi[:12]}]")

print()
print("== each change point at least triples the previous ==")
print("   3 n_i <= n_{i+1} per pair:", corollary_gap_check(records))

print()
print("== the dual question: smallest l with a^l <= l! ==")
for a in (2, 10, 100):
    res = n_a_of(a)
    print(f"   a = {a:>3}: n_a = {res.n_a}  (envelope index {res.n_env}, offset r = {res.r})")
