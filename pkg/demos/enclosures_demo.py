#!/usr/bin/env python3
"""A tour of certified enclosures.

Every quantity in sigma-lab is a pair of directed-rounded endpoints that
provably contain the exact real value.  Strict inequalities are decided
only when two enclosures are disjoint, so a decision can be trusted at any
precision; raising the precision only narrows what is already true.
"""

from fractions import Fraction

from sigma_lab import (
    BoundedReal,
    Comparison,
    PrecisionPolicy,
    compare_certified,
    endpoints_decimal,
    exp,
    ln,
    ln_factorial,
    pi_enclosure,
    resolve_comparison,
)


def show(label, value):
    lo, hi = endpoints_decimal(value)
    print(f"{label}\n    [{lo},\n     {hi}]  (width {float(value.width):.3e})")


print("== basic enclosures ==")
third = BoundedReal.from_int(1, 128) / 3
show("1/3 at 128 bits", third)
print("    contains the exact rational:", third.contains(Fraction(1, 3)))

show("pi at 128 bits", pi_enclosure(128))
show("ln 2", ln(BoundedReal.from_int(2, 128)))

print()
print("== precision only narrows ==")
for bits in (64, 128, 256):
    e = exp(BoundedReal.from_int(1, bits))
    print(f"   e at {bits:4d} bits: width {float(e.width):.3e}")

print()
print("== rigorous ln(n!) ==")
show("ln(20!)  [exact summation]", ln_factorial(20))
show("ln(10^12!)  [series tail]", ln_factorial(10**12))

print()
print("== certified comparison with escalation ==")
# e^pi versus pi^e: the classic near-miss, decided by disjointness.
def compare_at(bits):
    pi = pi_enclosure(bits)
    e_pi = exp(pi)
    pi_e = exp(ln(pi) * exp(BoundedReal.from_int(1, bits) - 1))
    return compare_certified(pi_e, e_pi)

verdict, bits = resolve_comparison(compare_at, PrecisionPolicy(initial_bits=64))
assert verdict is Comparison.LT
print(f"   pi^e < e^pi certified at {bits} bits")
