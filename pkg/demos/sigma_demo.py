#!/usr/bin/env python3
"""Computing sigma_n: the largest l with n + l - 1 <= e (n!)^(1/n).

The engine first narrows sigma_n to the integers inside an open bracket
built from two slowly-decaying envelope functions (at most two candidates
once n >= 4), then settles each candidate with a certified logarithmic
comparison.
"""

from sigma_lab import endpoints_decimal, sigma_bracket, sigma_exact, t_value

print("== the threshold quantity T_n = e (n!)^(1/n) ==")
for n in (1, 2, 10, 54, 55):
    lo, hi = endpoints_decimal(t_value(n))
    print(f"   T_{n} in [{lo[:25]}..., {hi[:25]}...]")

print()
print("== the two-candidate bracket ==")
for n in (4, 55, 458, 10**6):
    br = sigma_bracket(n)
    lo, _ = endpoints_decimal(br.lower)
    _, hi = endpoints_decimal(br.upper)
    print(f"   n = {n:>8}: sigma_n inside ({float(br.lower.lo):.4f}, {float(br.upper.hi):.4f})"
          f" -> candidates {list(br.candidates)}")

print()
print("== certified values ==")
for n in (1, 3, 4, 54, 55, 458, 459, 3480):
    cert = sigma_exact(n)
    print(f"   sigma({n}) = {cert.sigma}   [{cert.method}, {cert.bits_used} bits]")

print()
print("== far out: the series path ==")
cert = sigma_exact(10**12)
print(f"   sigma(10^12) = {cert.sigma}   [{cert.method}]")
print("   (T_n - n sits near 14.73 there, so the sequence has grown by")
print("    only 13 steps while n grew by a factor of 10^12.)")
