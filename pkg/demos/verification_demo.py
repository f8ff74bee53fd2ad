#!/usr/bin/env python3
"""Running the certified inequality audits.

Each check turns a family of claims into disjoint-interval decisions and
reports PASS, FAIL, or UNDECIDED with witnesses.  A FAIL always carries a
certified counter-inequality; UNDECIDED appears only at the precision cap.
"""

from sigma_lab import run_suite

for suite in ("threshold", "cor1", "gn", "lemma1"):
    print(f"== suite: {suite} ==")
    for report in run_suite(suite):
        print(f"   {report.verdict.value}  {report.check_id}")
        for label, value in report.witnesses:
            print(f"      {label}: {value}")
    print()

print("The threshold suite pins decimal crossings to certified enclosures;")
print("cor1 additionally reports that the decimal window printed for")
print("1 - alpha actually brackets alpha itself.  Run the full set with:")
print("   sigma-lab verify --suite all")
