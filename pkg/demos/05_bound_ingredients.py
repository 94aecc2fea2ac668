"""The finite inequalities behind the trail-fraction bounds.

The trail fraction of an m-edge graph decays like sqrt(log2(m) / m) up to a
constant, and the two-vertex family shows the rate is tight up to the sqrt-log
factor: its f(G(m)) * sqrt(m) settles between 1.8 and 2.4. This prints the
supporting inequality battery and the scaling table.
"""

import math

from trailfrac import (
    balance_window_probability,
    case2_tail_bound_check,
    family_ratio_csv,
    family_ratio_scan,
    proof_ingredient_summary,
    stirling_bounds,
    theorem_upper_bound,
)

print("headline rate sqrt(log2(m)/m):")
for m in (4, 16, 64, 256, 1024, 4096):
    print(f"  m={m:>5}: {theorem_upper_bound(m):.6f}")

print("\nStirling sandwich around n!:")
for n in (1, 5, 10, 20):
    b = stirling_bounds(n)
    print(f"  n={n:>2}: {b.lower:>24.4f} <= {math.factorial(n):>20} <= {b.upper:>24.4f}")

print("\nbalance-window probability P(X in {j-1, j, j+1}) for X ~ Bin(c, 1/2):")
for c, j in ((2, 1), (4, 2), (10, 5), (10, 0), (64, 32)):
    p = balance_window_probability(c, j)
    cap = 3 * math.comb(c, c // 2) / (1 << c)
    print(f"  c={c:>2} j={j:>2}: {p:.6f} (cap 3*2^-c*C(c,c/2) = {cap:.6f})")

print("\ntail bound (2r^2+2r+1)/2^r <= 4r^2/2^r:")
for r in (2, 3, 10, 20):
    check = case2_tail_bound_check(r)
    print(f"  r={r:>2}: {check.exact_tail_bound:.8f} <= {check.paper_bound:.8f} holds={check.holds}")

print("\nfull inequality battery over the standard ranges:")
for name, ok in proof_ingredient_summary().items():
    print(f"  {name}: {'ok' if ok else 'FAILED'}")

print("\nfamily scaling scan (CSV as emitted by `trailfrac scan`):")
print(family_ratio_csv(family_ratio_scan(6, 40)))
