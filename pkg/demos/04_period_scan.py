"""
Extremality periods and the impossible pairs
============================================

For R with coefficients in F_p, the curve meets the Weil bound over
some least extension F_{p^mu}; the pair (mu, delta) records that degree
and whether the first contact is maximal (delta = -1) or minimal
(delta = +1).  Certain pairs provably never occur; the scan confirms
their absence by brute enumeration, cross-checked per curve.

The command-line equivalent:

    aswcurves period "p=2; R=1,0" --cap 16
"""

from aswcurves.curves import (
    CurveSpec,
    forbidden_pairs,
    impossibility_scan,
    period_parity,
)
from aswcurves.gf2field import make_field

F2 = make_field(1)

# Frobenius-power heads x^(2^m) meet the bound first at degree 2m,
# always from above.
for m in (1, 2, 3, 4):
    spec = CurveSpec(F2, 1, (0,) * m + (1,))
    pp = period_parity(spec, budget=1 << 20)
    print(f"R = x^{2 ** m:<3d} over F_2: (mu, delta) = ({pp.mu}, {pp.delta})")

# Mixed heads can first meet the bound from below instead.
pp = period_parity(CurveSpec(F2, 1, (0, 1, 0, 1)), budget=1 << 20)
print(f"R = x^2 + x^8 over F_2: (mu, delta) = ({pp.mu}, {pp.delta})")
pp = period_parity(CurveSpec(make_field(2, None, 2), 2, (1, 1)), budget=1 << 20)
print(f"R = x + x^4 over F_4: (mu, delta) = ({pp.mu}, {pp.delta})")

# Scan every R over F_2 with p-degree <= 2 and decide each period by
# counting; the pairs below are provably unattainable and the scan
# verifies that none of them shows up.
scan = impossibility_scan(p_log=1, e_max=2, budget=1 << 20)
print(f"\nscan over F_2, e <= 2, degrees up to {scan.n_max}:")
for coeffs, pp in scan.periods:
    label = f"({pp.mu}, {pp.delta})" if pp else f"none up to {scan.n_max}"
    print(f"  R coefficients {coeffs}: {label}")
print(f"observed pairs:  {sorted(scan.observed)}")
small_forbidden = sorted(p for p in forbidden_pairs(1, scan.n_max) if p[0] <= 6)
print(f"forbidden pairs (mu <= 6): {small_forbidden}")
print(f"excludes (2, +1): {scan.excludes(2, 1)}")
print(f"excludes (4, +1): {scan.excludes(4, 1)}")
