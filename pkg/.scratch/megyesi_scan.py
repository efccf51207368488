"""Scan megyesi family for tau jumps over small rationals."""
import sys, time
from fractions import Fraction

sys.path.insert(0, "/root/pkg/src")

from syzplane.poly import parse
from syzplane.engine import CurveAnalysis

TEMPLATE = "(x^2+y^2-z^2)*(x^2+@^2*y^2-@^2*z^2)*(x^2+y^2-@^2*z^2)*(@^2*x^2+y^2-@^2*z^2)"

vals = []
for p in range(1, 6):
    for q in range(1, 6):
        v = Fraction(p, q)
        if v not in vals:
            vals.append(v)
vals = sorted(set(vals))
vals = [v for v in vals if v not in (Fraction(1),)]
vals += [-v for v in vals]

for v in vals:
    text = TEMPLATE.replace("@", "(%d/%d)" % (v.numerator, v.denominator))
    t0 = time.time()
    try:
        ca = CurveAnalysis(parse(text))
        tau = ca.tjurina()
        note = "" if tau == 34 else "  <-- JUMP"
        print("r=%8s  tau=%d%s  (%.1fs)" % (v, tau, note, time.time() - t0))
    except Exception as exc:
        print("r=%8s  ERROR %s: %s" % (v, type(exc).__name__, exc))
