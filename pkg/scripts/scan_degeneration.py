"""Scan a parametric family over small rationals and watch tau.

A jump away from the declared total Tjurina number marks a degenerate
parameter.  The default grid covers +/- p/q for p, q up to a bound;
--include-excluded lifts the exclusion gate so the documented bad
values can be probed too.
"""

import argparse
import sys
from fractions import Fraction

from syzplane import catalog


def rational_grid(bound):
    seen = set()
    for q in range(1, bound + 1):
        for p in range(1, bound + 1):
            for sign in (1, -1):
                v = Fraction(sign * p, q)
                if v not in seen:
                    seen.add(v)
                    yield v


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("entry", help="parametric catalog entry name")
    ap.add_argument("--bound", type=int, default=3, help="numerator/denominator bound")
    ap.add_argument(
        "--include-excluded",
        action="store_true",
        help="probe documented excluded parameters instead of skipping them",
    )
    args = ap.parse_args(argv)

    entry = catalog.get_entry(args.entry)
    if not entry.parametric:
        ap.error("%s takes no parameter" % entry.name)
    declared = entry.declared_tau
    values = sorted(rational_grid(args.bound))
    results = catalog.scan_parameters(
        entry, values, check_exclusions=not args.include_excluded
    )
    jumps = 0
    for r in results:
        if r.status == "ok":
            note = "" if r.tau == declared else "  <- tau jump"
            jumps += 0 if r.tau == declared else 1
            print("%8s  tau=%d%s" % (r.value, r.tau, note))
        else:
            print("%8s  %s: %s" % (r.value, r.status, r.detail))
    print(
        "%d values scanned, declared tau %d, %d jumps"
        % (len(results), declared, jumps)
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
