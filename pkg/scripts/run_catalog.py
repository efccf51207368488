"""Run the curve catalog and report each entry's computed profile.

Every parametric family is sampled at a default admissible parameter
unless one is given; fixed curves run as they are.  Exit status is
nonzero when any entry fails its declared expectations.
"""

import argparse
import json
import sys
from fractions import Fraction

from syzplane import catalog

DEFAULT_PARAMS = {
    "three_conics_pencil": Fraction(2),
    "megyesi_family": Fraction(2),
    "t_family": Fraction(1),
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("entry", nargs="?", help="run a single entry by name")
    ap.add_argument("--param", help="rational parameter, e.g. 2 or 3/2")
    ap.add_argument("--json", action="store_true", help="emit JSON records")
    args = ap.parse_args(argv)

    names = [args.entry] if args.entry else catalog.entry_names()
    failures = 0
    for name in names:
        entry = catalog.get_entry(name)
        if entry.requires_equation_file:
            print("%-28s skipped (needs an equation file)" % name)
            continue
        value = None
        if entry.parametric:
            value = Fraction(args.param) if args.param else DEFAULT_PARAMS[name]
        result = catalog.run_entry(entry, value)
        if args.json:
            print(json.dumps(result.to_json_dict(), sort_keys=True))
        else:
            p = result.profile
            tag = "ok" if result.passed else "MISMATCH " + "; ".join(result.mismatches)
            shown = name if value is None else "%s@%s" % (name, value)
            print(
                "%-28s d=%d tau=%-3d gens=%s seconds=%s %s [%s]"
                % (
                    shown,
                    p.degree,
                    p.tau,
                    list(p.generator_degrees),
                    list(p.second_syzygy_degrees),
                    p.classification,
                    tag,
                )
            )
        failures += 0 if result.passed else 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
