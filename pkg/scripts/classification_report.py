"""Print the nodal-tacnodal classification for k = 2..5 conics.

Lists every census the exclusion chain lets through, one row per
candidate with its witness exponent triple and known realization, and
confirms that nothing survives at k = 5.
"""

import argparse
import json
import sys

from syzplane.classifier import nodal_tacnodal_classification_report


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="emit the full report as JSON")
    args = ap.parse_args(argv)

    report = nodal_tacnodal_classification_report()
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
        return 0

    print("candidate censuses (k; n2, t3) with witness (d1, d2, h):")
    for row in report.rows:
        k, n2, t3 = row.census
        witness = ", ".join(str(w.as_tuple()) for w in row.witnesses)
        where = " [%s]" % row.catalog_entry if row.catalog_entry else ""
        print("  (%d; %2d, %2d)  %s  %s%s" % (k, n2, t3, witness, row.label, where))
    print("total candidates: %d" % report.candidate_count)
    k5 = report.verdicts_for(5)
    assert not any(v.is_candidate for v in k5)
    print("k=5: all %d censuses excluded" % len(k5))
    return 0


if __name__ == "__main__":
    sys.exit(main())
