"""Command-line interface: exact invariants as byte-stable JSON reports.

Subcommands map directly onto the library layers: analyze runs the
syzygy engine on a polynomial, census/poincare/hirzebruch run the
combinatorial tests, enumerate runs the candidate filter, catalog and
ziegler drive the named families.  Every report is printed as JSON with
sorted keys and two-space indentation so identical inputs produce
identical bytes.  Exit codes: 0 success, 1 a verification the command
performed came out false, 2 malformed or refused input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from syzplane import catalog, classifier
from syzplane import combinatorics as cb
from syzplane import engine
from syzplane.poly import (
    NotHomogeneousError,
    ParseError,
    ZeroPolynomialError,
    parse,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2


class _InputError(Exception):
    """Wraps any refused input; the message goes to stderr."""


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _read_polynomial(text: Optional[str], path: Optional[str]):
    if (text is None) == (path is None):
        raise _InputError("provide exactly one of a polynomial or --file")
    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _InputError("cannot read %s: %s" % (path, exc)) from exc
    try:
        return parse(text)
    except (ParseError, NotHomogeneousError, ZeroPolynomialError) as exc:
        raise _InputError(str(exc)) from exc


def _parse_census(text: str) -> cb.WeakCombinatorics:
    try:
        return cb.parse_census(text)
    except cb.CensusParseError as exc:
        raise _InputError(str(exc)) from exc


def _cmd_analyze(args: argparse.Namespace) -> int:
    f = _read_polynomial(args.polynomial, args.file)
    try:
        profile = engine.analyze(f)
    except (engine.SearchExhaustedError, engine.NotStabilizedError) as exc:
        raise _InputError(str(exc)) from exc
    _emit(profile.to_json_dict())
    return EXIT_OK


def _cmd_census(args: argparse.Namespace) -> int:
    wc = _parse_census(args.census)
    report: dict = {
        "census": wc.to_json_dict(),
        "degree": wc.degree,
        "tau": cb.total_tjurina(wc),
    }
    failed = False
    if wc.lines == 0 and wc.k >= 2:
        ok = cb.bezout_check(wc)
        report["bezout"] = ok
        failed = failed or not ok
    else:
        report["bezout"] = None
    try:
        report["arnold_exponent"] = str(cb.arnold_exponent(wc))
    except cb.NoSingularitiesError:
        report["arnold_exponent"] = None
    try:
        h = cb.admissible_h_range(wc)
        report["admissible_h"] = list(h)
    except (cb.BoundInapplicableError, cb.NoSingularitiesError):
        report["admissible_h"] = None
    status = cb.hirzebruch_check(wc)
    entry = {"status": status}
    if status != cb.HIRZEBRUCH_INAPPLICABLE:
        lhs, rhs = cb.hirzebruch_sides(wc)
        entry["lhs"] = str(lhs)
        entry["rhs"] = str(rhs)
        failed = failed or status == cb.HIRZEBRUCH_VIOLATED
    report["hirzebruch"] = entry
    if wc.degree >= 7:
        try:
            lhs, rhs = cb.kobayashi_lhs_rhs(wc, wc.degree)
            report["kobayashi"] = {
                "lhs": str(lhs),
                "rhs": str(rhs),
                "holds": lhs <= rhs,
            }
        except cb.UnsupportedTypeError:
            report["kobayashi"] = None
    else:
        report["kobayashi"] = None
    if wc.lines == 0 and wc.k >= 2:
        report["pog_filter"] = classifier.pog_filter(wc).to_json_dict()
    else:
        report["pog_filter"] = None
    _emit(report)
    return EXIT_MISMATCH if failed else EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.k < 2:
        raise _InputError("--k must be at least 2")
    verdicts = classifier.enumerate_nodal_tacnodal(args.k)
    _emit(
        {
            "k": args.k,
            "verdicts": [v.to_json_dict() for v in verdicts],
            "candidates": [
                v.to_json_dict() for v in verdicts if v.is_candidate
            ],
        }
    )
    return EXIT_OK


def _cmd_poincare(args: argparse.Namespace) -> int:
    wc = _parse_census(args.census)
    if wc.lines:
        raise _InputError("the census quadratic needs a pure conic census")
    if args.h is not None:
        levels = [args.h]
    else:
        try:
            levels = list(cb.admissible_h_range(wc))
        except (cb.BoundInapplicableError, cb.NoSingularitiesError):
            levels = list(range(1, wc.degree))
    rows = []
    for h in levels:
        split = cb.poincare_split(wc, h)
        poly = cb.poincare_polynomial(wc, h)
        rows.append(
            {
                "h": h,
                "quadratic": str(poly),
                "split": None if split is None else list(split),
            }
        )
    _emit({"census": wc.to_json_dict(), "rows": rows})
    return EXIT_OK


def _cmd_hirzebruch(args: argparse.Namespace) -> int:
    wc = _parse_census(args.census)
    status = cb.hirzebruch_check(wc)
    report = {"census": wc.to_json_dict(), "status": status}
    if status != cb.HIRZEBRUCH_INAPPLICABLE:
        lhs, rhs = cb.hirzebruch_sides(wc)
        report["lhs"] = str(lhs)
        report["rhs"] = str(rhs)
    _emit(report)
    return EXIT_MISMATCH if status == cb.HIRZEBRUCH_VIOLATED else EXIT_OK


def _parse_param(text: Optional[str]) -> Optional[Fraction]:
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _InputError("bad rational parameter %r" % text) from exc


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        _emit(
            {
                "entries": [
                    catalog.get_entry(n).to_json_dict()
                    for n in catalog.entry_names()
                ]
            }
        )
        return EXIT_OK
    if args.name is None:
        raise _InputError("catalog run needs an entry name")
    try:
        entry = catalog.get_entry(args.name)
    except catalog.UnknownEntryError:
        raise _InputError(
            "unknown entry %r; see catalog list" % args.name
        ) from None
    value = _parse_param(args.param)
    equation_text = None
    if args.equation_file is not None:
        try:
            with open(args.equation_file, "r", encoding="utf-8") as fh:
                equation_text = fh.read()
        except OSError as exc:
            raise _InputError(str(exc)) from exc
    try:
        result = catalog.run_entry(entry, value, equation_text)
    except catalog.DegenerateParameterError as exc:
        sys.stderr.write(str(exc) + "\n")
        return EXIT_MISMATCH
    except (ParseError, NotHomogeneousError, ZeroPolynomialError, ValueError) as exc:
        raise _InputError(str(exc)) from exc
    _emit(result.to_json_dict())
    return EXIT_OK if result.passed else EXIT_MISMATCH


def _cmd_ziegler(args: argparse.Namespace) -> int:
    try:
        comparison = catalog.ziegler_compare(args.left, args.right)
    except catalog.UnknownEntryError as exc:
        raise _InputError("unknown entry %s" % exc) from None
    except catalog.DegenerateParameterError as exc:
        sys.stderr.write(str(exc) + "\n")
        return EXIT_MISMATCH
    except (catalog.DegreeMismatchError, ValueError) as exc:
        raise _InputError(str(exc)) from exc
    _emit(comparison.to_json_dict())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syzplane",
        description="Exact Jacobian syzygy invariants of plane curves "
        "and combinatorics of conic arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full syzygy profile of a curve")
    p.add_argument("polynomial", nargs="?", help="homogeneous polynomial in x, y, z")
    p.add_argument("--file", help="read the polynomial from a UTF-8 text file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("census", help="combinatorial tests on a census")
    p.add_argument("action", choices=["check"])
    p.add_argument("census", help='census literal, e.g. "k=4; n2=2, t3=11"')
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("enumerate", help="nodal-tacnodal candidate filter")
    p.add_argument("--k", type=int, required=True, help="number of conics")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("poincare", help="census quadratic split table")
    p.add_argument("census")
    p.add_argument("--h", type=int, help="single level to test")
    p.add_argument(
        "--all-h",
        action="store_true",
        help="tabulate every admissible level (default)",
    )
    p.set_defaults(func=_cmd_poincare)

    p = sub.add_parser("hirzebruch", help="orbifold inequality verdict")
    p.add_argument("census")
    p.set_defaults(func=_cmd_hirzebruch)

    p = sub.add_parser("catalog", help="named families")
    p.add_argument("action", choices=["list", "run"])
    p.add_argument("name", nargs="?", help="entry name for run")
    p.add_argument("--param", help="rational parameter, e.g. 2 or 3/2")
    p.add_argument(
        "--equation-file",
        help="polynomial file for entries that expect a user-supplied equation",
    )
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("ziegler", help="compare two catalog curves")
    p.add_argument("left", help='curve spec: name or name@param')
    p.add_argument("right")
    p.set_defaults(func=_cmd_ziegler)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
