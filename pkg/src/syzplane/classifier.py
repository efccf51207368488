"""Candidate filtering for plus-one generated conic arrangements.

Given a singularity census, a chain of combinatorial tests decides
whether a plus-one generated arrangement with that census can exist:
the Bezout intersection count, the Hirzebruch-type inequality, rational
splitting of the census quadratic, and the Arnold-exponent lower bound
on the smallest exponent.  Surviving censuses come with explicit
witness triples (d1, d2, h).

The nodal-tacnodal enumeration runs the same chain over every census of
k conics whose only singularities are nodes and tacnodes; the
intersection count pins n2 = 2k(k-1) - 2t3, so t3 alone parametrizes
the search.  There the witness condition is strict (h > d2): level
h = d2 is the nearly-free shape, which the enumeration is meant to
exclude.  The direct filter keeps h = d2 admissible so that censuses
forcing the nearly-free boundary still surface with their witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Tuple

from syzplane.combinatorics import (
    BoundInapplicableError,
    HIRZEBRUCH_VIOLATED,
    WeakCombinatorics,
    admissible_h_range,
    bezout_check,
    hirzebruch_check,
    hirzebruch_sides,
    poincare_split,
)

STATUS_EXCLUDED_BEZOUT = "excluded_bezout"
STATUS_EXCLUDED_HIRZEBRUCH = "excluded_hirzebruch"
STATUS_EXCLUDED_NO_SPLIT = "excluded_no_split"
STATUS_EXCLUDED_D1_BOUND = "excluded_d1_bound"
STATUS_CANDIDATE = "candidate"


@dataclass(frozen=True)
class Witness:
    """An admissible exponent triple: d1 <= d2 <= h, d1 + d2 = 2k."""

    d1: int
    d2: int
    h: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.d1, self.d2, self.h)


@dataclass(frozen=True)
class CandidateVerdict:
    wc: WeakCombinatorics
    status: str
    witnesses: Tuple[Witness, ...]
    detail: str

    @property
    def is_candidate(self) -> bool:
        return self.status == STATUS_CANDIDATE

    def to_json_dict(self) -> dict:
        return {
            "census": self.wc.to_json_dict(),
            "status": self.status,
            "witnesses": [list(w.as_tuple()) for w in self.witnesses],
            "detail": self.detail,
        }


def _bezout_sides(wc: WeakCombinatorics) -> Tuple[int, int]:
    expected = 2 * (wc.k * wc.k - wc.k)
    absorbed = sum(count * comb(r, 2) for r, count in wc.ordinary)
    absorbed += 2 * wc.t3 + 3 * wc.t5 + 4 * wc.t7 + 6 * wc.j
    return expected, absorbed


def pog_filter(wc: WeakCombinatorics, strict_level: bool = False) -> CandidateVerdict:
    """Run the exclusion chain on a pure conic census.

    Tests run in order: intersection count, Hirzebruch-type inequality
    (where applicable), then for each admissible level h the rational
    split of the census quadratic and the lower bound on d1.  The first
    failing global test excludes the census outright; otherwise the
    verdict carries every witness (d1, d2, h) that survives.  With
    strict_level the witness condition h > d2 replaces h >= d2.
    """
    if not bezout_check(wc):
        expected, absorbed = _bezout_sides(wc)
        return CandidateVerdict(
            wc,
            STATUS_EXCLUDED_BEZOUT,
            (),
            "intersection count 2(k^2-k)=%d but census absorbs %d"
            % (expected, absorbed),
        )
    if hirzebruch_check(wc) == HIRZEBRUCH_VIOLATED:
        lhs, rhs = hirzebruch_sides(wc)
        return CandidateVerdict(
            wc,
            STATUS_EXCLUDED_HIRZEBRUCH,
            (),
            "inequality fails: %s < %s" % (lhs, rhs),
        )
    d = wc.degree
    try:
        levels = admissible_h_range(wc)
        d1_low: Optional[int] = levels.start
    except BoundInapplicableError:
        levels = range(1, d)
        d1_low = None
    witnesses: List[Witness] = []
    split_seen = False
    level_passed = False
    for h in levels:
        split = poincare_split(wc, h)
        if split is None:
            continue
        split_seen = True
        d1, d2 = split
        if (h <= d2) if strict_level else (h < d2):
            continue
        level_passed = True
        if d1_low is not None and d1 < d1_low:
            continue
        witnesses.append(Witness(d1, d2, h))
    if witnesses:
        return CandidateVerdict(
            wc,
            STATUS_CANDIDATE,
            tuple(witnesses),
            "admissible witness triples (d1, d2, h)",
        )
    if level_passed:
        return CandidateVerdict(
            wc,
            STATUS_EXCLUDED_D1_BOUND,
            (),
            "every split has d1 below the exponent bound %s" % d1_low,
        )
    if split_seen:
        boundary = "h <= d2" if strict_level else "h < d2"
        return CandidateVerdict(
            wc,
            STATUS_EXCLUDED_NO_SPLIT,
            (),
            "quadratic splits only at levels with %s, below the plus-one range"
            % boundary,
        )
    return CandidateVerdict(
        wc,
        STATUS_EXCLUDED_NO_SPLIT,
        (),
        "no rational split at any admissible level",
    )


def enumerate_nodal_tacnodal(k: int) -> List[CandidateVerdict]:
    """Verdicts for every nodal-tacnodal census of k >= 2 conics.

    The intersection count forces n2 = 2k(k-1) - 2t3, so censuses are
    enumerated by t3 = 0 .. k(k-1) in ascending order.  Witnesses use
    the strict level condition h > d2.
    """
    if k < 2:
        raise ValueError("enumeration needs k >= 2, got %d" % k)
    out = []
    for t3 in range(k * (k - 1) + 1):
        n2 = 2 * k * (k - 1) - 2 * t3
        wc = WeakCombinatorics(k=k, ordinary={2: n2}, t3=t3)
        out.append(pog_filter(wc, strict_level=True))
    return out


@dataclass(frozen=True)
class MinimalPogCriterion:
    """Forced node count for a minimal plus-one generated census.

    discriminant is -4k^2 + 4k + 4 t3 + 5, which must be nonnegative
    for the minimal syzygy degree of such a curve to be an integer;
    n2_forced is the node count 2k(k-1) - 2 t3 pinned by the
    intersection count, or None when the census cannot be minimal
    plus-one generated (negative discriminant, or a node count outside
    {0, 2}; n2 = 0 is the nearly-free boundary t3 = k(k-1)).
    """

    discriminant: int
    n2_forced: Optional[int]

    @property
    def impossible(self) -> bool:
        return self.n2_forced is None


def minimal_pog_census_criterion(k: int, t3: int) -> MinimalPogCriterion:
    if k < 2:
        raise ValueError("criterion needs k >= 2, got %d" % k)
    if t3 < 0:
        raise ValueError("negative tacnode count")
    disc = -4 * k * k + 4 * k + 4 * t3 + 5
    n2 = 2 * k * (k - 1) - 2 * t3
    if disc < 0 or n2 < 0 or n2 not in (0, 2):
        return MinimalPogCriterion(disc, None)
    return MinimalPogCriterion(disc, n2)


# Realization data for the surviving nodal-tacnodal censuses, keyed by
# (k, n2, t3).  These record which arrangements are known to exist with
# each census and what syzygy shape they realize; the labels are
# declared alongside the curve catalog, not recomputed here.
REALIZED_POG: Dict[Tuple[int, int, int], Tuple[str, Optional[str]]] = {
    (2, 2, 1): ("plus-one generated (2,2,3)", None),
    (3, 2, 5): ("plus-one generated (3,3,4)", None),
    (3, 4, 4): ("plus-one generated (3,3,5)", "three_conics_pencil"),
    (4, 2, 11): ("plus-one generated (4,4,5)", None),
}
REALIZED_HIGHER_SYZYGY: Dict[Tuple[int, int, int], Tuple[str, Optional[str]]] = {
    (4, 4, 10): ("4-syzygy (4,5,5,5) at sampled parameters", "megyesi_family"),
    (4, 6, 9): ("5-syzygy (5,5,5,5,5) at sampled parameters", "t_family"),
}


@dataclass(frozen=True)
class ClassificationRow:
    census: Tuple[int, int, int]
    witnesses: Tuple[Witness, ...]
    realization: str
    label: str
    catalog_entry: Optional[str]

    def to_json_dict(self) -> dict:
        k, n2, t3 = self.census
        return {
            "census": {"k": k, "n2": n2, "t3": t3},
            "witnesses": [list(w.as_tuple()) for w in self.witnesses],
            "realization": self.realization,
            "label": self.label,
            "catalog_entry": self.catalog_entry,
        }


@dataclass(frozen=True)
class NodalTacnodalReport:
    """Survey of nodal-tacnodal censuses over k = 2 .. 5."""

    verdicts: Tuple[Tuple[int, Tuple[CandidateVerdict, ...]], ...]
    rows: Tuple[ClassificationRow, ...]

    @property
    def candidate_count(self) -> int:
        return len(self.rows)

    def verdicts_for(self, k: int) -> Tuple[CandidateVerdict, ...]:
        for kk, vs in self.verdicts:
            if kk == k:
                return vs
        raise KeyError(k)

    def to_json_dict(self) -> dict:
        return {
            "candidates": [row.to_json_dict() for row in self.rows],
            "verdicts": {
                str(k): [v.to_json_dict() for v in vs] for k, vs in self.verdicts
            },
        }


def nodal_tacnodal_classification_report() -> NodalTacnodalReport:
    """Enumerate k = 2 .. 5 and attach realization data to candidates.

    The k = 5 sweep must come back empty; a candidate there would mean
    the exclusion chain no longer reproduces the known classification,
    so it raises instead of reporting quietly.
    """
    verdicts = []
    rows: List[ClassificationRow] = []
    for k in range(2, 6):
        vs = tuple(enumerate_nodal_tacnodal(k))
        verdicts.append((k, vs))
        for v in vs:
            if not v.is_candidate:
                continue
            key = (v.wc.k, v.wc.n(2), v.wc.t3)
            if k == 5:
                raise RuntimeError(
                    "unexpected candidate census %s for k=5" % (key,)
                )
            if key in REALIZED_POG:
                label, entry = REALIZED_POG[key]
                realization = "plus_one_generated"
            elif key in REALIZED_HIGHER_SYZYGY:
                label, entry = REALIZED_HIGHER_SYZYGY[key]
                realization = "higher_syzygy"
            else:
                raise RuntimeError(
                    "candidate census %s has no recorded realization" % (key,)
                )
            rows.append(
                ClassificationRow(
                    census=key,
                    witnesses=v.witnesses,
                    realization=realization,
                    label=label,
                    catalog_entry=entry,
                )
            )
    return NodalTacnodalReport(tuple(verdicts), tuple(rows))
