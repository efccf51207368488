"""Combinatorial invariants of conic and conic-line arrangement censuses.

A census records how many smooth conics (and optionally lines) an
arrangement has and how many singular points of each admissible type:
ordinary r-fold intersections, tacnodes (A3), A5 and A7 points, and
tangential triple points of type J_{2,0}.  The census alone determines
the total Tjurina number, an intersection-count identity of Bezout type,
the Arnold exponent, a quadratic polynomial whose rational splitting
controls the possible syzygy exponents, and two inequalities (a
Hirzebruch-type bound and a Kobayashi-type orbifold bound) that rule
censuses out.

Geometry never enters: censuses are inputs, either parsed from literals
like "k=4; n2=2, t3=11" or declared by the curve catalog.  All values
are exact integers or fractions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union


class CensusParseError(ValueError):
    """Census literal does not follow the key=value grammar."""


class ConicScopeError(ValueError):
    """Identity is stated for pure conic arrangements; census has lines."""


class NoSingularitiesError(ValueError):
    """Arnold exponent of a smooth census is undefined."""


class BoundInapplicableError(ValueError):
    """Exponent lower bound requires a census with ADE singularities only."""


class UnsupportedTypeError(ValueError):
    """Census contains a singularity type outside the fixed tables."""


# Local Tjurina = Milnor numbers of the admissible quasi-homogeneous types.
MILNOR_TABLE: Mapping[str, int] = MappingProxyType(
    {"A3": 3, "A5": 5, "A7": 7, "J20": 10}
)

# Orders of the local symmetry groups entering the orbifold bound, for the
# ADE types only (the two simple elliptic types contribute mu + 1 with no
# correction term).
GAMMA_TABLE: Mapping[str, int] = MappingProxyType(
    {"node": 4, "triple": 16, "A3": 8, "A5": 12, "A7": 16}
)


def milnor_ordinary(r: int) -> int:
    """Milnor number (r - 1)^2 of an ordinary r-fold point."""
    if r < 2:
        raise ValueError("ordinary points have multiplicity >= 2, got %d" % r)
    return (r - 1) ** 2


OrdinaryCounts = Union[Mapping[int, int], Iterable[Tuple[int, int]]]


@dataclass(frozen=True)
class WeakCombinatorics:
    """Singularity census of an arrangement of k smooth conics.

    ordinary maps multiplicity r >= 2 to the count of ordinary r-fold
    points; it is normalized to a sorted tuple of (r, count) pairs with
    zero counts dropped, so census values are hashable.  t3, t5, t7
    count A3, A5, A7 points, j counts J_{2,0} points.  lines is nonzero
    only for the conic-line entries of the catalog; the identities below
    that are stated for pure conic arrangements refuse such censuses.
    """

    k: int
    ordinary: OrdinaryCounts = ()
    t3: int = 0
    t5: int = 0
    t7: int = 0
    j: int = 0
    lines: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("conic count must be >= 1, got %d" % self.k)
        pairs = (
            self.ordinary.items()
            if isinstance(self.ordinary, Mapping)
            else self.ordinary
        )
        norm = []
        for r, count in pairs:
            if r < 2:
                raise ValueError("ordinary multiplicity must be >= 2, got %d" % r)
            if count < 0:
                raise ValueError("negative count for ordinary %d-fold points" % r)
            if count:
                norm.append((int(r), int(count)))
        norm.sort()
        if len({r for r, _ in norm}) != len(norm):
            raise ValueError("repeated multiplicity in ordinary point counts")
        object.__setattr__(self, "ordinary", tuple(norm))
        for name in ("t3", "t5", "t7", "j", "lines"):
            if getattr(self, name) < 0:
                raise ValueError("negative %s" % name)

    def n(self, r: int) -> int:
        """Count of ordinary r-fold points."""
        for rr, count in self.ordinary:
            if rr == r:
                return count
        return 0

    @property
    def degree(self) -> int:
        return 2 * self.k + self.lines

    @property
    def has_singularities(self) -> bool:
        return bool(self.ordinary) or any(
            (self.t3, self.t5, self.t7, self.j)
        )

    def short_label(self) -> str:
        """Compact (k; n2, t3) style label used in reports."""
        parts = []
        for r, count in self.ordinary:
            parts.append("n%d=%d" % (r, count))
        for name in ("t3", "t5", "t7", "j", "lines"):
            v = getattr(self, name)
            if v:
                parts.append("%s=%d" % (name, v))
        return "(%d; %s)" % (self.k, ", ".join(parts)) if parts else "(%d;)" % self.k

    def to_json_dict(self) -> dict:
        out: Dict[str, int] = {"k": self.k}
        if self.lines:
            out["lines"] = self.lines
        for r, count in self.ordinary:
            out["n%d" % r] = count
        for name in ("t3", "t5", "t7", "j"):
            v = getattr(self, name)
            if v:
                out[name] = v
        return out


_KEY_RE = re.compile(r"^(k|lines|t3|t5|t7|j|n([2-9]\d*))$")


def parse_census(text: str) -> WeakCombinatorics:
    """Parse a census literal like "k=4; n2=2, t3=11".

    Separators ';' and ',' are interchangeable, whitespace is ignored,
    unknown keys and repeated keys are rejected, k is mandatory.
    """
    seen: Dict[str, int] = {}
    for chunk in re.split(r"[;,]", text):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise CensusParseError("expected key=value, got %r" % chunk)
        key, _, value = chunk.partition("=")
        key = key.strip()
        value = value.strip()
        if not _KEY_RE.match(key):
            raise CensusParseError("unknown census key %r" % key)
        if key in seen:
            raise CensusParseError("repeated census key %r" % key)
        if not re.fullmatch(r"\d+", value):
            raise CensusParseError("count for %s must be a nonnegative integer, got %r" % (key, value))
        seen[key] = int(value)
    if "k" not in seen:
        raise CensusParseError("census must declare k")
    ordinary = {int(key[1:]): v for key, v in seen.items() if key.startswith("n")}
    return WeakCombinatorics(
        k=seen["k"],
        ordinary=ordinary,
        t3=seen.get("t3", 0),
        t5=seen.get("t5", 0),
        t7=seen.get("t7", 0),
        j=seen.get("j", 0),
        lines=seen.get("lines", 0),
    )


def _require_pure_conic(wc: WeakCombinatorics, what: str) -> None:
    if wc.lines:
        raise ConicScopeError(
            "%s is stated for pure conic arrangements; census has %d lines"
            % (what, wc.lines)
        )


def total_tjurina(wc: WeakCombinatorics) -> int:
    """Sum of local Tjurina numbers over the census."""
    total = sum(count * milnor_ordinary(r) for r, count in wc.ordinary)
    return (
        total
        + MILNOR_TABLE["A3"] * wc.t3
        + MILNOR_TABLE["A5"] * wc.t5
        + MILNOR_TABLE["A7"] * wc.t7
        + MILNOR_TABLE["J20"] * wc.j
    )


def bezout_check(wc: WeakCombinatorics) -> bool:
    """Intersection-count identity for k >= 2 smooth conics.

    Every pair of conics meets with total multiplicity 4, so
    2(k^2 - k) must equal the pairwise intersections absorbed by the
    census: C(r,2) per ordinary r-fold point and 2, 3, 4, 6 per A3, A5,
    A7, J_{2,0} point.
    """
    _require_pure_conic(wc, "the intersection count")
    if wc.k < 2:
        raise ValueError("intersection count needs k >= 2, got k=%d" % wc.k)
    absorbed = sum(count * comb(r, 2) for r, count in wc.ordinary)
    absorbed += 2 * wc.t3 + 3 * wc.t5 + 4 * wc.t7 + 6 * wc.j
    return 2 * (wc.k * wc.k - wc.k) == absorbed


# Log canonical thresholds per type.  Ordinary r-fold points contribute
# 2/r and tacnodes 3/4; the A5, A7, J_{2,0} values follow the standard
# quasi-homogeneous formula 1/a + 1/b for a local model x^a + y^b
# (A5: x^2+y^6, A7: x^2+y^8, J_{2,0}: x^3+y^6), derived from standard
# theory rather than transcribed, and exercised only on censuses whose
# exponent is independently known.
_LCT_A3 = Fraction(3, 4)
_LCT_A5 = Fraction(2, 3)
_LCT_A7 = Fraction(5, 8)
_LCT_J20 = Fraction(1, 2)


def arnold_exponent(wc: WeakCombinatorics) -> Fraction:
    """Minimum log canonical threshold over the singularities present."""
    values = [Fraction(2, r) for r, _ in wc.ordinary]
    if wc.t3:
        values.append(_LCT_A3)
    if wc.t5:
        values.append(_LCT_A5)
    if wc.t7:
        values.append(_LCT_A7)
    if wc.j:
        values.append(_LCT_J20)
    if not values:
        raise NoSingularitiesError("smooth census has no Arnold exponent")
    return min(values)


def _ceil_fraction(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def admissible_h_range(wc: WeakCombinatorics) -> range:
    """Range of the free exponent h compatible with the Arnold bound.

    For a census with only ADE singularities (ordinary double and triple
    points, A3, A5, A7) the smallest syzygy degree d1 of a curve of
    degree d realizing it satisfies alpha * d - 2 <= d1 <= h <= d - 1;
    the returned range is [ceil(alpha*d - 2), d - 1].  Censuses with
    ordinary points of multiplicity >= 4 or J_{2,0} points fall outside
    the bound's hypotheses and are refused; callers fall back to
    [1, d - 1] in that case.
    """
    if wc.j or any(r >= 4 for r, _ in wc.ordinary):
        raise BoundInapplicableError(
            "exponent bound needs ADE singularities only, census %s" % wc.short_label()
        )
    alpha = arnold_exponent(wc)
    d = wc.degree
    low = _ceil_fraction(alpha * d - 2)
    return range(max(low, 1), d)


@dataclass(frozen=True)
class PoincarePolynomial:
    """Quadratic 1 + 2k t + C(h) t^2 attached to a census and a level h."""

    linear: int
    quadratic: int

    constant: int = 1

    @property
    def discriminant(self) -> int:
        return self.linear * self.linear - 4 * self.quadratic

    def __str__(self) -> str:
        return "1 + %d*t + %d*t^2" % (self.linear, self.quadratic)


def pog_exponent_sum(wc: WeakCombinatorics) -> int:
    """The census value that a plus-one generated exponent triple must hit.

    For a pure conic arrangement realized with exponents (d1, d2, d3)
    the products satisfy d1*d2 + d3 = sum over ordinary points of
    (r-1) n_r, plus t3 + t5 + t7 + 2j + 2k.
    """
    _require_pure_conic(wc, "the exponent sum identity")
    total = sum(count * (r - 1) for r, count in wc.ordinary)
    return total + wc.t3 + wc.t5 + wc.t7 + 2 * wc.j + 2 * wc.k


def poincare_polynomial(wc: WeakCombinatorics, h: int) -> PoincarePolynomial:
    """The census quadratic at level h (pure conic scope)."""
    _require_pure_conic(wc, "the census quadratic")
    return PoincarePolynomial(linear=2 * wc.k, quadratic=pog_exponent_sum(wc) - h)


def poincare_split(wc: WeakCombinatorics, h: int) -> Optional[Tuple[int, int]]:
    """Split the census quadratic at level h into (1 + d1 t)(1 + d2 t).

    Returns the unique pair d1 <= d2 of positive integers with
    d1 + d2 = 2k and d1 d2 = C(h), or None when the discriminant is
    negative, not a perfect square, or a root fails positivity.  The
    quadratic is monic after reversing coefficients, so any rational
    root is automatically an integer.
    """
    poly = poincare_polynomial(wc, h)
    disc = poly.discriminant
    if disc < 0:
        return None
    s = isqrt(disc)
    if s * s != disc:
        return None
    # linear term 2k is even and disc = 4k^2 - 4C, so s is even too
    d1 = (poly.linear - s) // 2
    d2 = (poly.linear + s) // 2
    if d1 < 1:
        return None
    return d1, d2


HIRZEBRUCH_SATISFIED = "satisfied"
HIRZEBRUCH_VIOLATED = "violated"
HIRZEBRUCH_INAPPLICABLE = "inapplicable"


def hirzebruch_applicable(wc: WeakCombinatorics) -> bool:
    """Scope of the conic-arrangement orbifold inequality.

    Needs at least 4 conics, no lines, and no ordinary points of
    multiplicity 5 or more.  Ordinary quadruple points may be present
    but never contribute to the left-hand side.
    """
    if wc.k < 4 or wc.lines:
        return False
    return all(r <= 4 for r, _ in wc.ordinary)


def hirzebruch_sides(wc: WeakCombinatorics) -> Tuple[Fraction, Fraction]:
    """Exact sides of 8k + n2 + (3/4) n3 >= (5/2) t3 + 5 t5 + (29/4) t7 + 6j."""
    lhs = Fraction(8 * wc.k + wc.n(2)) + Fraction(3, 4) * wc.n(3)
    rhs = (
        Fraction(5, 2) * wc.t3
        + Fraction(5) * wc.t5
        + Fraction(29, 4) * wc.t7
        + Fraction(6) * wc.j
    )
    return lhs, rhs


def hirzebruch_check(wc: WeakCombinatorics) -> str:
    """Verdict of the orbifold inequality on a census, or inapplicable."""
    if not hirzebruch_applicable(wc):
        return HIRZEBRUCH_INAPPLICABLE
    lhs, rhs = hirzebruch_sides(wc)
    return HIRZEBRUCH_SATISFIED if lhs >= rhs else HIRZEBRUCH_VIOLATED


def kobayashi_lhs_rhs(wc: WeakCombinatorics, d: int) -> Tuple[Fraction, Fraction]:
    """Exact sides of the degree-d orbifold bound over the census.

    ADE points contribute mu + 1 - 2/|Gamma|, the simple elliptic types
    (ordinary quadruple points and J_{2,0}) contribute mu + 1, and the
    right side is (5/6) d^2 - d.  Valid for d >= 7; ordinary points of
    multiplicity >= 5 have no table entry and are refused.
    """
    if d < 7:
        raise ValueError("orbifold bound requires degree >= 7, got %d" % d)
    lhs = Fraction(0)
    for r, count in wc.ordinary:
        if r == 2:
            lhs += count * (Fraction(2) - Fraction(2, GAMMA_TABLE["node"]))
        elif r == 3:
            lhs += count * (
                Fraction(milnor_ordinary(3) + 1) - Fraction(2, GAMMA_TABLE["triple"])
            )
        elif r == 4:
            lhs += count * Fraction(milnor_ordinary(4) + 1)
        else:
            raise UnsupportedTypeError(
                "no table entry for ordinary %d-fold points" % r
            )
    for name, count in (("A3", wc.t3), ("A5", wc.t5), ("A7", wc.t7)):
        if count:
            lhs += count * (
                Fraction(MILNOR_TABLE[name] + 1) - Fraction(2, GAMMA_TABLE[name])
            )
    if wc.j:
        lhs += wc.j * Fraction(MILNOR_TABLE["J20"] + 1)
    rhs = Fraction(5, 6) * d * d - d
    return lhs, rhs
