"""Named arrangement families, parameter specialization, and verification.

Each entry carries polynomial factor templates (with "@" as the free
parameter), a finite set of excluded rational parameters, a declared
singularity census, and the expected syzygy profile.  Specialization
substitutes the parameter, checks that the factors still define a
reduced arrangement of smooth conics (and lines, for the conic-line
entries), and audits the computed total Tjurina number against the
declared census: a non-excluded parameter whose curve has the wrong tau
is degenerate, which is exactly how the singular members of these
families announce themselves.

The conic-line pair entries share one declared census; it is the unique
nodes-and-tacnodes census compatible with both the pairwise
intersection count (25) and the computed tau (33), recorded here as
declared data and audited through tau on every run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from syzplane import engine
from syzplane.combinatorics import WeakCombinatorics, total_tjurina
from syzplane.poly import HomogeneousPolynomial, parse

PARAM_SYMBOL = "@"


class UnknownEntryError(KeyError):
    """No catalog entry with the requested name."""


class ExcludedParameterError(ValueError):
    """Parameter lies in the entry's excluded set."""


class DegenerateParameterError(ValueError):
    """Specialized polynomial fails the reducedness or census audit."""


class DegreeMismatchError(ValueError):
    """Comparison requires curves of equal degree."""


class MissingEquationError(ValueError):
    """Entry expects a user-supplied equation and none was given."""


RationalLike = Union[Fraction, int, str]


def _as_fraction(value: RationalLike) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class ExpectedProfile:
    """Declared expectation for an entry's syzygy invariants."""

    classification: str
    generator_degrees: Tuple[int, ...]
    tau: int
    second_syzygy_degrees: Optional[Tuple[int, ...]] = None
    nu: Optional[int] = None
    delta_level: Optional[int] = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    factors: Tuple[str, ...]
    excluded_params: frozenset
    declared_wc: WeakCombinatorics
    expected: ExpectedProfile
    # the excluded set is a statement about rational parameters; some
    # families are also degenerate at non-rational values (recorded for
    # documentation, unreachable through rational specialization)
    imaginary_unit_excluded: bool = False
    requires_equation_file: bool = False

    @property
    def parametric(self) -> bool:
        return any(PARAM_SYMBOL in f for f in self.factors)

    @property
    def declared_tau(self) -> int:
        return total_tjurina(self.declared_wc)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "factors": list(self.factors),
            "parametric": self.parametric,
            "excluded_params": sorted(str(v) for v in self.excluded_params),
            "declared_census": self.declared_wc.to_json_dict(),
            "declared_tau": self.declared_tau,
            "expected": {
                "classification": self.expected.classification,
                "generator_degrees": list(self.expected.generator_degrees),
                "second_syzygy_degrees": (
                    None
                    if self.expected.second_syzygy_degrees is None
                    else list(self.expected.second_syzygy_degrees)
                ),
                "tau": self.expected.tau,
            },
            "requires_equation_file": self.requires_equation_file,
        }


def _entry(
    name: str,
    factors: Sequence[str],
    excluded: Sequence[RationalLike],
    wc: WeakCombinatorics,
    expected: ExpectedProfile,
    **kw,
) -> CatalogEntry:
    return CatalogEntry(
        name=name,
        factors=tuple(factors),
        excluded_params=frozenset(_as_fraction(v) for v in excluded),
        declared_wc=wc,
        expected=expected,
        **kw,
    )


CATALOG: Dict[str, CatalogEntry] = {
    e.name: e
    for e in (
        _entry(
            "three_conics_pencil",
            ("x^2+y^2-z^2", "@*x^2+y^2-z^2", "x^2+@*y^2-z^2"),
            (0, 1, -1),
            WeakCombinatorics(3, {2: 4}, t3=4),
            ExpectedProfile(
                classification=engine.CLASS_PLUS_ONE_GENERATED,
                generator_degrees=(3, 3, 5),
                tau=16,
                second_syzygy_degrees=(11,),
                nu=3,
                delta_level=2,
            ),
        ),
        _entry(
            "megyesi_family",
            (
                "x^2+y^2-z^2",
                "x^2+@^2*y^2-@^2*z^2",
                "x^2+y^2-@^2*z^2",
                "@^2*x^2+y^2-@^2*z^2",
            ),
            (0, 1, -1),
            WeakCombinatorics(4, {2: 4}, t3=10),
            ExpectedProfile(
                classification=engine.CLASS_M_SYZYGY,
                generator_degrees=(4, 5, 5, 5),
                tau=34,
                second_syzygy_degrees=(13, 13),
            ),
            imaginary_unit_excluded=True,
        ),
        _entry(
            "t_family",
            (
                "x^2+y^2+4*@*x*z",
                "x^2+y^2-4*@*x*z",
                "x^2+3*y^2-18*@^2*z^2",
                "x^2+3*y^2-16*@^2*z^2",
            ),
            (0,),
            WeakCombinatorics(4, {2: 6}, t3=9),
            ExpectedProfile(
                classification=engine.CLASS_M_SYZYGY,
                generator_degrees=(5, 5, 5, 5, 5),
                tau=33,
                second_syzygy_degrees=(13, 13, 13),
            ),
        ),
        _entry(
            "ziegler_base",
            ("x^2+y^2-z^2", "3*x^2+y^2-3*z^2", "x^2+3*y^2-3*z^2"),
            (),
            WeakCombinatorics(3, {2: 4}, t3=4),
            ExpectedProfile(
                classification=engine.CLASS_PLUS_ONE_GENERATED,
                generator_degrees=(3, 3, 5),
                tau=16,
                second_syzygy_degrees=(11,),
                nu=3,
                delta_level=2,
            ),
        ),
        _entry(
            "ziegler_C1",
            (
                "x^2+y^2-z^2",
                "3*x^2+y^2-3*z^2",
                "x^2+3*y^2-3*z^2",
                "y-x-2*z",
                "y+x+2*z",
            ),
            (),
            WeakCombinatorics(3, {2: 9}, t3=8, lines=2),
            ExpectedProfile(
                classification=engine.CLASS_M_SYZYGY,
                generator_degrees=(5, 5, 5, 5, 5),
                tau=33,
                second_syzygy_degrees=(13, 13, 13),
            ),
        ),
        _entry(
            "ziegler_C2",
            (
                "x^2+y^2-z^2",
                "3*x^2+y^2-3*z^2",
                "x^2+3*y^2-3*z^2",
                "y-x-2*z",
                "y-x+2*z",
            ),
            (),
            WeakCombinatorics(3, {2: 9}, t3=8, lines=2),
            ExpectedProfile(
                classification=engine.CLASS_M_SYZYGY,
                generator_degrees=(4, 5, 5, 6),
                tau=33,
                second_syzygy_degrees=(13, 14),
            ),
        ),
        _entry(
            "four_conics_12_tacnodes",
            (),
            (),
            WeakCombinatorics(4, t3=12),
            ExpectedProfile(
                classification=engine.CLASS_NEARLY_FREE,
                generator_degrees=(4, 4, 4),
                tau=36,
            ),
            requires_equation_file=True,
        ),
    )
}


def entry_names() -> List[str]:
    return sorted(CATALOG)


def get_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownEntryError(name) from None


# -- specialization ----------------------------------------------------------

def _substitute(template: str, value: Fraction) -> str:
    return template.replace(
        PARAM_SYMBOL, "(%d/%d)" % (value.numerator, value.denominator)
    )


def _conic_form_rank(f: HomogeneousPolynomial) -> int:
    """Rank of the symmetric form of a degree-2 polynomial (doubled)."""
    a = 2 * f.coefficient((2, 0, 0))
    b = 2 * f.coefficient((0, 2, 0))
    c = 2 * f.coefficient((0, 0, 2))
    d = f.coefficient((1, 1, 0))
    e = f.coefficient((1, 0, 1))
    g = f.coefficient((0, 1, 1))
    m = [[a, d, e], [d, b, g], [e, g, c]]
    det3 = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    if det3 != 0:
        return 3
    for i in range(3):
        for jj in range(3):
            minor = [
                [m[r][s] for s in range(3) if s != jj]
                for r in range(3)
                if r != i
            ]
            if minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0] != 0:
                return 2
    return 1 if any(any(row) for row in m) else 0


def _reducedness_precheck(name: str, parts: Sequence[HomogeneousPolynomial]) -> None:
    """Reject factor lists that cannot define a reduced arrangement.

    Smooth conics and lines are irreducible, so the product is reduced
    exactly when no factor is a degenerate conic and no two factors are
    proportional; a degenerate rank <= 2 conic could also share a line
    with another factor, which proportionality alone would miss, so
    degenerate conics are rejected outright.
    """
    prims = [p.primitive() for p in parts]
    for i, p in enumerate(prims):
        if parts[i].degree == 2 and _conic_form_rank(parts[i]) < 3:
            raise DegenerateParameterError(
                "%s: factor %d is a degenerate conic" % (name, i + 1)
            )
        for q in prims[:i]:
            if p.terms == q.terms:
                raise DegenerateParameterError(
                    "%s: repeated component in the factor list" % name
                )


def build_polynomial(
    entry: CatalogEntry,
    value: Optional[RationalLike] = None,
    equation_text: Optional[str] = None,
) -> HomogeneousPolynomial:
    """Assemble the entry's polynomial without the census audit."""
    if entry.requires_equation_file:
        if equation_text is None:
            raise MissingEquationError(
                "%s expects an equation supplied by the caller" % entry.name
            )
        return parse(equation_text)
    if entry.parametric:
        if value is None:
            raise ValueError("%s is parametric; a parameter is required" % entry.name)
        v = _as_fraction(value)
        texts = [_substitute(t, v) for t in entry.factors]
    else:
        if value is not None:
            raise ValueError("%s takes no parameter" % entry.name)
        texts = list(entry.factors)
    parts = [parse(t) for t in texts]
    _reducedness_precheck(entry.name, parts)
    f = parts[0]
    for p in parts[1:]:
        f = f * p
    return f


def specialize(
    entry: CatalogEntry,
    value: RationalLike,
    check_exclusions: bool = True,
) -> HomogeneousPolynomial:
    """Specialize a parametric entry and audit the result.

    Raises ExcludedParameterError inside the excluded set (pass
    check_exclusions=False to probe excluded values deliberately, e.g.
    when demonstrating what goes wrong there), and
    DegenerateParameterError when the factors degenerate or the
    computed tau disagrees with the declared census.
    """
    v = None if value is None else _as_fraction(value)
    if check_exclusions and v is not None and v in entry.excluded_params:
        raise ExcludedParameterError(
            "%s: parameter %s is excluded" % (entry.name, v)
        )
    f = build_polynomial(entry, v)
    _audit_tau(entry, engine.CurveAnalysis(f))
    return f


def _audit_tau(entry: CatalogEntry, ctx: engine.CurveAnalysis) -> int:
    declared = entry.declared_tau
    try:
        tau = ctx.tjurina()
    except engine.NotStabilizedError as exc:
        raise DegenerateParameterError(
            "%s: %s" % (entry.name, exc)
        ) from exc
    if tau != declared:
        raise DegenerateParameterError(
            "%s: tau=%d differs from declared census tau=%d"
            % (entry.name, tau, declared)
        )
    return tau


# -- verification runs -------------------------------------------------------

@dataclass(frozen=True)
class RunResult:
    entry: str
    parameter: Optional[Fraction]
    profile: engine.SyzygyProfile
    tau_census_ok: bool
    mismatches: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.tau_census_ok

    def to_json_dict(self) -> dict:
        return {
            "entry": self.entry,
            "parameter": None if self.parameter is None else str(self.parameter),
            "passed": self.passed,
            "mismatches": list(self.mismatches),
            "profile": self.profile.to_json_dict(tau_census=self.tau_census_ok),
        }


def run_entry(
    entry: CatalogEntry,
    value: Optional[RationalLike] = None,
    equation_text: Optional[str] = None,
) -> RunResult:
    """Analyze an entry and compare against its expected profile.

    The census audit that specialize performs is folded into the single
    engine pass here; a degenerate parameter still raises, while an
    expectation mismatch on an admissible parameter is reported in the
    result rather than raised.
    """
    v: Optional[Fraction] = None
    if entry.parametric:
        if value is None:
            raise ValueError("%s is parametric; a parameter is required" % entry.name)
        v = _as_fraction(value)
        if v in entry.excluded_params:
            raise ExcludedParameterError(
                "%s: parameter %s is excluded" % (entry.name, v)
            )
    f = build_polynomial(entry, v, equation_text)
    try:
        profile = engine.analyze(f)
    except engine.NotStabilizedError as exc:
        raise DegenerateParameterError("%s: %s" % (entry.name, exc)) from exc
    declared = entry.declared_tau
    if profile.tau != declared:
        raise DegenerateParameterError(
            "%s: tau=%d differs from declared census tau=%d"
            % (entry.name, profile.tau, declared)
        )
    exp = entry.expected
    mismatches = []
    if profile.classification != exp.classification:
        mismatches.append(
            "classification %s != expected %s"
            % (profile.classification, exp.classification)
        )
    if profile.generator_degrees != exp.generator_degrees:
        mismatches.append(
            "generator degrees %s != expected %s"
            % (list(profile.generator_degrees), list(exp.generator_degrees))
        )
    if (
        exp.second_syzygy_degrees is not None
        and profile.second_syzygy_degrees != exp.second_syzygy_degrees
    ):
        mismatches.append(
            "second syzygies %s != expected %s"
            % (list(profile.second_syzygy_degrees), list(exp.second_syzygy_degrees))
        )
    if profile.tau != exp.tau:
        mismatches.append("tau %d != expected %d" % (profile.tau, exp.tau))
    if exp.nu is not None and profile.nu != exp.nu:
        mismatches.append("nu %s != expected %d" % (profile.nu, exp.nu))
    if exp.delta_level is not None and profile.delta_level != exp.delta_level:
        mismatches.append(
            "delta level %s != expected %d" % (profile.delta_level, exp.delta_level)
        )
    return RunResult(
        entry=entry.name,
        parameter=v,
        profile=profile,
        tau_census_ok=profile.tau == declared,
        mismatches=tuple(mismatches),
    )


# -- strong pair comparison --------------------------------------------------

VERDICT_STRONG = "strong_ziegler_candidate"
VERDICT_NOT_A_PAIR = "not_a_pair"
VERDICT_IDENTICAL = "identical_modules_up_to_checked_degree"


@dataclass(frozen=True)
class ZieglerComparison:
    left: str
    right: str
    same_weak_combinatorics: bool
    ar_hilbert_left: Tuple[int, ...]
    ar_hilbert_right: Tuple[int, ...]
    differing_degrees: Tuple[int, ...]
    verdict: str

    def to_json_dict(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "same_weak_combinatorics": self.same_weak_combinatorics,
            "ar_hilbert_left": list(self.ar_hilbert_left),
            "ar_hilbert_right": list(self.ar_hilbert_right),
            "differing_degrees": list(self.differing_degrees),
            "verdict": self.verdict,
        }


def resolve_curve_spec(spec: str) -> Tuple[CatalogEntry, Optional[Fraction]]:
    """Parse "name" or "name@param" into an entry and parameter."""
    name, sep, param = spec.partition(PARAM_SYMBOL)
    entry = get_entry(name)
    if sep and not entry.parametric:
        raise ValueError("%s takes no parameter" % name)
    if entry.parametric and not sep:
        raise ValueError("%s is parametric; use %s%svalue" % (name, name, PARAM_SYMBOL))
    if entry.requires_equation_file:
        raise MissingEquationError(
            "%s expects an equation file and cannot be compared by name" % name
        )
    value = _as_fraction(param) if sep else None
    return entry, value


def ziegler_compare(left: str, right: str) -> ZieglerComparison:
    """Compare declared censuses and graded syzygy dimensions of two curves.

    A strong pair candidate has identical declared weak combinatorics
    but different AR dimensions in some degree r < d.
    """
    curves = []
    for spec in (left, right):
        entry, value = resolve_curve_spec(spec)
        if entry.parametric and value in entry.excluded_params:
            raise ExcludedParameterError(
                "%s: parameter %s is excluded" % (entry.name, value)
            )
        curves.append((entry, build_polynomial(entry, value)))
    (e1, f1), (e2, f2) = curves
    if f1.degree != f2.degree:
        raise DegreeMismatchError(
            "degrees differ: %d vs %d" % (f1.degree, f2.degree)
        )
    ars = []
    for entry, f in curves:
        ctx = engine.CurveAnalysis(f)
        _audit_tau(entry, ctx)
        ars.append(ctx.ar_hilbert())
    ar1, ar2 = ars
    differing = tuple(r for r, (a, b) in enumerate(zip(ar1, ar2)) if a != b)
    same_wc = e1.declared_wc == e2.declared_wc
    if not differing:
        verdict = VERDICT_IDENTICAL
    elif same_wc:
        verdict = VERDICT_STRONG
    else:
        verdict = VERDICT_NOT_A_PAIR
    return ZieglerComparison(
        left=left,
        right=right,
        same_weak_combinatorics=same_wc,
        ar_hilbert_left=ar1,
        ar_hilbert_right=ar2,
        differing_degrees=differing,
        verdict=verdict,
    )


# -- degeneration scanning ---------------------------------------------------

@dataclass(frozen=True)
class ScanResult:
    value: Fraction
    status: str  # ok | excluded | degenerate
    tau: Optional[int]
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "value": str(self.value),
            "status": self.status,
            "tau": self.tau,
            "detail": self.detail,
        }


def scan_parameters(
    entry: CatalogEntry,
    values: Sequence[RationalLike],
    check_exclusions: bool = True,
) -> List[ScanResult]:
    """Audit tau across a list of parameters; never raises per-value."""
    out = []
    for raw in values:
        v = _as_fraction(raw)
        try:
            if check_exclusions and v in entry.excluded_params:
                raise ExcludedParameterError(
                    "%s: parameter %s is excluded" % (entry.name, v)
                )
            f = build_polynomial(entry, v)
            tau = _audit_tau(entry, engine.CurveAnalysis(f))
        except ExcludedParameterError as exc:
            out.append(ScanResult(v, "excluded", None, str(exc)))
        except DegenerateParameterError as exc:
            out.append(ScanResult(v, "degenerate", None, str(exc)))
        else:
            out.append(ScanResult(v, "ok", tau, ""))
    return out
