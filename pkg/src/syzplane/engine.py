"""Jacobian syzygies and Milnor algebra invariants of a plane curve.

For a homogeneous f of degree d in x, y, z the module of Jacobian
syzygies is

    AR(f) = { (a, b, c) : a f_x + b f_y + c f_z = 0 },

graded by polynomial degree.  Its graded piece in degree r is the kernel
of the multiplication map from three copies of the degree-r forms into
the forms of degree r + d - 1; the same map's rank gives the Hilbert
function of the Milnor algebra S / (f_x, f_y, f_z).  For a reduced curve
that Hilbert function is eventually constant, equal to the total Tjurina
number, and the module data assembles into the minimal resolution shape

    0 -> (+) S(-e_i) -> (+) S(1 - d - d_i) -> S^3(1 - d) -> S,

with m generator degrees d_1 <= ... <= d_m and m - 2 second syzygy
twists e_i.  Everything here is computed with exact integer and rational
arithmetic; generator counts use the graded Nakayama quotient (new
generators in degree r = dim AR_r minus the dimension of S_1 times the
piece below) and second syzygies come from the relation spaces among a
fixed minimal generating set.  The whole pipeline is certified at the
end by an exact Hilbert series identity relating the resolution to the
computed Milnor dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from syzplane import linalg
from syzplane.poly import (
    HomogeneousPolynomial,
    Monomial,
    basis_dimension,
    euler_identity_holds,
    monomial_basis,
    monomial_index,
)

CLASS_SMOOTH = "smooth"
CLASS_FREE = "free"
CLASS_NEARLY_FREE = "nearly_free"
CLASS_PLUS_ONE_GENERATED = "plus_one_generated"
CLASS_M_SYZYGY = "m_syzygy"


class SearchExhaustedError(RuntimeError):
    """No nonzero syzygy through degree d - 1; input is not a reduced curve."""


class NotStabilizedError(RuntimeError):
    """Milnor Hilbert function still moving at the stabilization window."""


class ResolutionImbalanceError(RuntimeError):
    """Second syzygies do not close the resolution by twist degree 2d."""


@dataclass(frozen=True)
class GradedARPiece:
    """Exact basis of AR(f) in one degree.

    Vectors have length 3 * dim S_r, blocks ordered (a, b, c), each block
    indexed by monomial_basis(r).
    """

    degree: int
    basis: linalg.NullspaceBasis

    @property
    def dimension(self) -> int:
        return self.basis.dimension


@dataclass(frozen=True)
class Generator:
    """One minimal generator of AR(f): its degree and coordinate vector."""

    degree: int
    vector: Tuple[Fraction, ...]


@dataclass(frozen=True)
class ProfileChecks:
    euler: bool
    hilbert_numerator: bool


@dataclass(frozen=True)
class SyzygyProfile:
    """Complete certified invariant set for one reduced curve."""

    degree: int
    mdr: int
    tau: int
    generator_degrees: Tuple[int, ...]
    second_syzygy_degrees: Tuple[int, ...]
    classification: str
    nu: Optional[int]
    delta_level: Optional[int]
    minimal_pog: bool
    ar_hilbert: Tuple[int, ...]
    milnor_hilbert: Tuple[int, ...]
    checks: ProfileChecks

    def to_json_dict(self, tau_census: Optional[bool] = None) -> dict:
        """JSON payload; tau_census records the census audit when one ran."""
        return {
            "degree": self.degree,
            "mdr": self.mdr,
            "tau": self.tau,
            "generator_degrees": list(self.generator_degrees),
            "second_syzygy_degrees": list(self.second_syzygy_degrees),
            "classification": self.classification,
            "nu": self.nu,
            "delta_level": self.delta_level,
            "ar_hilbert": list(self.ar_hilbert),
            "milnor_hilbert": list(self.milnor_hilbert),
            "checks": {
                "euler": self.checks.euler,
                "hilbert_numerator": self.checks.hilbert_numerator,
                "tau_census": tau_census,
            },
        }


def _shift_block(
    vec: Sequence[Fraction], src_deg: int, mono: Monomial
) -> Dict[int, Fraction]:
    """Multiply a single S_{src_deg} coefficient block by a monomial.

    Returns sparse target coordinates inside S_{src_deg + |mono|}.
    """
    tgt_idx = monomial_index(src_deg + mono[0] + mono[1] + mono[2])
    out: Dict[int, Fraction] = {}
    for i, m in enumerate(monomial_basis(src_deg)):
        v = vec[i]
        if v:
            out[tgt_idx[(m[0] + mono[0], m[1] + mono[1], m[2] + mono[2])]] = v
    return out


class CurveAnalysis:
    """Computation context for one curve; caches graded data across calls."""

    def __init__(self, f: HomogeneousPolynomial) -> None:
        if f.degree < 2:
            raise ValueError("degree must be at least 2, got %d" % f.degree)
        if f.is_zero:
            raise ValueError("the zero polynomial has no Jacobian syzygies")
        self.f = f
        self.d = f.degree
        fi = f.primitive()
        self._partials = [fi.partial(v).integer_coefficients() for v in ("x", "y", "z")]
        self._ar_pieces: Dict[int, GradedARPiece] = {}
        self._mu_cache: Dict[int, Tuple[List[List[int]], int, int]] = {}
        self._generators: Optional[List[Generator]] = None
        self._milnor: Optional[Tuple[int, ...]] = None
        self._seconds: Optional[Tuple[int, ...]] = None

    # -- the multiplication map S_r^3 -> S_{r+d-1} ---------------------------

    def _mu_rows(self, r: int) -> Tuple[List[List[int]], int, int]:
        cached = self._mu_cache.get(r)
        if cached is not None:
            return cached
        row_idx = monomial_index(r + self.d - 1)
        nrows = len(row_idx)
        cols_basis = monomial_basis(r)
        ncols = 3 * len(cols_basis)
        rows = [[0] * ncols for _ in range(nrows)]
        col = 0
        for part in self._partials:
            for m in cols_basis:
                for q, cf in part.items():
                    rows[row_idx[(m[0] + q[0], m[1] + q[1], m[2] + q[2])]][col] += cf
                col += 1
        value = (rows, nrows, ncols)
        self._mu_cache[r] = value
        return value

    # -- graded pieces of AR(f) ---------------------------------------------

    def ar_piece(self, r: int) -> GradedARPiece:
        if r < 0:
            raise ValueError("degree must be nonnegative, got %d" % r)
        piece = self._ar_pieces.get(r)
        if piece is None:
            rows, _, ncols = self._mu_rows(r)
            piece = GradedARPiece(r, linalg.nullspace_int_rows(rows, ncols))
            self._ar_pieces[r] = piece
        return piece

    def ar_dimension(self, r: int) -> int:
        return self.ar_piece(r).dimension

    def mdr(self) -> int:
        for r in range(self.d):
            if self.ar_dimension(r) > 0:
                return r
        raise SearchExhaustedError(
            "no Jacobian syzygy through degree %d; the curve is not reduced"
            % (self.d - 1)
        )

    def ar_hilbert(self) -> Tuple[int, ...]:
        return tuple(self.ar_dimension(r) for r in range(self.d))

    # -- minimal generators via the graded Nakayama quotient -----------------

    def minimal_generators(self) -> List[Generator]:
        """Greedy Nakayama extraction, lowest degree first.

        In each degree the shifted span S_1 * AR_{r-1} is loaded into a
        rank tracker first; kernel basis vectors that still enlarge the
        span are exactly the new minimal generators.  One multiplication
        step suffices because AR_{r-1} is the full graded piece, so
        S_j * AR_k lands inside S_1 * AR_{r-1} for every j + k = r.
        """
        if self._generators is not None:
            return self._generators
        start = self.mdr()
        gens: List[Generator] = []
        for r in range(start, self.d):
            piece = self.ar_piece(r)
            if piece.dimension == 0:
                continue
            tracker = linalg.IntRankTracker(3 * basis_dimension(r))
            if r > start:
                for shifted in self._shifted_from_below(r):
                    tracker.add(shifted)
            for vec in piece.basis.vectors:
                if tracker.add(vec):
                    gens.append(Generator(r, vec))
        self._generators = gens
        return gens

    def _shifted_from_below(self, r: int):
        """Vectors x*s, y*s, z*s in AR_r coordinates for s in the AR_{r-1} basis."""
        below = self.ar_piece(r - 1)
        dim_low = basis_dimension(r - 1)
        dim_high = basis_dimension(r)
        for vec in below.basis.vectors:
            for mono in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                shifted = [Fraction(0)] * (3 * dim_high)
                for block in range(3):
                    seg = vec[block * dim_low:(block + 1) * dim_low]
                    for idx, v in _shift_block(seg, r - 1, mono).items():
                        shifted[block * dim_high + idx] = v
                yield shifted

    def generator_degrees(self) -> Tuple[int, ...]:
        return tuple(g.degree for g in self.minimal_generators())

    # -- Milnor algebra Hilbert function -------------------------------------

    def milnor_hilbert(self) -> Tuple[int, ...]:
        if self._milnor is not None:
            return self._milnor
        top = 3 * self.d - 4
        dims: List[int] = []
        for k in range(top + 1):
            r = k - self.d + 1
            if r < 0:
                rank = 0
            elif r < self.d:
                rank = 3 * basis_dimension(r) - self.ar_dimension(r)
            else:
                rows, _, ncols = self._mu_rows(r)
                rank = linalg.rank_int_rows(rows, ncols)
            dims.append(basis_dimension(k) - rank)
        if dims[-1] != dims[-2]:
            raise NotStabilizedError(
                "Milnor dimensions %d, %d at degrees %d, %d; the curve is not reduced"
                % (dims[-2], dims[-1], top - 1, top)
            )
        self._milnor = tuple(dims)
        return self._milnor

    def tjurina(self) -> int:
        return self.milnor_hilbert()[-1]

    # -- second syzygies ------------------------------------------------------

    def _relation_matrix(self, gens: List[Generator], t: int) -> Tuple[List[List[int]], int, List[int]]:
        """Matrix of (c_i) |-> sum c_i g_i from (+) S_{t - d_i} to S_t^3.

        Returns integer rows, column count, and per-generator column
        offsets (-1 when a generator does not contribute at degree t).
        """
        dim_t = basis_dimension(t)
        nrows = 3 * dim_t
        offsets: List[int] = []
        ncols = 0
        for g in gens:
            if g.degree > t:
                offsets.append(-1)
            else:
                offsets.append(ncols)
                ncols += basis_dimension(t - g.degree)
        rows = [[0] * ncols for _ in range(nrows)]
        tgt_idx = monomial_index(t)
        for gi, g in enumerate(gens):
            if offsets[gi] < 0:
                continue
            src = t - g.degree
            dim_g = basis_dimension(g.degree)
            # kernel vectors are integral by construction
            ints = [int(x) for x in g.vector]
            gen_basis = monomial_basis(g.degree)
            for mi, mono in enumerate(monomial_basis(src)):
                col = offsets[gi] + mi
                for block in range(3):
                    base = block * dim_g
                    for bi, bm in enumerate(gen_basis):
                        v = ints[base + bi]
                        if v:
                            row = block * dim_t + tgt_idx[
                                (bm[0] + mono[0], bm[1] + mono[1], bm[2] + mono[2])
                            ]
                            rows[row][col] += v
        return rows, ncols, offsets

    def second_syzygies(self) -> Tuple[int, ...]:
        if self._seconds is not None:
            return self._seconds
        gens = self.minimal_generators()
        m = len(gens)
        milnor = self.milnor_hilbert()
        if m <= 2:
            if not hilbert_numerator_balances(self.d, milnor, self.generator_degrees(), ()):
                raise ResolutionImbalanceError(
                    "free resolution shape does not match the Milnor series"
                )
            self._seconds = ()
            return self._seconds
        twists: List[int] = []
        prev_kernel: List[Tuple[Fraction, ...]] = []
        prev_offsets: List[int] = []
        t_start = min(g.degree for g in gens) + 1
        for t in range(t_start, 2 * self.d + 1):
            rows, ncols, offsets = self._relation_matrix(gens, t)
            kernel = linalg.nullspace_int_rows(rows, ncols)
            tracker = linalg.IntRankTracker(ncols)
            for vec in prev_kernel:
                for mono in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                    shifted = [Fraction(0)] * ncols
                    for gi, g in enumerate(gens):
                        if prev_offsets[gi] < 0:
                            continue
                        src = t - 1 - g.degree
                        seg = vec[prev_offsets[gi]:prev_offsets[gi] + basis_dimension(src)]
                        for idx, v in _shift_block(seg, src, mono).items():
                            shifted[offsets[gi] + idx] = v
                    tracker.add(shifted)
            for vec in kernel.vectors:
                if tracker.add(vec):
                    twists.append(t + self.d - 1)
            if len(twists) > m - 2:
                raise ResolutionImbalanceError(
                    "found %d second syzygies for %d generators" % (len(twists), m)
                )
            prev_kernel = list(kernel.vectors)
            prev_offsets = offsets
            if len(twists) == m - 2:
                if not hilbert_numerator_balances(
                    self.d, milnor, self.generator_degrees(), tuple(twists)
                ):
                    raise ResolutionImbalanceError(
                        "resolution shape does not match the Milnor series"
                    )
                self._seconds = tuple(sorted(twists))
                return self._seconds
        raise ResolutionImbalanceError(
            "second syzygies incomplete at twist degree %d" % (2 * self.d)
        )

    # -- assembled profile ----------------------------------------------------

    def profile(self) -> SyzygyProfile:
        mdr_value = self.mdr()
        milnor = self.milnor_hilbert()
        tau = milnor[-1]
        gen_degrees = self.generator_degrees()
        seconds = self.second_syzygies()
        classification, nu, delta_level, minimal_pog = classify(
            self.d, tau, gen_degrees
        )
        checks = ProfileChecks(
            euler=euler_identity_holds(self.f),
            hilbert_numerator=hilbert_numerator_balances(
                self.d, milnor, gen_degrees, seconds
            ),
        )
        return SyzygyProfile(
            degree=self.d,
            mdr=mdr_value,
            tau=tau,
            generator_degrees=gen_degrees,
            second_syzygy_degrees=seconds,
            classification=classification,
            nu=nu,
            delta_level=delta_level,
            minimal_pog=minimal_pog,
            ar_hilbert=self.ar_hilbert(),
            milnor_hilbert=milnor,
            checks=checks,
        )


# ---------------------------------------------------------------------------
# resolution bookkeeping

def hilbert_numerator_balances(
    d: int,
    milnor: Sequence[int],
    gen_degrees: Sequence[int],
    second_degrees: Sequence[int],
) -> bool:
    """Exact identity between the Milnor series and the resolution shape.

    With H(t) the Milnor Hilbert series (computed dimensions up to the
    stabilization window K = 3d - 4, constant tau beyond), the numerator
    N(t) = (1 - t)^3 H(t) must equal

        1 - 3 t^(d-1) + sum_i t^(d-1+d_i) - sum_i t^(e_i).
    """
    top = 3 * d - 4
    if len(milnor) != top + 1:
        raise ValueError("milnor sequence must cover degrees 0..%d" % top)
    tau = milnor[-1]
    size = top + 4
    lhs = [0] * size
    # (1 - t)^3 * sum m_k t^k
    for k, mk in enumerate(milnor):
        for shift, coef in ((0, 1), (1, -3), (2, 3), (3, -1)):
            lhs[k + shift] += coef * mk
    # tau * t^(K+1) * (1 - t)^2
    for shift, coef in ((0, 1), (1, -2), (2, 1)):
        lhs[top + 1 + shift] += coef * tau
    rhs = [0] * size
    rhs[0] = 1
    if d - 1 < size:
        rhs[d - 1] -= 3
    for di in gen_degrees:
        idx = d - 1 + di
        if idx >= size:
            return False
        rhs[idx] += 1
    for e in second_degrees:
        if e >= size:
            return False
        rhs[e] -= 1
    return lhs == rhs


def expected_milnor_from_resolution(
    d: int, gen_degrees: Sequence[int], second_degrees: Sequence[int], top: int
) -> List[int]:
    """Milnor dimensions 0..top implied by a resolution shape."""
    dims = []
    for k in range(top + 1):
        v = basis_dimension(k) - 3 * basis_dimension(k - d + 1)
        for di in gen_degrees:
            v += basis_dimension(k - d + 1 - di)
        for e in second_degrees:
            v -= basis_dimension(k - e)
        dims.append(v)
    return dims


def classify(
    d: int, tau: int, gen_degrees: Sequence[int]
) -> Tuple[str, Optional[int], Optional[int], bool]:
    """Resolution-shape classification.

    Returns (classification, nu, delta_level, minimal_pog).  nu and the
    level delta are defined for three-generator curves with d1 + d2 = d;
    minimal_pog flags level exactly one.
    """
    m = len(gen_degrees)
    if tau == 0:
        return CLASS_SMOOTH, None, None, False
    if m == 2:
        return CLASS_FREE, None, None, False
    if m == 3:
        d1, d2, d3 = sorted(gen_degrees)
        if d1 + d2 == d:
            nu = d3 - d2 + 1
            delta = d3 - d2
            if delta == 0:
                return CLASS_NEARLY_FREE, nu, delta, False
            return CLASS_PLUS_ONE_GENERATED, nu, delta, delta == 1
    return CLASS_M_SYZYGY, None, None, False


def verify_dimca_sticlaru(profile: SyzygyProfile) -> bool:
    """Closed-form Tjurina check for plus-one generated curves:

        tau = (d - 1)^2 - d1 (d - d1 - 1) - (d3 - d2 + 1).
    """
    if profile.classification != CLASS_PLUS_ONE_GENERATED:
        raise ValueError(
            "check applies to plus_one_generated curves, profile is %s"
            % profile.classification
        )
    d = profile.degree
    d1, d2, d3 = sorted(profile.generator_degrees)
    expected = (d - 1) ** 2 - d1 * (d - d1 - 1) - (d3 - d2 + 1)
    return profile.tau == expected


# ---------------------------------------------------------------------------
# functional wrappers

def analyze(f: HomogeneousPolynomial) -> SyzygyProfile:
    """Full certified profile of a reduced curve."""
    return CurveAnalysis(f).profile()


def ar_dimension(f: HomogeneousPolynomial, r: int) -> GradedARPiece:
    """Exact basis of the degree-r piece of AR(f)."""
    return CurveAnalysis(f).ar_piece(r)


def mdr(f: HomogeneousPolynomial) -> int:
    """Minimal degree of a Jacobian relation."""
    return CurveAnalysis(f).mdr()


def milnor_hilbert(f: HomogeneousPolynomial) -> Tuple[int, ...]:
    """Milnor algebra dimensions in degrees 0 .. 3d - 4."""
    return CurveAnalysis(f).milnor_hilbert()


def tjurina(f: HomogeneousPolynomial) -> int:
    """Total Tjurina number (stabilized Milnor dimension)."""
    return CurveAnalysis(f).tjurina()


def generator_degrees(f: HomogeneousPolynomial) -> Tuple[int, ...]:
    """Degrees of a minimal generating set of AR(f)."""
    return CurveAnalysis(f).generator_degrees()


def minimal_generators(f: HomogeneousPolynomial) -> List[Generator]:
    """A minimal generating set of AR(f) with explicit vectors."""
    return CurveAnalysis(f).minimal_generators()


def second_syzygy_degrees(
    f: HomogeneousPolynomial, gens: Optional[List[Generator]] = None
) -> Tuple[int, ...]:
    """Twists of the second syzygies of AR(f).

    When gens is provided it must be a minimal generating set for f (for
    example the output of minimal_generators); it is re-verified against
    a fresh analysis context.
    """
    ctx = CurveAnalysis(f)
    if gens is not None:
        own = ctx.minimal_generators()
        if [g.degree for g in own] != [g.degree for g in gens]:
            raise ValueError("provided generators do not match the curve")
    return ctx.second_syzygies()
