from fractions import Fraction

import pytest
from hypothesis import given, settings

from syzplane import linalg, poly
from syzplane.linalg import (
    IntRankTracker,
    RationalMatrix,
    bareiss_echelon,
    nullspace,
    nullspace_int_rows,
    rank,
    rank_int_rows,
    rank_mod,
    screen_primes,
    span_rank,
)

from _oracles import naive_nullity, naive_rank, small_int_matrices


class TestRank:
    def test_pinned_examples(self):
        assert rank(RationalMatrix.from_rows([[1, 2], [2, 4]])) == 1
        assert rank(RationalMatrix.from_rows([[1, 0], [0, 1], [1, 1]])) == 2
        assert rank(RationalMatrix.zeros(3, 4)) == 0
        assert rank(RationalMatrix.identity(5)) == 5

    def test_fraction_entries(self):
        m = RationalMatrix.from_rows(
            [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]
        )
        assert rank(m) == naive_rank(m.row_lists())

    @given(small_int_matrices)
    @settings(max_examples=80, deadline=None)
    def test_matches_naive_gauss(self, rows):
        assert rank(RationalMatrix.from_rows(rows)) == naive_rank(rows)

    @given(small_int_matrices)
    @settings(max_examples=80, deadline=None)
    def test_modular_rank_never_exceeds_exact(self, rows):
        ncols = len(rows[0])
        exact = naive_rank(rows)
        for p in screen_primes():
            assert rank_mod(rows, ncols, p) <= exact

    def test_screen_primes_deterministic_and_avoiding(self):
        first = screen_primes()
        assert first == screen_primes()
        assert len(set(first)) == len(first)
        avoided = screen_primes(avoid=first[0])
        assert first[0] not in avoided


class TestNullspace:
    @given(small_int_matrices)
    @settings(max_examples=80, deadline=None)
    def test_dimension_and_membership(self, rows):
        ncols = len(rows[0])
        basis = nullspace(RationalMatrix.from_rows(rows))
        assert basis.dimension == naive_nullity(rows)
        for v in basis.vectors:
            for row in rows:
                assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
        assert span_rank(basis.vectors) == basis.dimension if basis.vectors else True

    def test_vectors_are_reduced_integral(self):
        basis = nullspace_int_rows([[2, 4, 6]], 3)
        assert basis.dimension == 2
        for v in basis.vectors:
            assert all(x.denominator == 1 for x in v)
            from math import gcd

            g = 0
            for x in v:
                g = gcd(g, x.numerator)
            assert g == 1

    def test_zero_columns(self):
        assert nullspace(RationalMatrix.zeros(2, 0)).dimension == 0

    def test_no_rows_gives_identity(self):
        basis = nullspace(RationalMatrix(0, 3, ()))
        assert basis.dimension == 3


class TestBareiss:
    @given(small_int_matrices)
    @settings(max_examples=60, deadline=None)
    def test_echelon_rank(self, rows):
        r, pivots = bareiss_echelon(rows, len(rows[0]))
        assert r == naive_rank(rows)
        assert len(pivots) == r
        cols = [c for c, _, _ in pivots]
        assert cols == sorted(set(cols))  # pivot columns strictly increase


class TestTracker:
    def test_incremental_matches_span_rank(self):
        vectors = [[1, 0, 1], [0, 1, 1], [1, 1, 2], [2, 0, 1]]
        tracker = IntRankTracker(3)
        added = [tracker.add(v) for v in vectors]
        assert added == [True, True, False, True]
        assert tracker.rank == span_rank(vectors)

    @given(small_int_matrices)
    @settings(max_examples=60, deadline=None)
    def test_rank_agrees(self, rows):
        tracker = IntRankTracker(len(rows[0]))
        for row in rows:
            tracker.add(row)
        assert tracker.rank == naive_rank(rows)

    def test_contains(self):
        tracker = IntRankTracker(3)
        tracker.add([1, 0, 0])
        tracker.add([0, 1, 0])
        assert tracker.contains([3, -2, 0])
        assert not tracker.contains([0, 0, 1])

    def test_length_mismatch(self):
        tracker = IntRankTracker(3)
        with pytest.raises(linalg.DimensionMismatchError):
            tracker.add([1, 2])


class TestRegressionMatrices:
    """Modular screen vs exact elimination on the matrices the engine
    actually builds, so the shortcut is exercised at realistic sizes."""

    def _mu_rows(self, text, r):
        from syzplane.engine import CurveAnalysis

        ctx = CurveAnalysis(poly.parse(text))
        rows, _, _ = ctx._mu_rows(r)
        return rows

    def test_sextic_syzygy_matrix(self):
        rows = self._mu_rows(
            "(x^2+y^2-z^2)*(2*x^2+y^2-z^2)*(x^2+2*y^2-z^2)", 3
        )
        ncols = 3 * poly.basis_dimension(3)
        exact = rank_int_rows(rows, ncols)
        assert exact == bareiss_echelon(rows, ncols)[0]
        for p in screen_primes():
            assert rank_mod(rows, ncols, p) <= exact
        assert ncols - exact == 2  # two independent syzygies in degree 3

    def test_full_rank_certificate_path(self):
        # degree below the minimal relation degree: trivial kernel, so the
        # single-prime certificate short-circuits exact elimination
        rows = self._mu_rows("(x^2+y^2-z^2)*(2*x^2+y^2-z^2)*(x^2+2*y^2-z^2)", 2)
        ncols = 3 * poly.basis_dimension(2)
        assert rank_int_rows(rows, ncols) == ncols
        assert nullspace_int_rows(rows, ncols).dimension == 0
