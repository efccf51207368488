"""Acceptance suite: one test per published criterion.

Each test records its verdict in the shared registry; the terminal
summary hook prints one PASS/FAIL line per criterion after the run.
Numbers asserted here are exact integer or rational equalities.
"""

import time
from fractions import Fraction

import pytest

from syzplane import catalog, classifier, engine, poly
from syzplane.combinatorics import (
    WeakCombinatorics,
    bezout_check,
    hirzebruch_check,
    hirzebruch_sides,
    poincare_split,
    pog_exponent_sum,
    total_tjurina,
)
from syzplane.linalg import IntRankTracker, bareiss_echelon, rank_mod, screen_primes

from _acceptance_registry import recording

PENCIL_KEYS = [("three_conics_pencil", v) for v in (2, 3, 5)]
MEGYESI_KEYS = [("megyesi_family", v) for v in (2, 3)]
T_KEYS = [("t_family", v) for v in (1, 2)]


def test_criterion_1_pencil_family(profiles):
    with recording(1):
        for key in PENCIL_KEYS:
            p = profiles[key]
            assert p.classification == engine.CLASS_PLUS_ONE_GENERATED, key
            assert p.generator_degrees == (3, 3, 5), key
            assert p.tau == 16, key
            assert p.nu == 3, key
            assert p.delta_level == 2, key
            assert engine.verify_dimca_sticlaru(p), key


def test_criterion_2_megyesi_family(profiles):
    with recording(2):
        for key in MEGYESI_KEYS:
            p = profiles[key]
            assert len(p.generator_degrees) == 4, key
            assert p.generator_degrees == (4, 5, 5, 5), key
            assert p.tau == 34, key


def test_criterion_3_t_family(profiles):
    with recording(3):
        for key in T_KEYS:
            p = profiles[key]
            assert len(p.generator_degrees) == 5, key
            assert p.generator_degrees == (5, 5, 5, 5, 5), key
            assert p.tau == 33, key
        # the budget for this degree-8 quintuple-generator case is three
        # minutes; a fresh uncached pass must fit comfortably
        start = time.monotonic()
        entry = catalog.get_entry("t_family")
        fresh = engine.analyze(catalog.build_polynomial(entry, 1))
        elapsed = time.monotonic() - start
        assert fresh.generator_degrees == (5, 5, 5, 5, 5)
        assert elapsed < 180.0, "fresh analysis took %.1f s" % elapsed


def test_criterion_4_ziegler_pair(profiles, ziegler_cmp):
    with recording(4):
        c1 = profiles[("ziegler_C1", None)]
        c2 = profiles[("ziegler_C2", None)]
        assert c1.generator_degrees == (5, 5, 5, 5, 5)
        assert c1.second_syzygy_degrees == (13, 13, 13)
        assert c2.generator_degrees == (4, 5, 5, 6)
        assert c2.second_syzygy_degrees == (13, 14)
        assert ziegler_cmp.verdict == "strong_ziegler_candidate"
        assert 4 in ziegler_cmp.differing_degrees


def test_criterion_5_split_table():
    with recording(5):
        wc = WeakCombinatorics(4, t3=12)
        assert poincare_split(wc, 4) == (4, 4)
        assert poincare_split(wc, 5) == (3, 5)
        assert poincare_split(wc, 6) is None
        assert poincare_split(wc, 7) is None
        verdict = classifier.pog_filter(wc)
        assert verdict.is_candidate
        assert [w.as_tuple() for w in verdict.witnesses] == [(4, 4, 4)]


def test_criterion_6_hirzebruch_exclusion():
    with recording(6):
        excluded = WeakCombinatorics(5, {3: 2}, t3=17)
        assert hirzebruch_check(excluded) == "violated"
        assert hirzebruch_sides(excluded) == (Fraction(83, 2), Fraction(85, 2))
        survivor = WeakCombinatorics(5, {2: 3, 3: 1}, t3=17)
        assert bezout_check(survivor)
        assert hirzebruch_check(survivor) == "satisfied"
        assert classifier.pog_filter(survivor).is_candidate


def test_criterion_7_enumeration():
    with recording(7):
        expected = {
            (2, 2, 1): (2, 2, 3),
            (3, 2, 5): (3, 3, 4),
            (3, 4, 4): (3, 3, 5),
            (4, 2, 11): (4, 4, 5),
            (4, 4, 10): (4, 4, 6),
            (4, 6, 9): (4, 4, 7),
        }
        found = {}
        for k in (2, 3, 4, 5):
            for v in classifier.enumerate_nodal_tacnodal(k):
                if v.is_candidate:
                    assert len(v.witnesses) == 1, v
                    found[(v.wc.k, v.wc.n(2), v.wc.t3)] = v.witnesses[0].as_tuple()
        assert found == expected
        assert not any(k == 5 for k, _, _ in found)


def test_criterion_8_property_suite(sample_polys, profiles, catalog_runs):
    with recording(8):
        # Euler relation on every catalog polynomial
        for key, f in sample_polys.items():
            assert poly.euler_identity_holds(f), key

        # Koszul syzygies present in AR(f)_{d-1}
        for key, f in sample_polys.items():
            ctx = engine.CurveAnalysis(f)
            d = f.degree
            piece = ctx.ar_piece(d - 1)
            n = poly.basis_dimension(d - 1)
            tracker = IntRankTracker(3 * n)
            for v in piece.basis.vectors:
                tracker.add(v)
            idx = poly.monomial_index(d - 1)
            fp = f.primitive()
            parts = [fp.partial(var) for var in ("x", "y", "z")]
            for i, j in ((0, 1), (0, 2), (1, 2)):
                vec = [0] * (3 * n)
                for m, c in parts[j].terms.items():
                    vec[i * n + idx[m]] = int(c)
                for m, c in parts[i].terms.items():
                    vec[j * n + idx[m]] = -int(c)
                assert any(vec), key
                assert tracker.contains(vec), (key, i, j)

        # Hilbert-numerator identity balances for every computed profile
        for key, p in profiles.items():
            assert p.checks.hilbert_numerator, key
            assert p.checks.euler, key

        # tau from linear algebra equals tau from the declared census
        for key, run in catalog_runs.items():
            declared = catalog.get_entry(run.entry).declared_tau
            assert run.profile.tau == declared, key
            assert run.tau_census_ok, key

        # split/exponent-sum cross-checks on the plus-one generated curves
        for name in ("three_conics_pencil", "ziegler_base"):
            entry = catalog.get_entry(name)
            wc = entry.declared_wc
            d1, d2, d3 = entry.expected.generator_degrees
            assert pog_exponent_sum(wc) == d1 * d2 + d3, name
            assert poincare_split(wc, d3) == (d1, d2), name
            assert total_tjurina(wc) == entry.expected.tau, name

        # modular screen never contradicts exact elimination on the
        # syzygy matrices at the minimal degree
        for key, f in sample_polys.items():
            ctx = engine.CurveAnalysis(f)
            p = profiles[key]
            rows, _, ncols = ctx._mu_rows(p.mdr)
            exact, _ = bareiss_echelon(rows, ncols)
            for prime in screen_primes():
                assert rank_mod(rows, ncols, prime) <= exact, key
            assert ncols - exact == p.ar_hilbert[p.mdr], key


def test_criterion_9_degeneration_detection():
    with recording(9):
        pencil = catalog.get_entry("three_conics_pencil")
        for v in (0, 1, -1):
            with pytest.raises(catalog.ExcludedParameterError):
                catalog.specialize(pencil, v)

        megyesi = catalog.get_entry("megyesi_family")
        # scanning small rationals: every admissible value keeps tau at
        # the declared 34, so the rational degenerations sit exactly on
        # the excluded set; probing one with the gate lifted must raise
        grid = [2, 3, Fraction(1, 2), Fraction(5, 3), -2]
        for result in catalog.scan_parameters(megyesi, grid):
            assert result.status == "ok" and result.tau == 34, result
        with pytest.raises(catalog.DegenerateParameterError):
            catalog.specialize(megyesi, 1, check_exclusions=False)
        with pytest.raises(catalog.DegenerateParameterError):
            catalog.specialize(megyesi, 0, check_exclusions=False)
        statuses = [
            r.status
            for r in catalog.scan_parameters(
                megyesi, [0, 1, -1], check_exclusions=False
            )
        ]
        assert statuses == ["degenerate"] * 3
