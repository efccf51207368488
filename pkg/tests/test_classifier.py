import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syzplane import classifier as cl
from syzplane.classifier import (
    STATUS_CANDIDATE,
    STATUS_EXCLUDED_BEZOUT,
    STATUS_EXCLUDED_D1_BOUND,
    STATUS_EXCLUDED_HIRZEBRUCH,
    STATUS_EXCLUDED_NO_SPLIT,
    Witness,
    enumerate_nodal_tacnodal,
    minimal_pog_census_criterion,
    nodal_tacnodal_classification_report,
    pog_filter,
)
from syzplane.combinatorics import (
    WeakCombinatorics as W,
    bezout_check,
    pog_exponent_sum,
)

# (k, n2, t3) -> single surviving witness, pinned from the strict
# enumeration over all nodal-tacnodal censuses with 2 <= k <= 5
STRICT_SURVIVORS = {
    (2, 2, 1): (2, 2, 3),
    (3, 2, 5): (3, 3, 4),
    (3, 4, 4): (3, 3, 5),
    (4, 2, 11): (4, 4, 5),
    (4, 4, 10): (4, 4, 6),
    (4, 6, 9): (4, 4, 7),
}


class TestPogFilter:
    def test_bezout_exclusion(self):
        v = pog_filter(W(2, {2: 1}, t3=1))
        assert v.status == STATUS_EXCLUDED_BEZOUT
        assert not v.witnesses

    def test_hirzebruch_exclusion(self):
        v = pog_filter(W(5, {3: 2}, t3=17))
        assert v.status == STATUS_EXCLUDED_HIRZEBRUCH

    def test_sole_witness_after_level_cut(self):
        v = pog_filter(W(4, t3=12))
        assert v.status == STATUS_CANDIDATE
        assert [w.as_tuple() for w in v.witnesses] == [(4, 4, 4)]

    def test_survivor_with_mixed_singularities(self):
        v = pog_filter(W(5, {2: 3, 3: 1}, t3=17))
        assert v.status == STATUS_CANDIDATE
        assert (5, 5, 7) in [w.as_tuple() for w in v.witnesses]

    def test_strict_level_drops_the_nearly_free_shape(self):
        loose = pog_filter(W(4, t3=12))
        strict = pog_filter(W(4, t3=12), strict_level=True)
        assert loose.is_candidate
        assert not strict.is_candidate
        assert strict.status in (STATUS_EXCLUDED_NO_SPLIT, STATUS_EXCLUDED_D1_BOUND)

    @given(
        st.integers(min_value=2, max_value=6),
        st.integers(min_value=0, max_value=30),
        st.booleans(),
    )
    @settings(max_examples=120, deadline=None)
    def test_invariants_on_nodal_tacnodal(self, k, t3, strict):
        n2 = 2 * k * (k - 1) - 2 * t3
        if n2 < 0:
            return
        wc = W(k, {2: n2}, t3=t3)
        v = pog_filter(wc, strict_level=strict)
        if v.is_candidate:
            assert bezout_check(wc)
            assert v.witnesses
        for w in v.witnesses:
            assert w.d1 + w.d2 == 2 * k
            assert w.d1 * w.d2 + w.h == pog_exponent_sum(wc)
            assert 1 <= w.d1 <= w.d2
            if strict:
                assert w.h > w.d2
            else:
                assert w.h >= w.d2

    @given(st.integers(min_value=2, max_value=6), st.integers(min_value=0, max_value=30))
    @settings(max_examples=80, deadline=None)
    def test_strict_witnesses_subset_of_loose(self, k, t3):
        n2 = 2 * k * (k - 1) - 2 * t3
        if n2 < 0:
            return
        wc = W(k, {2: n2}, t3=t3)
        loose = {w.as_tuple() for w in pog_filter(wc).witnesses}
        strict = {w.as_tuple() for w in pog_filter(wc, strict_level=True).witnesses}
        assert strict <= loose


class TestEnumeration:
    def test_pinned_survivors(self):
        for k in (2, 3, 4, 5):
            verdicts = enumerate_nodal_tacnodal(k)
            assert len(verdicts) == k * (k - 1) + 1
            seen_t3 = [v.wc.t3 for v in verdicts]
            assert seen_t3 == sorted(seen_t3)
            for v in verdicts:
                key = (v.wc.k, v.wc.n(2), v.wc.t3)
                if v.is_candidate:
                    assert key in STRICT_SURVIVORS, key
                    assert len(v.witnesses) == 1
                    assert v.witnesses[0].as_tuple() == STRICT_SURVIVORS[key]
                else:
                    assert key not in STRICT_SURVIVORS, key

    def test_all_six_survivors_appear(self):
        found = {}
        for k in (2, 3, 4, 5):
            for v in enumerate_nodal_tacnodal(k):
                if v.is_candidate:
                    found[(v.wc.k, v.wc.n(2), v.wc.t3)] = v.witnesses[0].as_tuple()
        assert found == STRICT_SURVIVORS

    def test_k_must_be_at_least_two(self):
        with pytest.raises(ValueError):
            enumerate_nodal_tacnodal(1)


class TestMinimalPogCriterion:
    def test_examples(self):
        c = minimal_pog_census_criterion(3, 5)
        assert c.n2_forced == 2 and c.discriminant == 1 and not c.impossible
        c = minimal_pog_census_criterion(4, 12)
        assert c.n2_forced == 0 and c.discriminant == 5
        c = minimal_pog_census_criterion(5, 10)
        assert c.impossible and c.discriminant == -35

    @given(st.integers(min_value=2, max_value=9), st.integers(min_value=0, max_value=80))
    @settings(max_examples=120, deadline=None)
    def test_forced_counts_are_consistent(self, k, t3):
        c = minimal_pog_census_criterion(k, t3)
        if c.n2_forced is not None:
            assert c.n2_forced in (0, 2)
            assert c.n2_forced == 2 * k * (k - 1) - 2 * t3
            assert c.discriminant >= 0

    def test_validation(self):
        with pytest.raises(ValueError):
            minimal_pog_census_criterion(1, 0)
        with pytest.raises(ValueError):
            minimal_pog_census_criterion(3, -1)


class TestReport:
    def test_structure(self):
        rep = nodal_tacnodal_classification_report()
        assert rep.candidate_count == 6
        k5 = rep.verdicts_for(5)
        assert len(k5) == 21
        assert not any(v.is_candidate for v in k5)
        assert {row.census for row in rep.rows} == set(STRICT_SURVIVORS)

    def test_realization_labels(self):
        rep = nodal_tacnodal_classification_report()
        labels = {row.census: row.label for row in rep.rows}
        assert labels[(3, 4, 4)] == "plus-one generated (3,3,5)"
        assert labels[(4, 4, 10)] == "4-syzygy (4,5,5,5) at sampled parameters"
        assert labels[(4, 6, 9)] == "5-syzygy (5,5,5,5,5) at sampled parameters"
        entries = {row.census: row.catalog_entry for row in rep.rows}
        assert entries[(3, 4, 4)] == "three_conics_pencil"
        assert entries[(4, 4, 10)] == "megyesi_family"
        assert entries[(4, 6, 9)] == "t_family"
        assert entries[(2, 2, 1)] is None

    def test_json_shape(self):
        rep = nodal_tacnodal_classification_report()
        payload = rep.to_json_dict()
        assert len(payload["candidates"]) == 6
        realizations = {row["realization"] for row in payload["candidates"]}
        assert realizations == {"plus_one_generated", "higher_syzygy"}


class TestWitness:
    def test_tuple_round_trip(self):
        w = Witness(3, 3, 5)
        assert w.as_tuple() == (3, 3, 5)
