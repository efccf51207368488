"""Validate combinatorics + classifier against pinned examples."""
import sys
from fractions import Fraction

sys.path.insert(0, "/root/pkg/src")

from syzplane import combinatorics as cb
from syzplane import classifier as cl

W = cb.WeakCombinatorics

# total_tjurina
assert cb.total_tjurina(W(4, {2: 2}, t3=11)) == 35
assert cb.total_tjurina(W(3, {2: 4}, t3=4)) == 16
assert cb.total_tjurina(W(2)) == 0

# bezout
assert cb.bezout_check(W(4, t3=12)) is True
assert cb.bezout_check(W(3, {2: 4}, t3=4)) is True
assert cb.bezout_check(W(2, {2: 1}, t3=1)) is False

# arnold
assert cb.arnold_exponent(W(4, t3=12)) == Fraction(3, 4)
assert cb.arnold_exponent(W(5, {3: 2}, t3=17)) == Fraction(2, 3)
assert cb.arnold_exponent(W(3, {2: 5})) == 1

# h range
assert list(cb.admissible_h_range(W(4, t3=12))) == [4, 5, 6, 7]
assert list(cb.admissible_h_range(W(5, {3: 2}, t3=17))) == [5, 6, 7, 8, 9]
assert list(cb.admissible_h_range(W(2, {2: 2}, t3=1))) == [1, 2, 3]
try:
    cb.admissible_h_range(W(4, {4: 1}, t3=10))
    raise AssertionError("expected BoundInapplicable")
except cb.BoundInapplicableError:
    pass

# poincare split
assert cb.poincare_split(W(4, t3=12), 4) == (4, 4)
assert cb.poincare_split(W(4, t3=12), 5) == (3, 5)
assert cb.poincare_split(W(4, t3=12), 6) is None
assert cb.poincare_split(W(4, t3=12), 7) is None

# exponent sum
assert cb.pog_exponent_sum(W(3, {2: 4}, t3=4)) == 14
assert cb.pog_exponent_sum(W(2, {2: 2}, t3=1)) == 7
assert cb.pog_exponent_sum(W(2)) == 4

# hirzebruch
assert cb.hirzebruch_check(W(5, {3: 2}, t3=17)) == "violated"
assert cb.hirzebruch_sides(W(5, {3: 2}, t3=17)) == (Fraction(83, 2), Fraction(85, 2))
assert cb.hirzebruch_check(W(4, {2: 4}, t3=10)) == "satisfied"
assert cb.hirzebruch_check(W(3, {2: 4}, t3=4)) == "inapplicable"

# kobayashi
lhs, rhs = cb.kobayashi_lhs_rhs(W(1, {2: 1}), 7)
assert lhs == Fraction(3, 2) and rhs == Fraction(245, 6) - 7, (lhs, rhs)
assert cb.kobayashi_lhs_rhs(W(1, j=1), 7)[0] == 11
assert cb.kobayashi_lhs_rhs(W(1), 7)[0] == 0

# census literals
wc = cb.parse_census("k=4; n2=2, t3=11")
assert wc == W(4, {2: 2}, t3=11)
assert cb.parse_census(" k = 3 ; n2=4 ; t3=4 ") == W(3, {2: 4}, t3=4)
for bad in ("n2=2", "k=4; q=1", "k=4; n2=-1", "k=4; k=5", "k=4; n1=2"):
    try:
        cb.parse_census(bad)
        raise AssertionError("expected parse failure: %r" % bad)
    except cb.CensusParseError:
        pass

# pog_filter pinned examples
v = cl.pog_filter(W(5, {3: 2}, t3=17))
assert v.status == "excluded_hirzebruch", v
v = cl.pog_filter(W(4, t3=12))
assert v.status == "candidate" and [w.as_tuple() for w in v.witnesses] == [(4, 4, 4)], v
v = cl.pog_filter(W(5, {2: 3, 3: 1}, t3=17))
assert v.status == "candidate", v
assert (5, 5, 7) in [w.as_tuple() for w in v.witnesses], v

# enumeration: criterion-7 data
expected = {
    2: [((2, 2, 1), (2, 2, 3))],
    3: [((3, 2, 5), (3, 3, 4)), ((3, 4, 4), (3, 3, 5))],
    4: [((4, 2, 11), (4, 4, 5)), ((4, 4, 10), (4, 4, 6)), ((4, 6, 9), (4, 4, 7))],
    5: [],
}
for k, want in expected.items():
    got = []
    for v in cl.enumerate_nodal_tacnodal(k):
        assert v.wc.n(2) + 2 * v.wc.t3 == 2 * k * (k - 1)
        if v.is_candidate:
            assert len(v.witnesses) == 1, v
            got.append(((v.wc.k, v.wc.n(2), v.wc.t3), v.witnesses[0].as_tuple()))
    assert got == sorted(want, key=lambda p: p[0][2]), (k, got)

# report
rep = cl.nodal_tacnodal_classification_report()
assert rep.candidate_count == 6
assert len(rep.verdicts_for(5)) == 21 and not any(v.is_candidate for v in rep.verdicts_for(5))
labels = {row.census: row.label for row in rep.rows}
assert labels[(4, 4, 10)] == "4-syzygy (4,5,5,5) at sampled parameters"
assert labels[(4, 6, 9)] == "5-syzygy (5,5,5,5,5) at sampled parameters"
assert {row.catalog_entry for row in rep.rows} == {None, "three_conics_pencil", "megyesi_family", "t_family"}

# minimal-pog criterion
c = cl.minimal_pog_census_criterion(3, 5)
assert c.n2_forced == 2 and c.discriminant == 1
c = cl.minimal_pog_census_criterion(4, 12)
assert c.n2_forced == 0 and c.discriminant == 5
c = cl.minimal_pog_census_criterion(5, 10)
assert c.impossible and c.discriminant == -35

print("combinatorics+classifier: all pinned examples pass")
