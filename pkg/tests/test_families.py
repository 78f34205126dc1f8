from fractions import Fraction

import pytest

from coxdeform.families import (FAMILIES, ROOT_FAMILIES, Arrangement, FamilySpec, Hyperplane,
                                arrangement, build, dedup_count, negate, parse_spec, rank_of,
                                reflect)


def keyset(arr):
    return arr.keys()


def test_bc1_list():
    arr = build(FamilySpec("BC", 1, 0, 1))
    eqs = [(H.normal, H.offset) for H in arr.hyperplanes]
    assert eqs == [((1,), 0), ((1,), 1), ((2,), 0), ((2,), 1)]
    assert arr.m == 2


def test_a2_linial():
    arr = build(FamilySpec("A", 2, 1, 1))
    assert [(H.normal, H.offset) for H in arr.hyperplanes] == [((1, -1), 1)]
    assert arr.m == 1


def test_d2_list():
    arr = build(FamilySpec("D", 2, 0, 1))
    assert {(H.normal, H.offset) for H in arr.hyperplanes} == {
        ((1, -1), 0), ((1, -1), 1), ((1, 1), 0), ((1, 1), 1)}


@pytest.mark.parametrize("spec, h", [
    (FamilySpec("BC", 1, 0, 1), 3),
    (FamilySpec("A", 3, 1, 1), 3),
    (FamilySpec("BC", 2, 0, 2), 14),
])
def test_dedup_count(spec, h):
    assert dedup_count(build(spec)) == h


def test_canonical_key_handles_scaling():
    assert Hyperplane((2, 0), 1).key() == ((1, 0), Fraction(1, 2))
    assert Hyperplane((-1, 1), 3).key() == ((1, -1), Fraction(-3))
    with pytest.raises(ValueError):
        Hyperplane((0, 0), 1)


@pytest.mark.parametrize("spec, l", [
    (FamilySpec("A", 3, 0, 1), 2), (FamilySpec("BC", 4, 0, 1), 4), (FamilySpec("D", 2, 0, 1), 2)])
def test_rank(spec, l):
    assert rank_of(spec) == l


def test_reflect_examples():
    assert reflect(FamilySpec("A", 2, -3, -1)) == FamilySpec("A", 2, 1, 3)
    assert reflect(FamilySpec("BC", 1, -1, 0)) == FamilySpec("BC", 1, 0, 1)
    assert reflect(FamilySpec("D", 2, 0, 1)) == FamilySpec("D", 2, -1, 0)
    with pytest.raises(ValueError):
        reflect(FamilySpec("SPECIAL62", 2, a=1))


@pytest.mark.parametrize("family", ROOT_FAMILIES)
@pytest.mark.parametrize("lo, hi", [(-2, 1), (0, 2), (1, 3), (-1, -1)])
def test_reflect_is_negation(family, lo, hi):
    s = FamilySpec(family, 3, lo, hi)
    assert keyset(negate(build(s))) == keyset(build(reflect(s)))
    assert dedup_count(build(s)) == dedup_count(build(reflect(s)))


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("lo, hi", [(0, 0), (-1, 2), (1, 3)])
def test_a_count_formula(n, lo, hi):
    assert dedup_count(build(FamilySpec("A", n, lo, hi))) == (hi - lo + 1) * n * (n - 1) // 2


def test_empty_interval():
    arr = build(FamilySpec("B", 3, 2, 1))
    assert arr.dim == 3 and len(arr) == 0


def test_build_is_deterministic():
    s = FamilySpec("BC", 3, -1, 2)
    assert build(s).hyperplanes == build(s).hyperplanes


def test_specials():
    s62 = build(FamilySpec("SPECIAL62", 1, a=2))
    assert sorted(H.key() for H in s62.hyperplanes) == sorted(
        [((1,), Fraction(k)) for k in (0, 1, 2)] + [((1,), Fraction(1, 2)), ((1,), Fraction(3, 2))])
    s63 = build(FamilySpec("SPECIAL63", 2, a=1))
    assert {(H.normal, H.offset) for H in s63.hyperplanes} == {((2, 0), 1), ((0, 2), 1)}


def test_dq_adds_coordinate_hyperplanes():
    arr = build(FamilySpec("DQ", 3, 0, 1))
    singles = [H for H in arr.hyperplanes if sum(1 for c in H.normal if c) == 1]
    assert len(singles) == 3 and all(H.offset == 0 for H in singles)


@pytest.mark.parametrize("text, spec", [
    ("BC:3:-1:2", FamilySpec("BC", 3, -1, 2)),
    ("a:2:1:1", FamilySpec("A", 2, 1, 1)),
    ("SPECIAL63:2:3", FamilySpec("SPECIAL63", 2, a=3)),
    ("DQ:3:2", FamilySpec("DQ", 3, 0, 2)),
])
def test_parse_spec(text, spec):
    assert parse_spec(text) == spec
    assert parse_spec(str(spec)) == spec


@pytest.mark.parametrize("bad", ["", "A:2", "X:2:0:1", "A:1:0:1", "SPECIAL62:2:0:1", "D:1:0:1",
                                 "SPECIAL63:1:1", "B:0:0:1"])
def test_parse_spec_rejects(bad):
    with pytest.raises(ValueError):
        parse_spec(bad)


def test_arrangement_modulus_class():
    assert arrangement(2, [((1, -1), 3)]).m == 1
    assert arrangement(2, [((1, 1), 3)]).m == 2
    with pytest.raises(ValueError):
        Arrangement(2, (Hyperplane((1, 1), 0),), m=1)
    with pytest.raises(ValueError):
        arrangement(2, [((1, 0, 0), 1)])


def test_all_families_buildable():
    for fam in FAMILIES:
        s = FamilySpec(fam, 3, a=2) if fam.startswith("SPECIAL") else FamilySpec(fam, 3, -1, 1)
        assert build(s).dim == 3
