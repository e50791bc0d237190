import pytest

from crystalmonoid.crystal import CrystalError, ResourceLimit, _weight, parse_type
from crystalmonoid.presentations import (
    THETA,
    Oracle,
    build_presentation,
    crystal_equivalent,
    is_tableau_reading,
    minimal_nonadmissible_columns,
    one_step_neighbors,
    oracle_nf,
    tableau_factorization,
    theta,
    theta_inverse,
)
from crystalmonoid.checks import all_words
from crystalmonoid.tableaux import _admissible

TYPES = ["A:2", "A:3", "B:1", "B:2", "B:3", "C:1", "C:2", "C:3", "D:2", "D:3", "D:4", "G2"]


@pytest.mark.parametrize("spec", TYPES)
def test_relations_preserve_crystal_position(spec):
    ct = parse_type(spec)
    p = build_presentation(ct)
    assert p.relations
    for u, v in p.relations:
        assert _weight(ct, u) == _weight(ct, v)
        assert crystal_equivalent(ct, u, v)


@pytest.mark.parametrize("spec", TYPES)
def test_only_g2_loses_literal_instances(spec):
    p = build_presentation(parse_type(spec))
    if spec == "G2":
        assert p.rejected == (((-3, -1, -2), (-3, -2, -1)),)
        assert p.repaired == (((-3, -1, -2), (-1, -3, -2)),)
    else:
        assert p.rejected == () and p.repaired == ()


def test_g2_defining_pairs():
    rels = set(build_presentation(parse_type("G2")).relations)
    assert ((1, -1), ()) in rels
    assert ((1, 0), (1,)) in rels
    assert ((1, 2, 3), (1, 1, 0)) in rels


def test_theta_is_a_bijection():
    assert len(set(THETA.values())) == len(THETA)
    for ab, cd in THETA.items():
        assert theta(ab) == cd and theta_inverse(cd) == ab
    assert theta((1, 1)) is None


def test_crystal_equivalence_examples():
    ct = parse_type("A:3")
    assert crystal_equivalent(ct, (2, 1, 1, 3), (2, 3, 1, 1))
    assert not crystal_equivalent(ct, (1,), (2,))
    assert not crystal_equivalent(ct, (1, 2), (2, 1))


def test_minimal_nonadmissible_columns():
    for spec in ("B:2", "C:2", "C:3", "D:3"):
        ct = parse_type(spec)
        cols = minimal_nonadmissible_columns(ct)
        assert cols
        for c in cols:
            assert not _admissible(ct, c)
            assert _admissible(ct, c[1:]) and _admissible(ct, c[:-1])
    assert minimal_nonadmissible_columns(parse_type("A:3")) == []


@pytest.mark.parametrize("spec", ["A:2", "A:3", "B:2", "C:2", "C:3", "D:2", "D:3", "G2"])
def test_oracle_finds_one_tableau_per_class(spec):
    ct = parse_type(spec)
    o = Oracle(build_presentation(ct))
    for w in all_words(ct, 4):
        nf = o(w)
        assert is_tableau_reading(ct, nf)
        assert _weight(ct, nf) == _weight(ct, w)


def test_oracle_limits():
    p = build_presentation(parse_type("C:3"))
    with pytest.raises(ResourceLimit):
        oracle_nf(p, (-1, -2, -3, 3, 2, 1, -1, -2), max_class_size=2)
    with pytest.raises(CrystalError):
        Oracle(p, max_class_size=0)
    assert oracle_nf(build_presentation(parse_type("G2")), (1, -1)) == ()


def test_neighbors_and_factorization():
    ct = parse_type("A:2")
    p = build_presentation(ct)
    assert (1, 1, 2) in one_step_neighbors(p, (1, 2, 1))
    assert (1, 2, 1) not in one_step_neighbors(p, (1, 2, 1))
    assert tableau_factorization(ct, ()) == ()
    assert tableau_factorization(ct, (1, 1, 2)) == ((1,), (1, 2))
    assert tableau_factorization(ct, (1, 2, 1)) is None


def test_rank_guard():
    with pytest.raises(ResourceLimit):
        build_presentation(parse_type("C:6"))


def test_json_dump():
    import json
    data = json.loads(build_presentation(parse_type("A:2")).to_json())
    assert {"lhs", "rhs"} <= set(data[0])
