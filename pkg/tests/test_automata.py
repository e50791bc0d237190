import json
import random

import pytest

from crystalmonoid.automata import (
    G2_OVERLAY,
    PassTrace,
    carry_size,
    components_isomorphic,
    equal,
    incremental_nf,
    irreducible_words,
    left_mul,
    left_mul_symbols,
    length_bound_report,
    materialize_transducer,
    nf_dfa,
    right_mul,
    right_mul_symbols,
    same_position,
)
from crystalmonoid.checks import check_dfa
from crystalmonoid.crystal import CrystalError, parse_type
from crystalmonoid.plactic import build_rule_table, nf_columns, rewrite_nf


def test_dfa_examples():
    ct = parse_type("A:2")
    d = nf_dfa(ct)
    assert d.accepts([])
    assert d.accepts([(1,), (1, 2)])
    assert not d.accepts([(1, 2), (1,)])
    assert rewrite_nf(ct, [(1, 2), (1,)]) != ((1, 2), (1,))
    assert len(d.states) == len(build_rule_table(ct).sigma) + 1
    data = json.loads(d.to_json())
    assert data["states"][0] == "start"


@pytest.mark.parametrize("spec", ["A:2", "A:3", "B:2", "C:2", "D:2", "G2"])
def test_dfa_accepts_exactly_irreducible_words(spec):
    ct = parse_type(spec)
    length = 3 if spec == "G2" else 4
    assert check_dfa(ct, max_length=length).ok


def test_multiplication_examples():
    a2 = parse_type("A:2")
    for x in a2.alphabet:
        assert right_mul(a2, [], x) == ((x,),)
        assert left_mul(a2, x, []) == ((x,),)
    assert right_mul(a2, [(1, 2)], 1) == ((1,), (1, 2))
    assert right_mul(a2, [(1,)], 2) == ((1, 2),)
    assert right_mul(parse_type("B:2"), [(1, 2)], 0) == ((1, 2),)
    g2 = parse_type("G2")
    assert left_mul(g2, 1, [(2, 3)]) == ((1,), (1,))
    with pytest.raises(CrystalError):
        # 23 does not precede itself, so c_23 c_23 is not a normal form
        left_mul(g2, 1, [(2, 3), (2, 3)])


@pytest.mark.parametrize("spec", ["A:2", "A:3", "B:2", "C:2", "C:3", "D:2", "D:3", "G2"])
def test_passes_match_rewriting(spec):
    ct = parse_type(spec)
    t = build_rule_table(ct)
    length = 3 if len(t.sigma) > 30 else 4
    for u in irreducible_words(t, length):
        for x in t.letter_symbol.values():
            tr = PassTrace()
            assert right_mul_symbols(t, u, x, tr) == t.rewrite(u + (x,))
            assert tr.heads == list(range(len(u) - 1, -1, -1))
            assert tr.max_window <= 3
            tl = PassTrace()
            assert left_mul_symbols(t, x, u, tl) == t.rewrite((x,) + u)
            assert tl.heads == list(range(len(u)))
            assert tl.max_window <= 3


def test_carry_sizes():
    assert carry_size(parse_type("G2"), "right") == 2
    assert carry_size(parse_type("G2"), "left") == 1
    assert carry_size(parse_type("D:3"), "right") == 1
    with pytest.raises(CrystalError):
        carry_size(parse_type("A:2"), "up")


def test_overlay_rules_are_sound():
    t = build_rule_table(parse_type("G2"))
    for lhs, rhs in G2_OVERLAY:
        assert rewrite_nf(t.ct, lhs) == rhs
        assert t.is_irreducible(t.encode(rhs))


@pytest.mark.parametrize("spec", ["A:2", "A:3", "C:2", "D:2", "G2"])
def test_transducers_replay(spec):
    ct = parse_type(spec)
    t = build_rule_table(ct)
    m = len(t.sigma)
    rng = random.Random(3)
    for side in ("right", "left"):
        tr = materialize_transducer(ct, side)
        assert len(tr.states) <= m ** 3 + m + 1
        assert all(len(s) <= carry_size(ct, side) for s in tr.states)
        for x in t.letter_symbol.values():
            assert tr.multiply((), x) == (x,)
        for _ in range(300):
            w = tuple(rng.choice(ct.alphabet) for _ in range(rng.randint(0, 15)))
            u = t.rewrite(t.letters(w))
            x = rng.choice(list(t.letter_symbol.values()))
            want = right_mul_symbols(t, u, x) if side == "right" else left_mul_symbols(t, x, u)
            assert tr.multiply(u, x) == want
        data = json.loads(tr.to_json())
        assert data["side"] == side and len(data["states"]) == len(tr.states)


@pytest.mark.parametrize("spec,bound", [("A:2", 1), ("C:2", 1), ("D:2", 1), ("G2", 2)])
def test_length_bounds(spec, bound):
    ct = parse_type(spec)
    t = build_rule_table(ct)
    samples = [(u, x) for u in irreducible_words(t, 4) for x in t.letter_symbol.values()]
    for side in ("right", "left"):
        assert length_bound_report(ct, samples, side) <= bound
    assert length_bound_report(ct, [((), x) for x in t.letter_symbol.values()]) == 1


@pytest.mark.parametrize("spec", ["A:2", "A:3", "B:2", "B:3", "C:3", "D:3", "G2"])
def test_incremental_matches_rewriting(spec):
    ct = parse_type(spec)
    rng = random.Random(11)
    assert incremental_nf(ct, ()) == ()
    for _ in range(300):
        w = tuple(rng.choice(ct.alphabet) for _ in range(rng.randint(0, 20)))
        assert incremental_nf(ct, w) == nf_columns(ct, w)


def test_word_problem_examples():
    a3 = parse_type("A:3")
    assert equal(a3, (2, 1, 1, 3), (2, 3, 1, 1))
    assert same_position(a3, (2, 1, 1, 3), (2, 3, 1, 1))
    assert not equal(a3, (1,), (2,))
    assert equal(a3, (3, 1, 2), (3, 1, 2))
    assert incremental_nf(parse_type("A:2"), (1, 2)) == ((1, 2),)
    assert components_isomorphic(a3, (1, 1, 2), (1, 2, 1))
    assert not components_isomorphic(a3, (), (1, 2, 3))
    assert components_isomorphic(a3, (2, 3, 1), (2, 3, 1))


def test_isomorphism_is_an_equivalence():
    ct = parse_type("B:2")
    rng = random.Random(5)
    words = [tuple(rng.choice(ct.alphabet) for _ in range(rng.randint(0, 4))) for _ in range(40)]
    rel = {(u, v): components_isomorphic(ct, u, v) for u in words for v in words}
    for u in words:
        assert rel[u, u]
        for v in words:
            assert rel[u, v] == rel[v, u]
            if rel[u, v]:
                assert all(rel[u, z] == rel[v, z] for z in words)
