import pytest

from crystalmonoid.crystal import CrystalError, _raise, parse_type
from crystalmonoid.tableaux import (
    Shape,
    _is_column_word,
    _pair_ok,
    _sigma,
    column,
    dn_pair_ok,
    enumerate_admissible_columns,
    format_tabloid,
    highest_column,
    highest_weight_tableau,
    is_admissible,
    is_tableau,
    letters_as_tabloid,
    make_admissible,
    make_tabloid,
    parse_column,
    parse_tabloid,
    precedes,
    refactor,
    split,
)

G2_COLUMNS = {
    (1,), (2,), (3,), (0,), (-3,), (-2,), (-1,),
    (1, 2), (1, 3), (2, 3), (2, 0), (2, -3), (0, -3), (3, -3), (3, 0), (3, -2), (0, -2),
    (-3, -2), (-3, -1), (-2, -1), (0, 0),
}

# edges of the G2 Hasse diagram, left end first
G2_HASSE = [
    ((1, 2), (1, 3)), ((1, 3), (0, 0)), ((1, 3), (2, 3)), ((1, 3), (2, 0)), ((1, 3), (3, 0)),
    ((2, 3), (2, -3)), ((2, 0), (2, -3)), ((2, -3), (0, -3)), ((2, -3), (3, -3)), ((0, 0), (-3, -1)),
    ((0, -3), (-3, -1)), ((3, -3), (3, -2)), ((3, 0), (3, -2)), ((3, -2), (0, -2)), ((3, -2), (-3, -2)),
    ((0, -2), (-3, -1)), ((-3, -2), (-3, -1)), ((-3, -1), (-2, -1)), ((1, 3), (1,)), ((1,), (2,)),
    ((2, -3), (2,)), ((2,), (3,)), ((3, -2), (3,)), ((3,), (0,)), ((-3, -1), (-3,)), ((0,), (-3,)),
    ((-2, -1), (-2,)), ((-3,), (-2,)), ((-2,), (-1,)),
]

COUNTS = {"A:2": 3, "A:3": 7, "A:4": 15, "B:2": 15, "B:3": 63, "B:4": 255, "C:2": 9, "C:3": 34,
          "C:4": 125, "D:2": 10, "D:3": 41, "D:4": 162, "G2": 21}


def test_g2_census():
    cols = enumerate_admissible_columns(parse_type("G2"))
    assert {c.letters for c in cols} == G2_COLUMNS
    assert len(cols) == 21


@pytest.mark.parametrize("spec,count", sorted(COUNTS.items()))
def test_column_counts(spec, count):
    ct = parse_type(spec)
    cols = enumerate_admissible_columns(ct)
    assert len(cols) == count
    if ct.family == "A":
        # every strictly increasing word is a column, and all are admissible
        assert count == 2 ** ct.n - 1


@pytest.mark.parametrize("spec", ["B:2", "B:3", "C:2", "C:3", "D:2", "D:3", "D:4"])
def test_admissible_iff_split(spec):
    ct = parse_type(spec)
    level = [(x,) for x in ct.alphabet]
    # type D column words may alternate n and -n without bound; admissible ones have height <= n
    for _ in range(ct.n + 1):
        nxt = []
        for w in level:
            assert is_admissible(ct, w) == (split(ct, w) is not None), w
            nxt += [w + (x,) for x in ct.alphabet if _is_column_word(ct, w + (x,))]
        level = nxt


def test_split_rejects_non_columns():
    ct = parse_type("C:3")
    assert split(ct, (1, 2, -2, -1)) is None
    assert not is_admissible(ct, (1, 2, -2, -1))
    with pytest.raises(CrystalError):
        split(ct, (2, 1))


@pytest.mark.parametrize("spec", ["B:2", "C:3", "D:3"])
def test_split_row_order(spec):
    # the left split is entrywise no larger than the right split
    ct = parse_type(spec)
    for c in enumerate_admissible_columns(ct):
        assert len(c.l_split) == len(c.r_split) == len(c)
        assert all(ct.le(a, b) or ct.incomparable(a, b) for a, b in zip(c.l_split, c.r_split))


def test_g2_hasse_diagram():
    ct = parse_type("G2")
    cl = set(G2_HASSE)
    while True:
        new = {(a, d) for a, b in cl for c, d in cl if b == c} - cl
        if not new:
            break
        cl |= new
    ours = {(a, b) for a in G2_COLUMNS for b in G2_COLUMNS if a != b and precedes(ct, a, b)}
    assert ours == cl
    assert not precedes(ct, (0,), (0,))
    assert not precedes(ct, (0, 0), (0, 0))


def _row_filled(ct, cols):
    hs = [len(c) for c in cols]
    if any(a > b for a, b in zip(hs, hs[1:])):
        return False
    if not all(c in (highest_column(ct, len(c)), highest_column(ct, len(c), True)) for c in cols):
        return False
    full = {c for c in cols if len(c) == ct.n}
    return len(full) <= 1


@pytest.mark.parametrize("spec", ["A:3", "B:2", "B:3", "C:2", "C:3", "D:2", "D:3", "D:4", "G2"])
def test_tableau_predicate_matches_crystal(spec):
    # a two-column tabloid is a tableau iff raising its reading gives a row-filled tabloid
    ct = parse_type(spec)
    sigma = _sigma(ct)
    for left in sigma:
        for right in sigma:
            w0, _ = _raise(ct, right + left)
            truth = _row_filled(ct, refactor(ct, w0, (len(right), len(left))))
            assert _pair_ok(ct, left, right) == truth, (left, right)


def test_dn_pair_condition():
    # some D pairs satisfy precedes yet fail the a-configuration clause, and the crystal agrees
    ct = parse_type("D:3")
    sigma = _sigma(ct)
    extra = [(l, r) for l in sigma for r in sigma if precedes(ct, l, r) and not dn_pair_ok(ct, l, r)]
    assert extra
    for left, right in extra:
        w0, _ = _raise(ct, right + left)
        assert not _row_filled(ct, refactor(ct, w0, (len(right), len(left))))
    for spec in ("A:3", "C:3", "G2"):
        other = parse_type(spec)
        cols = enumerate_admissible_columns(other)
        assert all(dn_pair_ok(other, a, b) for a in cols for b in cols)


def test_column_constructors():
    ct = parse_type("B:2")
    assert parse_column(ct, (2, 1)) is None
    assert parse_column(ct, (0, 0)).height == 2
    assert make_admissible(ct, (1, 2, 0)) is None
    assert str(column(ct, (1, 0))) == "[1 0]"
    with pytest.raises(CrystalError):
        column(ct, (1, 2, 0))


def test_tabloids():
    ct = parse_type("A:3")
    t = parse_tabloid(ct, "[1] [1 2]")
    assert t.reading() == (1, 1, 2)
    assert t.heights == (1, 2)
    assert is_tableau(ct, t)
    assert not is_tableau(ct, make_tabloid(ct, [(1, 2), (1,)]))
    assert format_tabloid(t.columns) == "[1] [1 2]"
    assert letters_as_tabloid(ct, (2, 1)).heights == (1, 1)
    with pytest.raises(CrystalError):
        make_tabloid(ct, [(2, 1)])
    with pytest.raises(CrystalError):
        parse_tabloid(ct, "1 2")


def test_shapes_and_highest_tableaux():
    assert Shape.from_rows((2, 1)).heights == (2, 1)
    assert Shape((2, 1, 1)).rows == (3, 1)
    ct = parse_type("D:3")
    t = highest_weight_tableau(ct, Shape((3, 1), bar=True))
    assert t.columns[1].letters == (1, 2, -3)
    assert highest_weight_tableau(parse_type("G2"), (2, 1)).reading() == (1, 1, 2)
    with pytest.raises(CrystalError):
        highest_weight_tableau(ct, (1, 2))
