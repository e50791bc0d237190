"""Defining relations for the five plactic monoids and a congruence-closure oracle."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .crystal import CrystalError, CrystalType, ResourceLimit, _apply, _is_highest_weight, _raise, _weight, format_word
from .tableaux import _admissible, _is_column_word, _pair_ok, n_count

MAX_CLASSICAL_RANK = 5

THETA = {
    (2, 1): (1, 2), (3, 1): (1, 3), (0, 1): (2, 3), (-3, 1): (2, 0),
    (-3, 2): (2, -3), (-2, 1): (3, 0), (-2, 2): (3, -3), (-1, 1): (0, 0),
    (-1, 2): (0, -3), (-2, 3): (3, -2), (-1, 3): (0, -2), (-1, 0): (-3, -2),
    (-1, -3): (-3, -1), (-1, -2): (-2, -1),
}
THETA_INV = {v: k for k, v in THETA.items()}


def theta(ab):
    return THETA.get(tuple(ab))


def theta_inverse(ab):
    return THETA_INV.get(tuple(ab))


@dataclass
class Presentation:
    ct: CrystalType
    relations: tuple
    # literal instances dropped because they fail the crystal check
    rejected: tuple = ()
    # replacements added for rejected G2 instances
    repaired: tuple = ()
    # side word -> words it may be replaced by
    _moves: dict = field(default_factory=dict, repr=False)
    _lengths: tuple = field(default=(), repr=False)
    _empty: tuple = field(default=(), repr=False)

    def __post_init__(self):
        moves = {}
        for u, v in self.relations:
            moves.setdefault(u, set()).add(v)
            moves.setdefault(v, set()).add(u)
        self._empty = tuple(sorted(moves.pop((), ())))
        self._moves = {k: tuple(sorted(s)) for k, s in moves.items()}
        self._lengths = tuple(sorted({len(k) for k in self._moves}))

    def to_json(self) -> str:
        rels = [{"lhs": [str(x) for x in u], "rhs": [str(x) for x in v]} for u, v in self.relations]
        return json.dumps(rels, indent=1)


def crystal_equivalent(ct: CrystalType, u, v) -> bool:
    """Whether ``u`` and ``v`` sit in the same position of isomorphic components.

    The raising path of ``u`` must take ``v`` to a highest-weight word of the
    same weight; finite-type components are determined by their highest weight.
    """
    u0, seq = _raise(ct, tuple(u))
    v0 = _apply(ct, tuple(v), seq)
    return v0 is not None and _is_highest_weight(ct, v0) and _weight(ct, u0) == _weight(ct, v0)


# -- relation sets -----------------------------------------------------------


def _bar(x):
    return -x


def _classical_relations(ct: CrystalType):
    A = ct.alphabet
    has_zero = 0 in ct.position
    lt, le = ct.lt, ct.le
    rels = []
    # R1
    for x, y, z in product(A, repeat=3):
        if lt(x, y) and lt(y, z) and x != _bar(z):
            rels.append(((y, z, x), (y, x, z)))
            rels.append(((x, z, y), (z, x, y)))
    # R2
    for x, y in product(A, repeat=2):
        if lt(x, y) and x != _bar(y):
            if x != 0:
                rels.append(((x, y, x), (x, x, y)))
            if y != 0:
                rels.append(((x, y, y), (y, x, y)))
    if ct.family == "A":
        return rels
    n = ct.n
    if ct.family == "D":
        # R1 with the incomparable pair {n, -n} standing in for y < z (first
        # family) or x < y (second family)
        pair = (n, -n), (-n, n)
        for a, b in pair:
            for c in A:
                if abs(c) == n:
                    continue
                if lt(c, a):
                    rels.append(((a, b, c), (a, c, b)))
                if lt(b, c):
                    rels.append(((a, c, b), (c, a, b)))
    # R3
    for x in range(2, n + 1):
        for y in A:
            if le(x, y) and le(y, -x):
                rels.append(((y, -(x - 1), x - 1), (y, x, -x)))
                rels.append(((x, -x, y), (-(x - 1), x - 1, y)))
    if has_zero:
        rels.append(((0, -n, n), (-n, n, 0)))
        # R4
        for x in range(1, n + 1):
            rels.append(((0, 0, x), (0, x, 0)))
            rels.append(((0, -x, 0), (-x, 0, 0)))
    if ct.family == "D":
        m = n - 1
        rels += [
            ((n, -n, -n), (-m, m, -n)),
            ((-n, n, n), (-m, m, n)),
            ((-n, -m, m), (-n, -n, n)),
            ((n, -m, m), (n, n, -n)),
        ]
    rels += _r5(ct)
    return rels


def minimal_nonadmissible_columns(ct: CrystalType):
    """Non-admissible column words whose two maximal strict factors are admissible."""
    top = ct.n + 1
    out = []
    level = [(x,) for x in ct.alphabet]
    for h in range(2, top + 1):
        nxt = []
        for w in level:
            if not _admissible(ct, w):
                continue
            for x in ct.alphabet:
                v = w + (x,)
                if _is_column_word(ct, v):
                    nxt.append(v)
        for v in nxt:
            if not _admissible(ct, v) and _admissible(ct, v[1:]):
                out.append(v)
        level = nxt
    return sorted(set(out), key=lambda w: (len(w), [ct.position[x] for x in w]))


def _erase_pair(w, z):
    if z == 0:
        k = w.index(0)
        return w[:k] + w[k + 1:]
    i, j = w.index(z), w.index(-z)
    return tuple(x for k, x in enumerate(w) if k not in (i, j))


def _r5(ct: CrystalType):
    rels = []
    for w in minimal_nonadmissible_columns(ct):
        z = 0
        for c in range(1, ct.n + 1):
            if c in w and -c in w and n_count(ct, w, c) > c:
                z = c
                break
        if z == 0 and 0 not in w:
            raise AssertionError(f"no pair to erase in {format_word(w)}")
        rels.append((w, _erase_pair(w, z)))
    return rels


def _g2_relations():
    rels = [((1, 0), (1,)), ((1, -3), (2,)), ((1, -2), (3,)), ((2, -2), (0,)),
            ((2, -1), (-3,)), ((3, -1), (-2,)), ((0, -1), (-1,)), ((1, -1), ())]
    pos = {x: k for k, x in enumerate((1, 2, 3, 0, -3, -2, -1))}
    A = tuple(pos)
    for a, b, c in product(A, repeat=3):
        ab, bc = (a, b), (b, c)
        if ab not in THETA_INV:
            continue
        if bc in THETA:
            rels.append(((a, b, c), (a,) + THETA[bc]))
        elif pos[b] >= pos[c] and bc != (0, 0):
            rels.append(((a, b, c), THETA_INV[ab] + (c,)))
        if bc in THETA_INV and (a, b, c) != (1, 2, 3):
            rels.append(((a, b, c), THETA_INV[ab] + (c,)))
    rels.append(((1, 2, 3), (1, 1, 0)))
    return rels


def build_presentation(ct: CrystalType, check: bool = True) -> Presentation:
    """All defining relations for ``ct``.

    With ``check`` every relation must preserve weight, and instances that do
    not relate words in the same position of isomorphic components are moved
    to ``rejected``.  For G2 a rejected three-letter instance is replaced by
    the alternative Theta form when that one passes the check.
    """
    if ct.family != "G2" and ct.rank > MAX_CLASSICAL_RANK:
        raise ResourceLimit(f"presentations are built for rank <= {MAX_CLASSICAL_RANK}")
    rels = _g2_relations() if ct.family == "G2" else _classical_relations(ct)
    seen = set()
    uniq = []
    for u, v in rels:
        key = (u, v) if (len(u), u) <= (len(v), v) else (v, u)
        if u != v and key not in seen:
            seen.add(key)
            uniq.append((u, v))
    rejected = []
    if check:
        for u, v in uniq:
            if _weight(ct, u) != _weight(ct, v):
                raise AssertionError(f"relation ({format_word(u)}, {format_word(v)}) changes weight")
        rejected = [r for r in uniq if not crystal_equivalent(ct, *r)]
        uniq = [r for r in uniq if r not in rejected]
    repaired = []
    if ct.family == "G2":
        # a rejected (abc, a(bc)T) is replaced by the other R3 form (abc, (ab)T^-1 c)
        for u, _ in rejected:
            alt = (u, THETA_INV[u[:2]] + u[2:])
            if crystal_equivalent(ct, *alt) and alt not in uniq:
                repaired.append(alt)
        uniq += repaired
    return Presentation(ct, tuple(uniq), tuple(rejected), tuple(repaired))


# -- congruence closure ------------------------------------------------------


def _neighbors(p: Presentation, w, max_length=None):
    out = set()
    moves = p._moves
    for L in p._lengths:
        for i in range(len(w) - L + 1):
            sub = w[i:i + L]
            for v in moves.get(sub, ()):
                if max_length is None or len(w) - L + len(v) <= max_length:
                    out.add(w[:i] + v + w[i + L:])
    for v in p._empty:
        if max_length is None or len(w) + len(v) <= max_length:
            for i in range(len(w) + 1):
                out.add(w[:i] + v + w[i:])
    out.discard(w)
    return out


def one_step_neighbors(p: Presentation, w) -> set:
    return _neighbors(p, p.ct.check_word(w))


def tableau_factorization(ct: CrystalType, w):
    """Column words of a tableau with reading ``w`` (reading order), or ``None``."""
    if not w:
        return ()
    top = 2 if ct.family == "G2" else ct.n
    n = len(w)
    # best[k]: set of last-column words of tableau factorizations of w[:k]
    ends = [dict() for _ in range(n + 1)]
    ends[0][()] = None
    for k in range(n):
        if not ends[k]:
            continue
        for h in range(1, top + 1):
            if k + h > n:
                break
            c = w[k:k + h]
            if not _admissible(ct, c):
                continue
            for prev in ends[k]:
                if prev == () or _pair_ok(ct, c, prev):
                    ends[k + h].setdefault(c, (k, prev))
                    break
    if not ends[n]:
        return None
    cols = []
    k, last = n, next(iter(ends[n]))
    while k:
        cols.append(last)
        k, last = ends[k][last]
    return tuple(reversed(cols))


def is_tableau_reading(ct: CrystalType, w) -> bool:
    return tableau_factorization(ct, tuple(w)) is not None


class Oracle:
    """Breadth-first congruence closure with a per-instance cache of solved classes."""

    def __init__(self, p: Presentation, max_class_size: int = 10**6, max_extra_length: int = 2):
        if max_class_size <= 0 or max_extra_length < 0:
            raise CrystalError("oracle limits must be positive")
        self.p = p
        self.max_class_size = max_class_size
        self.max_extra_length = max_extra_length
        self.cache = {}

    def __call__(self, w):
        w = tuple(w)
        hit = self.cache.get(w)
        if hit is not None:
            return hit
        ct = self.p.ct
        if tableau_factorization(ct, w) is not None:
            self.cache[w] = w
            return w
        for extra in range(self.max_extra_length + 1):
            cap = len(w) + extra
            seen = {w}
            queue = deque([w])
            found = set()
            while queue:
                u = queue.popleft()
                if tableau_factorization(ct, u) is not None:
                    found.add(u)
                for v in _neighbors(self.p, u, cap):
                    if v not in seen:
                        seen.add(v)
                        if len(seen) > self.max_class_size:
                            raise ResourceLimit(f"class of {format_word(w)} exceeds {self.max_class_size} words")
                        queue.append(v)
            if len(found) > 1:
                raise AssertionError(
                    f"class of {format_word(w)} holds {len(found)} tableau readings: "
                    + "; ".join(format_word(x) for x in sorted(found)))
            if found:
                nf = found.pop()
                for u in seen:
                    self.cache[u] = nf
                return nf
        raise ResourceLimit(f"no tableau reading within length {len(w) + self.max_extra_length} for {format_word(w)}")


def oracle_nf(p: Presentation, w, max_class_size: int = 10**6, max_extra_length: int = 2):
    """The tableau reading congruent to ``w``, found by breadth-first search."""
    return Oracle(p, max_class_size, max_extra_length)(p.ct.check_word(w))
