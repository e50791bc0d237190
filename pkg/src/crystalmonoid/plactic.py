"""Two-column normal forms and the finite complete rewriting system over column symbols.

A Sigma-word is a tuple of admissible column words ``(s1, s2, ...)``; the
symbol ``c_s1 c_s2 ...`` stands for the tabloid whose reading is
``s1 s2 ...``, so ``s1`` is its rightmost column.  Internally symbols are
indices into the enumeration of admissible columns.
"""

from __future__ import annotations

import json
import random
from array import array
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .crystal import CrystalError, CrystalType, ResourceLimit, _apply, _is_highest_weight, _raise, _weight, format_word, lowering_path
from .tableaux import (
    Tabloid,
    _admissible,
    _is_tableau_words,
    _make,
    _pair_ok,
    _sigma,
    highest_column,
    max_height,
    refactor,
)

MAX_SIGMA = 300
# largest rank per family whose column alphabet fits MAX_SIGMA; checked
# before enumerating, since the alphabet grows geometrically with the rank
MAX_RANK = {"A": 8, "B": 4, "C": 4, "D": 4}

# P(alpha beta) for the highest-weight reducible G2 pairs, columns in reading order
G2_TABLE = {
    ((1,), (2,)): ((1, 2),),
    ((1,), (0,)): ((1,),),
    ((1,), (-1,)): (),
    ((1,), (2, 3)): ((1,), (1,)),
    ((1,), (0, 0)): ((1,),),
    ((1, 2), (1,)): ((1,), (1, 2)),
    ((1, 2), (3,)): ((1,), (1,)),
    ((1, 2), (-2,)): ((1,),),
    ((1, 2), (1, 3)): ((1,), (1,), (1,)),
    ((1, 2), (3, 0)): ((1,), (1,)),
    ((1, 2), (3, -3)): ((1, 2),),
    ((1, 2), (-2, -1)): (),
}


def reducible(ct: CrystalType, s, t) -> bool:
    """Whether ``c_s c_t`` (``t`` left of ``s``) fails to be a tableau."""
    return not _pair_ok(ct, t, s)


# -- highest-weight shapes ---------------------------------------------------


@lru_cache(maxsize=None)
def _shape_solver(ct: CrystalType):
    cols = [highest_column(ct, h) for h in range(1, max_height(ct) + 1)]
    m = np.array([_weight(ct, c) for c in cols], dtype=float)
    return cols, np.linalg.inv(m)


def highest_shape(ct: CrystalType, wt):
    """Column words (reading order) of the row-filled tableau of weight ``wt``, or ``None``."""
    cols, inv = _shape_solver(ct)
    sol = np.asarray(wt, dtype=float) @ inv
    counts = [int(round(x)) for x in sol]
    if np.abs(sol - counts).max() > 1e-9:
        return None
    top = len(counts)
    bar = False
    if ct.family == "D" and counts[-1] < 0:
        # k columns ending in -n weigh 2k (n-1)-columns minus k n-columns
        k = -counts[-1]
        counts[-1] = k
        counts[-2] -= 2 * k
        bar = True
    if min(counts) < 0:
        return None
    out = []
    for h in range(1, top + 1):
        out += [highest_column(ct, h, bar)] * counts[h - 1]
    if _weight(ct, tuple(x for c in out for x in c)) != tuple(wt):
        return None
    return tuple(out)


def _highest_nf(ct, a, b):
    if ct.family == "G2":
        return G2_TABLE[(a, b)]
    cols = highest_shape(ct, _weight(ct, a + b))
    if cols is None:
        raise AssertionError(f"no row-filled tableau has the weight of {format_word(a + b)}")
    return cols


def two_column_highest_nf(ct: CrystalType, alpha, beta) -> Tabloid:
    """P(alpha beta) for a highest-weight word ``alpha beta`` with ``c_alpha c_beta`` reducible.

    Types A-D: the unique row-filled tableau with the weight of ``alpha beta``.
    G2: the case table of highest-weight reducible pairs.
    """
    a = ct.check_word(getattr(alpha, "letters", alpha))
    b = ct.check_word(getattr(beta, "letters", beta))
    if not (_admissible(ct, a) and _admissible(ct, b)):
        raise CrystalError("two_column_highest_nf takes admissible columns")
    if not _is_highest_weight(ct, a + b):
        raise CrystalError(f"{format_word(a + b)} is not of highest weight")
    if not reducible(ct, a, b):
        raise CrystalError(f"[{format_word(b)}] [{format_word(a)}] is already a tableau")
    cols = _highest_nf(ct, a, b)
    return Tabloid(ct, tuple(_make(ct, c) for c in cols))


def _two_column_nf(ct, s, t):
    w0, seq = _raise(ct, s + t)
    cols = _highest_nf(ct, w0[:len(s)], w0[len(s):])
    reading = _apply(ct, tuple(x for c in cols for x in c), lowering_path(seq))
    if reading is None:
        raise AssertionError(f"lowering path undefined on P of {format_word(s + t)}")
    return refactor(ct, reading, [len(c) for c in cols])


def two_column_nf(ct: CrystalType, sigma, tau) -> Tabloid:
    """P(sigma tau) for a reducible pair, by transport from the highest-weight case."""
    s = ct.check_word(getattr(sigma, "letters", sigma))
    t = ct.check_word(getattr(tau, "letters", tau))
    if not (_admissible(ct, s) and _admissible(ct, t)):
        raise CrystalError("two_column_nf takes admissible columns")
    if not reducible(ct, s, t):
        raise CrystalError(f"[{format_word(t)}] [{format_word(s)}] is already a tableau")
    return Tabloid(ct, tuple(_make(ct, c) for c in _two_column_nf(ct, s, t)))


# -- the rewriting system ----------------------------------------------------


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple
    rhs: tuple

    def __str__(self):
        def side(cols):
            return " ".join("[" + format_word(c) + "]" for c in cols) or "ε"
        return f"{side(self.lhs)} -> {side(self.rhs)}"


class RuleTable:
    """Rules ``c_s c_t -> P(s t)`` for every reducible pair of admissible columns."""

    def __init__(self, ct: CrystalType, max_sigma: int = MAX_SIGMA):
        if max_sigma <= MAX_SIGMA and ct.rank > MAX_RANK.get(ct.family, ct.rank):
            raise ResourceLimit(f"rule tables are built for {ct.family} ranks <= {MAX_RANK[ct.family]}")
        sigma = _sigma(ct)
        if len(sigma) > max_sigma:
            raise ResourceLimit(f"{ct.spec} has {len(sigma)} admissible columns; the limit is {max_sigma}")
        self.ct = ct
        self.sigma = sigma
        self.index = {c: k for k, c in enumerate(sigma)}
        self.heights = tuple(len(c) for c in sigma)
        self.letter_symbol = {x: self.index[(x,)] for x in ct.alphabet}
        m = len(sigma)
        rules = {}
        rule_of = array("i", [-1] * (m * m))
        starts, lens, flat, dec = array("i"), array("i"), array("i"), array("b")
        for i, s in enumerate(sigma):
            for j, t in enumerate(sigma):
                if not reducible(ct, s, t):
                    continue
                rhs = tuple(self.index[c] for c in _two_column_nf(ct, s, t))
                self._validate((i, j), rhs)
                rule_of[i * m + j] = len(starts)
                starts.append(len(flat))
                lens.append(len(rhs))
                flat.extend(rhs)
                dec.append(1 if self.noeth_less(rhs, (i, j)) else 0)
                rules[(i, j)] = rhs
        self.rules = rules
        self._kern = (m, rule_of, starts, lens, flat or array("i", [0]), dec or array("b", [0]))
        self._decreasing = dec

    def _validate(self, lhs, rhs):
        ct = self.ct
        cols = tuple(self.sigma[k] for k in rhs)
        where = str(RewriteRule(tuple(self.sigma[k] for k in lhs), cols))
        if not _is_tableau_words(ct, cols):
            raise AssertionError(f"rule {where}: right side is not a tableau")
        L0, L1 = self.measure(lhs), self.measure(rhs)
        if L1 > L0:
            raise AssertionError(f"rule {where}: right side has more cells")
        limit = 3 if ct.family == "G2" else 2
        if len(rhs) > limit:
            raise AssertionError(f"rule {where}: right side has {len(rhs)} columns")
        if L1 == L0 and len(rhs) >= 2 and self.heights[rhs[0]] >= self.heights[lhs[0]]:
            raise AssertionError(f"rule {where}: rightmost column does not shrink")

    # symbols <-> columns

    def encode(self, columns) -> tuple:
        try:
            return tuple(self.index[tuple(getattr(c, "letters", c))] for c in columns)
        except KeyError as exc:
            raise CrystalError(f"not an admissible {self.ct.spec} column: {exc.args[0]}") from None

    def decode(self, symbols) -> tuple:
        return tuple(self.sigma[k] for k in symbols)

    def letters(self, w) -> tuple:
        """Height-one symbols for the letters of ``w``."""
        return tuple(self.letter_symbol[x] for x in self.ct.check_word(w))

    def reading(self, symbols) -> tuple:
        return tuple(x for k in symbols for x in self.sigma[k])

    # order

    def measure(self, symbols) -> int:
        return sum(self.heights[k] for k in symbols)

    def noeth_less(self, u, v) -> bool:
        """Total cells first, then length, then lexicographic by enumeration index."""
        lu, lv = self.measure(u), self.measure(v)
        if lu != lv:
            return lu < lv
        if len(u) != len(v):
            return len(u) < len(v)
        return tuple(u) < tuple(v)

    def rule_list(self):
        return [RewriteRule(self.decode(l), self.decode(r)) for l, r in sorted(self.rules.items())]

    def is_irreducible(self, symbols) -> bool:
        return all((a, b) not in self.rules for a, b in zip(symbols, symbols[1:]))

    def step_guard(self, symbols) -> int:
        return (self.measure(symbols) + 2) ** 2 * len(self.sigma)

    # rewriting

    def rewrite(self, symbols, strategy: str = "leftmost", seed=None, impl=None):
        """Normal form of a symbol tuple; every step must decrease the termination order."""
        symbols = tuple(symbols)
        guard = self.step_guard(symbols)
        if strategy == "leftmost":
            m, rule_of, starts, lens, flat, dec = self._kern
            fn = (impl or kernels).rewrite_leftmost
            try:
                nf, _, bad = fn(symbols, m, rule_of, starts, lens, flat, dec, guard)
            except RuntimeError as exc:
                raise AssertionError(str(exc)) from None
            if bad >= 0:
                lhs = next(k for k, v in self.rules.items() if self._kern[1][k[0] * m + k[1]] == bad)
                raise AssertionError(f"rule {RewriteRule(self.decode(lhs), self.decode(self.rules[lhs]))} "
                                     "does not decrease the termination order")
            return nf
        if strategy not in ("rightmost", "random"):
            raise CrystalError(f"unknown strategy {strategy!r}")
        rng = random.Random(seed)
        w = list(symbols)
        steps = 0
        while True:
            redexes = [k for k in range(len(w) - 1) if (w[k], w[k + 1]) in self.rules]
            if not redexes:
                return tuple(w)
            k = redexes[-1] if strategy == "rightmost" else rng.choice(redexes)
            lhs = (w[k], w[k + 1])
            rhs = self.rules[lhs]
            if not self.noeth_less(rhs, lhs):
                raise AssertionError(f"rule {lhs} -> {rhs} does not decrease the termination order")
            w[k:k + 2] = rhs
            steps += 1
            if steps > guard:
                raise AssertionError(f"rewriting exceeded {guard} steps")

    def to_json(self) -> str:
        data = {
            "type": self.ct.family,
            "rank": self.ct.rank,
            "sigma": [_col_text(c) for c in self.sigma],
            "rules": [{"lhs": [_col_text(c) for c in r.lhs], "rhs": [_col_text(c) for c in r.rhs]}
                      for r in self.rule_list()],
        }
        return json.dumps(data, indent=1, ensure_ascii=False)


def _col_text(c):
    return "[" + format_word(c) + "]"


@lru_cache(maxsize=None)
def build_rule_table(ct: CrystalType) -> RuleTable:
    return RuleTable(ct)


def measure_L(ct: CrystalType, w) -> int:
    """Total number of cells of a Sigma-word."""
    return sum(len(getattr(c, "letters", c)) for c in w)


def noeth_less(ct: CrystalType, u, v) -> bool:
    t = build_rule_table(ct)
    return t.noeth_less(t.encode(u), t.encode(v))


def rewrite_nf(ct: CrystalType, w, strategy: str = "leftmost", seed=None) -> tuple:
    """Normal form of a Sigma-word given as column words."""
    t = build_rule_table(ct)
    return t.decode(t.rewrite(t.encode(w), strategy, seed))


def letters_to_sigma(ct: CrystalType, w) -> tuple:
    return tuple((x,) for x in ct.check_word(w))


def nf_word(ct: CrystalType, w) -> tuple:
    """The tableau reading in the class of the word ``w``."""
    t = build_rule_table(ct)
    return t.reading(t.rewrite(t.letters(w)))


def nf_columns(ct: CrystalType, w) -> tuple:
    """Columns (reading order) of the tableau in the class of ``w``."""
    t = build_rule_table(ct)
    return t.decode(t.rewrite(t.letters(w)))
