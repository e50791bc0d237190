"""Named invariant suites shared by the command line and the test suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .automata import _left_pass, _right_pass, irreducible_words, materialize_transducer, nf_dfa
from .crystal import CrystalType, _op_f, _weight, format_word
from .graph import component, unique_highest_check
from .plactic import build_rule_table, nf_word
from .presentations import Oracle, build_presentation
from .tableaux import _split, _sigma, _is_column_word, _admissible, max_height

SUITES = ("edges", "columns", "rules", "oracle", "confluence", "multiplication", "crystal", "presentation", "dfa")


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, what=None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 10:
                self.failures.append(what() if callable(what) else what)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def __str__(self):
        return f"{self.name}: {self.passed} passed, {self.failed} failed"


def all_words(ct: CrystalType, max_length: int):
    for k in range(max_length + 1):
        yield from product(ct.alphabet, repeat=k)


def random_word(rng: random.Random, ct: CrystalType, max_length: int) -> tuple:
    return tuple(rng.choice(ct.alphabet) for _ in range(rng.randint(0, max_length)))


def check_edges(ct: CrystalType, **_) -> SuiteResult:
    """``wt(f_i x) - wt(x)`` is the same vector for every basis edge of label i."""
    res = SuiteResult("edges")
    for i in ct.labels:
        diffs = {tuple(b - a for a, b in zip(_weight(ct, (x,)), _weight(ct, (y,))))
                 for x, y in ct.f_edges[i].items()}
        res.record(len(diffs) == 1, lambda: f"label {i}: differences {sorted(diffs)}")
        for x in ct.alphabet:
            y = _op_f(ct, i, (x,))
            res.record(y is None or y[0] == ct.f_edges[i][x], f"f_{i}({x}) disagrees with the basis")
    return res


def check_columns(ct: CrystalType, **_) -> SuiteResult:
    """A column word is admissible exactly when its split exists."""
    res = SuiteResult("columns")
    level = [(x,) for x in ct.alphabet]
    for _h in range(max_height(ct)):
        nxt = []
        for w in level:
            if ct.family != "G2":
                res.record(_admissible(ct, w) == (_split(ct, w) is not None), lambda: format_word(w))
            nxt += [w + (x,) for x in ct.alphabet if _is_column_word(ct, w + (x,))]
        level = nxt
    res.record(len(set(_sigma(ct))) == len(_sigma(ct)), "duplicate columns")
    return res


def check_rules(ct: CrystalType, **_) -> SuiteResult:
    res = SuiteResult("rules")
    t = build_rule_table(ct)
    for (i, j), rhs in t.rules.items():
        try:
            t._validate((i, j), rhs)
            ok = t.noeth_less(rhs, (i, j))
        except AssertionError:
            ok = False
        res.record(ok, lambda: f"{t.decode((i, j))} -> {t.decode(rhs)}")
    return res


def check_oracle(ct: CrystalType, seed: int = 0, max_length: int = 5, samples: int = 1000,
                 sample_length: int = 8, max_class: int = 10**6, **_) -> SuiteResult:
    """``nf_word`` against breadth-first closure, exhaustively and on random words."""
    res = SuiteResult("oracle")
    oracle = Oracle(build_presentation(ct), max_class_size=max_class)
    for w in all_words(ct, max_length):
        res.record(nf_word(ct, w) == oracle(w), lambda: format_word(w))
    rng = random.Random(seed)
    for _ in range(samples):
        w = random_word(rng, ct, sample_length)
        res.record(nf_word(ct, w) == oracle(w), lambda: format_word(w))
    return res


def check_confluence(ct: CrystalType, seed: int = 0, samples: int = 1000, sample_length: int = 8, **_) -> SuiteResult:
    """Leftmost, rightmost and random redex choice reach the same normal form."""
    res = SuiteResult("confluence")
    t = build_rule_table(ct)
    rng = random.Random(seed)
    m = len(t.sigma)
    for k in range(samples):
        w = tuple(rng.randrange(m) for _ in range(rng.randint(0, sample_length)))
        a = t.rewrite(w)
        ok = a == t.rewrite(w, "rightmost") == t.rewrite(w, "random", seed=seed + k)
        res.record(ok and t.is_irreducible(a), lambda: str(t.decode(w)))
    return res


def check_multiplication(ct: CrystalType, max_length: int = 5, **_) -> SuiteResult:
    """Both passes against full rewriting, with the window and length bounds."""
    res = SuiteResult("multiplication")
    t = build_rule_table(ct)
    limit = 2 if ct.family == "G2" else 1
    letters = tuple(t.letter_symbol.values())
    for u in irreducible_words(t, max_length):
        for x in letters:
            r = _right_pass(t, u, x)
            l = _left_pass(t, x, u)
            ok = (r == t.rewrite(u + (x,)) and l == t.rewrite((x,) + u)
                  and abs(len(r) - len(u)) <= limit and abs(len(l) - len(u)) <= limit)
            res.record(ok, lambda: (t.decode(u), t.sigma[x]))
    for side in ("left", "right"):
        tr = materialize_transducer(ct, side)
        res.record(all(len(s) <= 3 for s in tr.states), f"{side} carry too wide")
    return res


def check_crystal(ct: CrystalType, max_length: int = 4, max_vertices: int = 50_000, **_) -> SuiteResult:
    """Every component of words up to ``max_length`` has one highest-weight vertex."""
    res = SuiteResult("crystal")
    done = set()
    for w in all_words(ct, max_length):
        if w in done:
            continue
        g = component(ct, w, max_vertices)
        done |= g.vertices
        res.record(unique_highest_check(g), lambda: format_word(w))
    return res


def check_presentation(ct: CrystalType, **_) -> SuiteResult:
    """Both sides of every defining relation have the same normal form."""
    res = SuiteResult("presentation")
    for u, v in build_presentation(ct).relations:
        res.record(nf_word(ct, u) == nf_word(ct, v), lambda: f"({format_word(u)}, {format_word(v)})")
    return res


def run_suite(name: str, ct: CrystalType, **kw) -> SuiteResult:
    return globals()["check_" + name](ct, **kw)


def check_dfa(ct: CrystalType, max_length: int = 4, **_) -> SuiteResult:
    """The normal-form automaton accepts exactly the words rewriting fixes."""
    res = SuiteResult("dfa")
    t = build_rule_table(ct)
    d = nf_dfa(ct)
    m = len(t.sigma)
    for k in range(max_length + 1):
        for w in product(range(m), repeat=k):
            res.record(d.accepts_symbols(w) == (t.rewrite(w) == w), lambda: str(t.decode(w)))
    return res
