"""Normal-form automaton, single-pass multiplication and the word problem.

Multiplying an irreducible Sigma-word by one generator is done by a
streaming pass with a bounded carry.  The right pass starts at the new
symbol and walks leftwards; at each step the next symbol and the carry form
a window, the window is replaced by its normal form, the leading symbols stay
in the carry and the rest are emitted for good.  The left pass is the mirror
image.  The carry holds one symbol for the classical types and two for G2
right multiplication, so a window never exceeds three symbols.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .crystal import CrystalError, CrystalType, _raise
from .plactic import RuleTable, _col_text, build_rule_table

MAX_WINDOW = 3

# G2 auxiliary rules used by the streaming passes only, as column words in
# Sigma-word order.  Each is checked against full rewriting when the pass
# table is built.  Note c2 c2 c1 c1 is irreducible; the last rule is c1 c1 c2 c2.
G2_OVERLAY = (
    (((1, 2), (1,), (1,)), ((1,), (1,), (1, 2))),
    (((1, 2), (2,), (1,)), ((2,), (1,), (1, 2))),
    (((1,), (2,), (1,)), ((1,), (1, 2))),
    (((1, 2), (2,), (2,)), ((2,), (2,), (1, 2))),
    (((1,), (1,), (2,), (2,)), ((1, 2), (1, 2))),
)


def carry_size(ct: CrystalType, side: str) -> int:
    if side not in ("left", "right"):
        raise CrystalError(f"side must be 'left' or 'right', not {side!r}")
    return 2 if ct.family == "G2" and side == "right" else 1


# -- normal-form language ----------------------------------------------------


@dataclass
class NfDfa:
    """Start state ``-1`` plus one state per symbol; every state accepts."""

    table: RuleTable

    def step(self, state: int, symbol: int):
        if state >= 0 and (state, symbol) in self.table.rules:
            return None
        return symbol

    def accepts_symbols(self, symbols) -> bool:
        state = -1
        for s in symbols:
            state = self.step(state, s)
            if state is None:
                return False
        return True

    def accepts(self, columns) -> bool:
        return self.accepts_symbols(self.table.encode(columns))

    @property
    def states(self) -> tuple:
        return (-1,) + tuple(range(len(self.table.sigma)))

    def to_json(self) -> str:
        t = self.table
        m = len(t.sigma)
        trans = {"start": [_col_text(c) for c in t.sigma]}
        for a in range(m):
            trans[_col_text(t.sigma[a])] = [_col_text(t.sigma[b]) for b in range(m) if (a, b) not in t.rules]
        return json.dumps({"type": t.ct.spec, "states": ["start"] + [_col_text(c) for c in t.sigma],
                           "accepting": "all", "transitions": trans}, indent=1, ensure_ascii=False)


def nf_dfa(ct: CrystalType) -> NfDfa:
    return NfDfa(build_rule_table(ct))


# -- streaming passes --------------------------------------------------------


class _Passes:
    """Window normal forms for one rule table, cached."""

    def __init__(self, table: RuleTable):
        self.table = table
        self.cache = {}
        self.overlay = {}
        if table.ct.family == "G2":
            for lhs, rhs in G2_OVERLAY:
                l, r = table.encode(lhs), table.encode(rhs)
                if table.rewrite(l) != r:
                    raise AssertionError(f"overlay rule {lhs} -> {rhs} is not sound")
                self.overlay[l] = r

    def window_nf(self, win):
        hit = self.cache.get(win)
        if hit is None:
            if len(win) > MAX_WINDOW:
                raise AssertionError(f"window of {len(win)} symbols exceeds {MAX_WINDOW}")
            hit = self.overlay.get(win)
            if hit is None:
                hit = self.table.rewrite(win)
            self.cache[win] = hit
        return hit

    def right_step(self, carry, s, cap):
        nf = self.window_nf((s,) + carry)
        return nf[:cap], nf[cap:]

    def left_step(self, carry, s, cap):
        nf = self.window_nf(carry + (s,))
        k = max(0, len(nf) - cap)
        return nf[k:], nf[:k]


_PASSES = {}


def _passes(table: RuleTable) -> _Passes:
    p = _PASSES.get(table.ct)
    if p is None or p.table is not table:
        p = _PASSES[table.ct] = _Passes(table)
    return p


@dataclass
class PassTrace:
    """Instrumentation of one pass: head positions visited and the widest window."""

    heads: list = field(default_factory=list)
    max_window: int = 0


def _right_pass(table: RuleTable, u, x: int, trace: PassTrace | None = None):
    p = _passes(table)
    cap = carry_size(table.ct, "right")
    carry = (x,)
    out = []
    for k in range(len(u) - 1, -1, -1):
        if trace is not None:
            trace.heads.append(k)
            trace.max_window = max(trace.max_window, len(carry) + 1)
        carry, emit = p.right_step(carry, u[k], cap)
        # emitted symbols are final; they go in front of everything emitted so far
        out.append(emit)
    res = list(carry)
    for emit in reversed(out):
        res.extend(emit)
    return tuple(res)


def _left_pass(table: RuleTable, x: int, u, trace: PassTrace | None = None):
    p = _passes(table)
    cap = carry_size(table.ct, "left")
    carry = (x,)
    out = []
    for k, s in enumerate(u):
        if trace is not None:
            trace.heads.append(k)
            trace.max_window = max(trace.max_window, len(carry) + 1)
        carry, emit = p.left_step(carry, s, cap)
        out.extend(emit)
    return tuple(out) + carry


def _check_irreducible(table, u):
    if not table.is_irreducible(u):
        raise CrystalError("input Sigma-word is not irreducible")


def right_mul_symbols(table: RuleTable, u, x: int, trace: PassTrace | None = None) -> tuple:
    u = tuple(u)
    _check_irreducible(table, u)
    return _right_pass(table, u, x, trace)


def left_mul_symbols(table: RuleTable, x: int, u, trace: PassTrace | None = None) -> tuple:
    u = tuple(u)
    _check_irreducible(table, u)
    return _left_pass(table, x, u, trace)


def right_mul(ct: CrystalType, u, x) -> tuple:
    """Normal form of ``u c_x`` for an irreducible Sigma-word ``u`` (column words)."""
    t = build_rule_table(ct)
    return t.decode(right_mul_symbols(t, t.encode(u), t.letters((x,))[0]))


def left_mul(ct: CrystalType, x, u) -> tuple:
    """Normal form of ``c_x u`` for an irreducible Sigma-word ``u`` (column words)."""
    t = build_rule_table(ct)
    return t.decode(left_mul_symbols(t, t.letters((x,))[0], t.encode(u)))


# -- word problem ------------------------------------------------------------


def _incremental(table: RuleTable, w) -> tuple:
    u = ()
    for x in table.letters(w):
        u = _right_pass(table, u, x)
    return u


def incremental_nf(ct: CrystalType, w) -> tuple:
    """Normal form (column words) of ``w`` by repeated right multiplication."""
    t = build_rule_table(ct)
    return t.decode(_incremental(t, w))


def equal(ct: CrystalType, u, v) -> bool:
    """Whether ``u`` and ``v`` represent the same element of the plactic monoid."""
    t = build_rule_table(ct)
    return _incremental(t, u) == _incremental(t, v)


def same_position(ct: CrystalType, u, v) -> bool:
    """Whether ``u`` and ``v`` lie in the same position of isomorphic components."""
    return equal(ct, u, v)


def components_isomorphic(ct: CrystalType, u, v) -> bool:
    u0, _ = _raise(ct, ct.check_word(u))
    v0, _ = _raise(ct, ct.check_word(v))
    return equal(ct, u0, v0)


# -- transducers -------------------------------------------------------------


@dataclass
class Transducer:
    """Deterministic carry machine for one side.

    A run feeds the generator symbol and then the symbols of the word in the
    order the pass visits them; at the end the carry is flushed.  States are
    carries; ``transitions[(state, symbol)] = (state, emitted)``.
    """

    table: RuleTable
    side: str
    states: frozenset
    transitions: dict
    depth: int

    def run(self, symbols) -> tuple:
        state = ()
        chunks = []
        for s in symbols:
            key = (state, s)
            if key not in self.transitions:
                raise CrystalError("input leaves the materialized transducer")
            state, emit = self.transitions[key]
            chunks.append(emit)
        if self.side == "right":
            res = list(state)
            for emit in reversed(chunks):
                res.extend(emit)
            return tuple(res)
        return tuple(s for emit in chunks for s in emit) + state

    def multiply(self, u, x: int) -> tuple:
        """Replay: ``u c_x`` for the right machine, ``c_x u`` for the left one."""
        u = tuple(u)
        seq = (x,) + (tuple(reversed(u)) if self.side == "right" else u)
        return self.run(seq)

    def to_json(self) -> str:
        t = self.table

        def win(state):
            return [_col_text(t.sigma[k]) for k in state]

        trans = [{"from": win(a), "read": _col_text(t.sigma[s]), "to": win(b), "emit": win(e)}
                 for (a, s), (b, e) in sorted(self.transitions.items())]
        states = sorted(self.states, key=lambda c: (len(c), c))
        return json.dumps({"type": t.ct.spec, "side": self.side, "states": [win(s) for s in states],
                           "transitions": trans}, indent=1, ensure_ascii=False)


def materialize_transducer(ct: CrystalType, side: str) -> Transducer:
    """Reachable carries over all (letter, irreducible word) inputs.

    The search runs over pairs (carry, last symbol read), which is exactly the
    information the next step depends on, so sweeping all inputs of length k
    is a breadth-first search of depth k.  The search runs to a fixpoint, so
    the state set and transitions are closed for inputs of any length;
    ``depth`` is the input length at which the last new pair appeared.
    """
    t = build_rule_table(ct)
    p = _passes(t)
    cap = carry_size(ct, side)
    step = p.right_step if side == "right" else p.left_step
    m = len(t.sigma)
    bound = m ** 3 + m + 1
    trans = {}

    def record(state, s):
        got = step(state, s, cap)
        old = trans.setdefault((state, s), got)
        if old != got:
            raise AssertionError(f"nondeterministic transition from {state} on {s}")
        return got[0]

    # the generator itself is the first symbol read
    start = {(record((), x), None) for x in t.letter_symbol.values()}
    seen = set(start)
    frontier = deque((pair, 0) for pair in start)
    depth = 0
    while frontier:
        (state, last), d = frontier.popleft()
        depth = max(depth, d)
        for s in range(m):
            if last is not None:
                pair = (s, last) if side == "right" else (last, s)
                if pair in t.rules:
                    continue
            nxt = (record(state, s), s)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, d + 1))
    states = frozenset(st for st, _ in seen) | {()}
    if len(states) > bound:
        raise AssertionError(f"{len(states)} carries exceed the bound {bound}")
    for st in states:
        if len(st) > cap:
            raise AssertionError(f"carry {st} exceeds {cap} symbols")
    return Transducer(t, side, states, trans, depth)


def length_bound_report(ct: CrystalType, samples, side: str = "right") -> int:
    """Largest ``|len(result) - m|`` over ``(u, x)`` samples, ``m = len(u)``.

    The multiplied input ``u c_x`` has ``m + 1`` symbols, so this is the
    distance to the input length minus one.  It stays within 1 for the
    classical types and within 2 for G2.
    """
    t = build_rule_table(ct)
    worst = 0
    for u, x in samples:
        res = _right_pass(t, tuple(u), x) if side == "right" else _left_pass(t, x, tuple(u))
        worst = max(worst, abs(len(res) - len(u)))
    return worst


def irreducible_words(table: RuleTable, max_length: int):
    """All irreducible symbol words of length at most ``max_length``, shortest first."""
    level = [()]
    yield ()
    for _ in range(max_length):
        nxt = []
        for w in level:
            for s in range(len(table.sigma)):
                if not w or (w[-1], s) not in table.rules:
                    v = w + (s,)
                    nxt.append(v)
                    yield v
        level = nxt
