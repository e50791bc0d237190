"""Alphabets, crystal bases and Kashiwara operators for types A, B, C, D, G2.

Letters are plain integers: ``k`` is the unbarred letter k, ``-k`` is its
barred counterpart and ``0`` is the zero letter (types B and G2 only).  A
word is a tuple of letters.  The textual form of a word is the
whitespace-separated token sequence, e.g. ``"1 -2 0"``.
"""

from __future__ import annotations

import enum
from array import array
from dataclasses import dataclass
from functools import lru_cache

from . import kernels

FAMILIES = ("A", "B", "C", "D", "G2")


class CrystalError(ValueError):
    """Invalid input to a crystal operation."""


class ResourceLimit(RuntimeError):
    """A size, length or step cap was exceeded; the answer is unknown, not negative."""


class Order(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"
    INCOMPARABLE = "||"


class CrystalType:
    """A crystal type with its ordered alphabet, basis edges and weights.

    Use :func:`crystal_type` or :func:`parse_type` rather than the
    constructor; instances are cached and compared by ``(family, rank)``.
    """

    def __init__(self, family: str, rank: int):
        if family not in FAMILIES:
            raise CrystalError(f"unknown family {family!r}")
        if family == "G2":
            if rank != 2:
                raise CrystalError("G2 has rank 2")
        elif rank < (2 if family == "D" else 1):
            raise CrystalError(f"rank {rank} too small for type {family}")
        self.family = family
        self.rank = rank
        n = rank
        if family == "A":
            self.alphabet = tuple(range(1, n + 1))
            self.labels = tuple(range(1, n))
            self.n = n
        elif family == "B":
            self.alphabet = tuple(range(1, n + 1)) + (0,) + tuple(range(-n, 0))
            self.labels = tuple(range(1, n + 1))
            self.n = n
        elif family in ("C", "D"):
            self.alphabet = tuple(range(1, n + 1)) + tuple(range(-n, 0))
            self.labels = tuple(range(1, n + 1))
            self.n = n
        else:
            self.alphabet = (1, 2, 3, 0, -3, -2, -1)
            self.labels = (1, 2)
            self.n = 3
        self.position = {x: k for k, x in enumerate(self.alphabet)}
        self.offset = max(abs(x) for x in self.alphabet)
        self.f_edges = {i: dict(_basis_edges(family, n, i)) for i in self.labels}
        self.e_edges = {i: {b: a for a, b in self.f_edges[i].items()} for i in self.labels}
        self.weights = _weights(family, n)
        self.dim = len(next(iter(self.weights.values())))
        size = 2 * self.offset + 1
        self._eps = {}
        self._phi = {}
        for i in self.labels:
            eps = array("i", [0] * size)
            phi = array("i", [0] * size)
            for x in self.alphabet:
                eps[x + self.offset] = _chain(self.e_edges[i], x)
                phi[x + self.offset] = _chain(self.f_edges[i], x)
            self._eps[i] = eps
            self._phi[i] = phi

    @property
    def spec(self) -> str:
        return "G2" if self.family == "G2" else f"{self.family}:{self.rank}"

    def __repr__(self):
        return f"CrystalType({self.spec})"

    def __eq__(self, other):
        return isinstance(other, CrystalType) and (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.family, self.rank))

    def __reduce__(self):
        return crystal_type, (self.family, self.rank)

    def has_letter(self, x) -> bool:
        return x in self.position

    def check_word(self, w) -> tuple:
        w = tuple(w)
        for x in w:
            if x not in self.position:
                raise CrystalError(f"letter {format_letter(x)} not in the {self.spec} alphabet")
        return w

    def check_label(self, i: int):
        if i not in self.f_edges:
            raise CrystalError(f"label {i} out of range for {self.spec}")

    def incomparable(self, a, b) -> bool:
        return self.family == "D" and a != b and abs(a) == self.n and abs(b) == self.n

    def le(self, a, b) -> bool:
        """``a <= b`` in the type order; false for incomparable letters."""
        if a == b:
            return True
        if self.family == "D" and abs(a) == self.n and abs(b) == self.n:
            return False
        return self.position[a] < self.position[b]

    def lt(self, a, b) -> bool:
        return a != b and self.le(a, b)


def _basis_edges(family, n, i):
    if family == "A":
        return [(i, i + 1)]
    if family == "G2":
        return [(1, 2), (3, 0), (0, -3), (-2, -1)] if i == 1 else [(2, 3), (-3, -2)]
    if family == "D":
        if i < n - 1:
            return [(i, i + 1), (-(i + 1), -i)]
        if i == n - 1:
            return [(n - 1, n), (-n, -(n - 1))]
        return [(n - 1, -n), (n, -(n - 1))]
    if i < n:
        return [(i, i + 1), (-(i + 1), -i)]
    if family == "B":
        return [(n, 0), (0, -n)]
    return [(n, -n)]


def _chain(edges, x):
    k = 0
    while x in edges:
        x = edges[x]
        k += 1
    return k


def _weights(family, n):
    if family == "G2":
        base = {1: (1, 0), 2: (-1, 1), 3: (2, -1)}
        wt = {0: (0, 0)}
    else:
        base = {}
        for a in range(1, n + 1):
            v = [0] * n
            if family == "A":
                v[a - 1] = 1
            elif family == "D" and a == n - 1:
                if a >= 2:
                    v[a - 2] = -1
                v[a - 1] = 1
                v[n - 1] = 1
            elif family in ("B", "D") and a == n:
                if a >= 2:
                    v[a - 2] = -1
                v[a - 1] = 2
            else:
                if a >= 2:
                    v[a - 2] = -1
                v[a - 1] = 1
            base[a] = tuple(v)
        wt = {0: (0,) * n} if family == "B" else {}
    for a, v in base.items():
        wt[a] = v
        if family != "A":
            wt[-a] = tuple(-c for c in v)
    return wt


@lru_cache(maxsize=None)
def crystal_type(family: str, rank: int = 2) -> CrystalType:
    return CrystalType(family, rank)


def parse_type(text: str) -> CrystalType:
    """Parse ``A:n``, ``B:n``, ``C:n``, ``D:n`` or ``G2``."""
    text = text.strip().upper()
    if text == "G2":
        return crystal_type("G2", 2)
    family, sep, rank = text.partition(":")
    if not sep or family not in ("A", "B", "C", "D"):
        raise CrystalError(f"bad type spec {text!r}; expected A:n, B:n, C:n, D:n or G2")
    try:
        r = int(rank)
    except ValueError:
        raise CrystalError(f"bad rank in type spec {text!r}") from None
    return crystal_type(family, r)


def format_letter(x) -> str:
    return str(x)


def format_word(w) -> str:
    return " ".join(str(x) for x in w)


def parse_word(ct: CrystalType, text: str) -> tuple:
    try:
        w = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise CrystalError(f"bad word {text!r}: tokens must be integers") from None
    return ct.check_word(w)


# -- letters -----------------------------------------------------------------


def letter_compare(ct: CrystalType, a, b) -> Order:
    ct.check_word((a, b))
    if a == b:
        return Order.EQUAL
    if ct.incomparable(a, b):
        return Order.INCOMPARABLE
    return Order.LESS if ct.position[a] < ct.position[b] else Order.GREATER


def basis_edge_f(ct: CrystalType, i: int, x):
    ct.check_label(i)
    ct.check_word((x,))
    return ct.f_edges[i].get(x)


def basis_edge_e(ct: CrystalType, i: int, x):
    ct.check_label(i)
    ct.check_word((x,))
    return ct.e_edges[i].get(x)


# -- words -------------------------------------------------------------------


@dataclass(frozen=True)
class RhoResult:
    """Reduced signature ``-^e_count +^f_count`` of a word for one label."""

    e_count: int
    f_count: int
    e_position: int | None
    f_position: int | None


def _bracket(ct, i, w):
    return kernels.bracket(w, ct.offset, ct._eps[i], ct._phi[i])


def rho(ct: CrystalType, i: int, w) -> RhoResult:
    ct.check_label(i)
    w = ct.check_word(w)
    e, f, ep, fp = _bracket(ct, i, w)
    return RhoResult(e, f, ep if ep >= 0 else None, fp if fp >= 0 else None)


def _op_e(ct, i, w):
    e, _, pos, _ = _bracket(ct, i, w)
    if not e:
        return None
    return w[:pos] + (ct.e_edges[i][w[pos]],) + w[pos + 1:]


def _op_f(ct, i, w):
    _, f, _, pos = _bracket(ct, i, w)
    if not f:
        return None
    return w[:pos] + (ct.f_edges[i][w[pos]],) + w[pos + 1:]


def op_e(ct: CrystalType, i: int, w):
    """Raise ``w`` by e_i; ``None`` if undefined."""
    ct.check_label(i)
    return _op_e(ct, i, ct.check_word(w))


def op_f(ct: CrystalType, i: int, w):
    """Lower ``w`` by f_i; ``None`` if undefined."""
    ct.check_label(i)
    return _op_f(ct, i, ct.check_word(w))


def _weight(ct, w):
    acc = [0] * ct.dim
    wts = ct.weights
    for x in w:
        for k, c in enumerate(wts[x]):
            acc[k] += c
    return tuple(acc)


def weight(ct: CrystalType, w) -> tuple:
    return _weight(ct, ct.check_word(w))


def _is_highest_weight(ct, w):
    for i in ct.labels:
        if _bracket(ct, i, w)[0]:
            return False
    return True


def is_highest_weight(ct: CrystalType, w) -> bool:
    return _is_highest_weight(ct, ct.check_word(w))


def _raise(ct, w):
    steps = []
    while True:
        for i in ct.labels:
            e, _, pos, _ = _bracket(ct, i, w)
            if e:
                w = w[:pos] + (ct.e_edges[i][w[pos]],) + w[pos + 1:]
                steps.append(("e", i))
                break
        else:
            return w, tuple(steps)


def raise_to_highest(ct: CrystalType, w):
    """Return ``(w0, seq)``: the highest-weight word of ``B(w)`` and the e-steps taken.

    The smallest defined label is applied first at every step, so ``seq`` is
    deterministic.  ``apply_sequence(ct, w0, lowering_path(seq)) == w``.
    """
    return _raise(ct, ct.check_word(w))


def lowering_path(seq):
    """Invert a raising sequence: reversed, with every e_i replaced by f_i."""
    flip = {"e": "f", "f": "e"}
    return tuple((flip[d], i) for d, i in reversed(seq))


def _apply(ct, w, seq):
    for d, i in seq:
        w = _op_e(ct, i, w) if d == "e" else _op_f(ct, i, w)
        if w is None:
            return None
    return w


def apply_sequence(ct: CrystalType, w, seq):
    """Apply operator steps ``(direction, i)`` left to right; ``None`` if a step is undefined."""
    w = ct.check_word(w)
    for d, i in seq:
        if d not in ("e", "f"):
            raise CrystalError(f"bad operator direction {d!r}")
        ct.check_label(i)
    return _apply(ct, w, seq)
