"""Columns, admissibility, splits, the column relation ``precedes``, tabloids and tableaux.

Columns are stored as tuples of letters read top to bottom.  Tabloids store
their columns in reading order, rightmost column first, so that the reading
of a tabloid is the plain concatenation of its column words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .crystal import CrystalError, CrystalType, _is_highest_weight, format_word

G2_PATH = (1, 2, 3, 0, -3, -2, -1)


# -- column words ------------------------------------------------------------


def _is_column_word(ct: CrystalType, w) -> bool:
    if not w:
        return False
    pos = ct.position
    fam = ct.family
    if fam == "G2":
        if len(w) == 1:
            return True
        return len(w) == 2 and (w == (0, 0) or pos[w[0]] < pos[w[1]])
    if fam in ("A", "C"):
        return all(pos[a] < pos[b] for a, b in zip(w, w[1:]))
    if fam == "B":
        return all(pos[a] < pos[b] or a == b == 0 for a, b in zip(w, w[1:]))
    # type D: [1, n-1] increasing, then an alternating n / -n block, then barred increasing
    n = ct.n
    for a, b in zip(w, w[1:]):
        if abs(a) == n and abs(b) == n:
            if a == b:
                return False
        elif pos[a] >= pos[b]:
            return False
    return True


def n_count(ct: CrystalType, w, z: int) -> int:
    """Number of letters ``x`` of ``w`` with ``x <= z`` or ``-z <= x``."""
    bar = -z if ct.has_letter(-z) else None
    k = 0
    for x in w:
        if ct.le(x, z) or (bar is not None and ct.le(bar, x)):
            k += 1
    return k


def g2_dist(a: int, b: int) -> int:
    """Number of arrows between ``a`` and ``b`` in the G2 basis path."""
    try:
        return abs(G2_PATH.index(a) - G2_PATH.index(b))
    except ValueError:
        raise CrystalError("g2_dist takes G2 letters") from None


@lru_cache(maxsize=None)
def _admissible(ct: CrystalType, w) -> bool:
    if not _is_column_word(ct, w):
        return False
    for z in range(1, ct.n + 1):
        if n_count(ct, w, z) > z:
            return False
    if ct.family == "B" and 0 in w and len(w) > ct.n:
        return False
    if ct.family == "G2" and len(w) == 2:
        bound = 2 if w[0] in (1, 0) else 3
        if g2_dist(w[0], w[1]) > bound:
            return False
    return True


@lru_cache(maxsize=None)
def _split(ct: CrystalType, w):
    """``(l, r)`` for a column word, ``None`` when the column cannot be split."""
    if ct.family in ("A", "G2"):
        return w, w
    n = ct.n
    if ct.family == "D":
        b = list(w)
        k = 0
        while k + 1 < len(b):
            if b[k] == -n and b[k + 1] == n:
                b[k] = b[k + 1] = 0
                k += 2
            else:
                k += 1
        w0 = tuple(b)
    else:
        w0 = w
    present = set(w0)
    # pairs, largest first: every 0 is one pair sitting above n
    zs = [0] * w0.count(0) + [z for z in range(n, 0, -1) if z in present and -z in present]
    ts = []
    bound = n + 1
    for z in zs:
        top = min(bound, n + 1 if z == 0 else z)
        t = top - 1
        while t >= 1 and (t in present or -t in present):
            t -= 1
        if t < 1:
            return None
        ts.append(t)
        bound = t
    left = list(w0)
    right = list(w0)
    for z, t in zip(zs, ts):
        if z == 0:
            left[left.index(0)] = t
            right[right.index(0)] = -t
        else:
            left[left.index(z)] = t
            right[right.index(-z)] = -t
    key = ct.position.__getitem__
    return tuple(sorted(left, key=key)), tuple(sorted(right, key=key))


# -- data types --------------------------------------------------------------


@dataclass(frozen=True)
class Column:
    ct: CrystalType
    letters: tuple

    @property
    def height(self) -> int:
        return len(self.letters)

    def __str__(self):
        return "[" + format_word(self.letters) + "]"

    def __len__(self):
        return len(self.letters)


@dataclass(frozen=True)
class AdmissibleColumn(Column):
    """An admissible column with its left and right splits (both the column itself in A and G2)."""

    l_split: tuple = ()
    r_split: tuple = ()


@dataclass(frozen=True)
class Tabloid:
    """Columns in reading order; ``columns[0]`` is the rightmost column."""

    ct: CrystalType
    columns: tuple

    def reading(self) -> tuple:
        return tuple(x for c in self.columns for x in c.letters)

    @property
    def heights(self) -> tuple:
        return tuple(len(c) for c in self.columns)

    def __str__(self):
        return " ".join(str(c) for c in self.columns)


@dataclass(frozen=True)
class Shape:
    """Column heights from left to right; ``bar`` selects rows of -n for full-height D columns."""

    heights: tuple
    bar: bool = False

    @classmethod
    def from_rows(cls, rows, bar: bool = False) -> "Shape":
        rows = [r for r in rows if r > 0]
        width = rows[0] if rows else 0
        return cls(tuple(sum(1 for r in rows if r > j) for j in range(width)), bar)

    @property
    def rows(self) -> tuple:
        top = self.heights[0] if self.heights else 0
        return tuple(sum(1 for h in self.heights if h > i) for i in range(top))


# -- constructors ------------------------------------------------------------


def parse_column(ct: CrystalType, w) -> Column | None:
    """Shape check only: the column for ``w`` or ``None``."""
    w = ct.check_word(w)
    return Column(ct, w) if _is_column_word(ct, w) else None


@lru_cache(maxsize=None)
def _make(ct, w):
    if not _admissible(ct, w):
        return None
    sp = _split(ct, w)
    if sp is None:
        raise AssertionError(f"admissible column {format_word(w)} has no split")
    return AdmissibleColumn(ct, w, sp[0], sp[1])


def make_admissible(ct: CrystalType, w) -> AdmissibleColumn | None:
    if isinstance(w, Column):
        w = w.letters
    return _make(ct, ct.check_word(w))


def column(ct: CrystalType, w) -> AdmissibleColumn:
    """Like :func:`make_admissible` but raises on non-admissible input."""
    c = make_admissible(ct, w)
    if c is None:
        raise CrystalError(f"[{format_word(tuple(w))}] is not an admissible {ct.spec} column")
    return c


def _letters(c):
    return c.letters if isinstance(c, Column) else tuple(c)


def is_admissible(ct: CrystalType, c) -> bool:
    return _admissible(ct, ct.check_word(_letters(c)))


def split(ct: CrystalType, c):
    """``(l, r)`` as columns, or ``None`` if the splitting procedure fails."""
    w = ct.check_word(_letters(c))
    if not _is_column_word(ct, w):
        raise CrystalError(f"{format_word(w)} is not a column word")
    sp = _split(ct, w)
    if sp is None:
        return None
    return Column(ct, sp[0]), Column(ct, sp[1])


# -- the column relation -----------------------------------------------------


def _rows_le(ct, left, right):
    if len(left) < len(right):
        return False
    return all(ct.le(a, b) for a, b in zip(left, right))


@lru_cache(maxsize=None)
def _precedes(ct: CrystalType, w2, w1) -> bool:
    if ct.family != "G2":
        return _rows_le(ct, _split(ct, w2)[1], _split(ct, w1)[0])
    if len(w2) < len(w1):
        return False
    a, c = w2[0], w1[0]
    if not ct.le(a, c) or a == c == 0:
        return False
    if len(w1) == 1:
        return True
    b, d = w2[1], w1[1]
    if not ct.le(b, d) or b == d == 0:
        return False
    if a in (2, 3, 0) and g2_dist(a, d) < 3:
        return False
    if a == -3 and g2_dist(a, d) < 2:
        return False
    return True


@lru_cache(maxsize=None)
def _dn_ok(ct: CrystalType, w2, w1) -> bool:
    if ct.family != "D":
        return True
    n = ct.n
    x = _split(ct, w2)[1]
    y = _split(ct, w1)[0]
    if len(x) < len(y):
        return True
    for p, a in enumerate(x, 1):
        if a < 1 or a >= n or -a not in y:
            continue
        s = y.index(-a) + 1
        if s - p != n - a:
            continue
        for r, top in enumerate(x, 1):
            if abs(top) != n:
                continue
            for q, bottom in enumerate(y, 1):
                # the n-letters at rows r and q agree when r - q is odd, differ when even
                if abs(bottom) == n and p <= q < r <= s and (top == bottom) == bool((r - q) % 2):
                    return False
    return True


def precedes(ct: CrystalType, b2, b1) -> bool:
    """Whether ``b2`` may sit directly left of ``b1`` in a tableau."""
    w2 = ct.check_word(_letters(b2))
    w1 = ct.check_word(_letters(b1))
    if not (_admissible(ct, w2) and _admissible(ct, w1)):
        raise CrystalError("precedes takes admissible columns")
    return _precedes(ct, w2, w1)


def dn_pair_ok(ct: CrystalType, b2, b1) -> bool:
    """False iff the two-column D tabloid (r(b2), l(b1)) holds an a-configuration with mu(a) = n - a.

    Rows p <= q < r <= s carry a, an n-letter, an n-letter and -a; the two
    n-letters (rows r left and q right) are equal when r - q is odd and
    opposite when it is even.
    """
    w2 = ct.check_word(_letters(b2))
    w1 = ct.check_word(_letters(b1))
    if not (_admissible(ct, w2) and _admissible(ct, w1)):
        raise CrystalError("dn_pair_ok takes admissible columns")
    return _dn_ok(ct, w2, w1)


def _pair_ok(ct, left, right) -> bool:
    return _precedes(ct, left, right) and _dn_ok(ct, left, right)


# -- tabloids ----------------------------------------------------------------


def make_tabloid(ct: CrystalType, columns) -> Tabloid:
    """Tabloid from column words or columns given in reading order (rightmost first).

    Columns only need to be column words here; :func:`is_tableau` checks admissibility.
    """
    cols = []
    for c in columns:
        w = ct.check_word(_letters(c))
        if not _is_column_word(ct, w):
            raise CrystalError(f"{format_word(w)} is not a {ct.spec} column word")
        cols.append(_make(ct, w) or Column(ct, w))
    return Tabloid(ct, tuple(cols))


def _is_tableau_words(ct, ws) -> bool:
    if not all(_admissible(ct, w) for w in ws):
        return False
    return all(_pair_ok(ct, ws[k + 1], ws[k]) for k in range(len(ws) - 1))


def is_tableau(ct: CrystalType, t: Tabloid) -> bool:
    return _is_tableau_words(ct, tuple(c.letters for c in t.columns))


def reading(t: Tabloid) -> tuple:
    return t.reading()


def letters_as_tabloid(ct: CrystalType, w) -> Tabloid:
    """One height-1 column per letter; its reading is ``w``."""
    w = ct.check_word(w)
    return Tabloid(ct, tuple(_make(ct, (x,)) for x in w))


def refactor(ct: CrystalType, w, heights) -> tuple:
    """Cut ``w`` into consecutive pieces of the given lengths."""
    out = []
    k = 0
    for h in heights:
        out.append(tuple(w[k:k + h]))
        k += h
    if k != len(w):
        raise CrystalError("heights do not add up to the word length")
    return tuple(out)


def format_tabloid(columns) -> str:
    return " ".join("[" + format_word(_letters(c)) + "]" for c in columns)


def format_rows(columns) -> list:
    """Rows of the drawn tabloid, top first; ``.`` marks an empty cell."""
    drawn = [_letters(c) for c in reversed(tuple(columns))]
    height = max((len(c) for c in drawn), default=0)
    rows = []
    for r in range(height):
        cells = [str(c[r]) if r < len(c) else "." for c in drawn]
        rows.append("[" + " ".join(cells).rstrip(" .") + "]")
    return rows


def parse_tabloid(ct: CrystalType, text: str) -> Tabloid:
    """Parse ``[1 2] [1]`` (reading order)."""
    cols = []
    for chunk in text.replace("]", "]\n").split("\n"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("[") and chunk.endswith("]")):
            raise CrystalError(f"bad column text {chunk!r}")
        cols.append(tuple(int(t) for t in chunk[1:-1].split()))
    return make_tabloid(ct, cols)


# -- highest-weight tableaux -------------------------------------------------


def max_height(ct: CrystalType) -> int:
    return 2 if ct.family == "G2" else ct.n


def highest_column(ct: CrystalType, h: int, bar: bool = False) -> tuple:
    if not 1 <= h <= max_height(ct):
        raise CrystalError(f"height {h} out of range for {ct.spec}")
    col = tuple(range(1, h + 1))
    if bar and ct.family == "D" and h == ct.n:
        col = col[:-1] + (-ct.n,)
    return col


def highest_weight_tableau(ct: CrystalType, shape) -> Tabloid:
    """The tableau whose i-th row is filled with i (full D rows with -n when ``shape.bar``)."""
    if not isinstance(shape, Shape):
        shape = Shape(tuple(shape))
    hs = shape.heights
    if any(a < b for a, b in zip(hs, hs[1:])):
        raise CrystalError("column heights must weakly decrease left to right")
    cols = tuple(highest_column(ct, h, shape.bar) for h in reversed(hs))
    t = Tabloid(ct, tuple(_make(ct, c) for c in cols))
    assert _is_tableau_words(ct, cols), "row-filled tabloid is not a tableau"
    assert _is_highest_weight(ct, t.reading())
    return t


@lru_cache(maxsize=None)
def _sigma(ct: CrystalType) -> tuple:
    found = set()
    top = max_height(ct)

    def grow(w):
        found.add(w)
        if len(w) == top:
            return
        for x in ct.alphabet:
            v = w + (x,)
            if _is_column_word(ct, v):
                grow(v)

    for x in ct.alphabet:
        grow((x,))
    cols = [w for w in found if _admissible(ct, w)]
    cols.sort(key=lambda w: (len(w), [ct.position[x] for x in w]))
    return tuple(cols)


def enumerate_admissible_columns(ct: CrystalType) -> tuple:
    """All admissible columns, ordered by height then lexicographically (n before -n in type D)."""
    return tuple(_make(ct, w) for w in _sigma(ct))
