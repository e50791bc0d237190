"""Connected components of the crystal graph on words."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .crystal import CrystalError, CrystalType, ResourceLimit, _apply, _is_highest_weight, _op_e, _op_f, format_word

MAX_VERTICES = 50_000


@dataclass(frozen=True)
class ComponentGraph:
    """Vertices, f-edges ``(u, i, v)`` with ``v = f_i(u)``, and the highest-weight root."""

    ct: CrystalType
    vertices: frozenset
    edges: frozenset
    root: tuple

    def ordered_vertices(self):
        pos = self.ct.position
        return sorted(self.vertices, key=lambda w: (len(w), [pos[x] for x in w]))


def component(ct: CrystalType, w, max_vertices: int = MAX_VERTICES) -> ComponentGraph:
    """The component ``B(w)``: closure of ``{w}`` under defined e_i and f_i."""
    if max_vertices <= 0:
        raise CrystalError("max_vertices must be positive")
    w = ct.check_word(w)
    seen = {w}
    queue = deque([w])
    edges = set()
    while queue:
        u = queue.popleft()
        for i in ct.labels:
            v = _op_f(ct, i, u)
            if v is not None:
                edges.add((u, i, v))
            for x in (v, _op_e(ct, i, u)):
                if x is not None and x not in seen:
                    seen.add(x)
                    if len(seen) > max_vertices:
                        raise ResourceLimit(f"component of {format_word(w)!r} exceeds {max_vertices} vertices")
                    queue.append(x)
    roots = [u for u in seen if _is_highest_weight(ct, u)]
    root = min(roots, key=lambda r: [ct.position[x] for x in r])
    return ComponentGraph(ct, frozenset(seen), frozenset(edges), root)


def highest_vertices(g: ComponentGraph) -> list:
    return [u for u in g.ordered_vertices() if _is_highest_weight(g.ct, u)]


def unique_highest_check(g: ComponentGraph) -> bool:
    """Exactly one vertex is highest weight, and it has no incoming edge."""
    tops = highest_vertices(g)
    if len(tops) != 1:
        return False
    return all(v != tops[0] for _, _, v in g.edges)


def reachable_from_root(g: ComponentGraph) -> bool:
    """Every vertex is an f-sequence image of the root."""
    seen = {g.root}
    queue = deque([g.root])
    out = {}
    for u, i, v in g.edges:
        out.setdefault(u, []).append(v)
    while queue:
        for v in out.get(queue.popleft(), ()):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen == set(g.vertices)


def vertex_at(g: ComponentGraph, seq):
    """The vertex reached from the root by the f-labels in ``seq``, or ``None``."""
    return _apply(g.ct, g.root, tuple(("f", i) for i in seq))


def _name(w):
    return format_word(w) or "ε"


def to_dot(g: ComponentGraph) -> str:
    order = g.ordered_vertices()
    ids = {w: f"v{k}" for k, w in enumerate(order)}
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for w in order:
        extra = ", shape=box, style=bold" if w == g.root else ""
        lines.append(f'  {ids[w]} [label="{_name(w)}"{extra}];')
    for u, i, v in sorted(g.edges, key=lambda e: (ids[e[0]], e[1], ids[e[2]])):
        lines.append(f'  {ids[u]} -> {ids[v]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: ComponentGraph) -> str:
    order = g.ordered_vertices()
    adj = {}
    for u, i, v in g.edges:
        adj.setdefault(_name(u), []).append({"label": i, "to": _name(v)})
    for k in adj:
        adj[k].sort(key=lambda e: (e["label"], e["to"]))
    return json.dumps({"type": g.ct.spec, "root": _name(g.root), "vertices": [_name(w) for w in order],
                       "edges": {_name(w): adj.get(_name(w), []) for w in order}}, indent=1, ensure_ascii=False)
