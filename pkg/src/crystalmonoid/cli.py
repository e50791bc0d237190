"""Command-line interface: ``crystalmonoid COMMAND --type T ...``.

Exit status: 0 success or true, 1 false, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import json
import sys
from functools import wraps

import click

from . import automata, checks, graph, plactic, presentations, tableaux
from .crystal import CrystalError, ResourceLimit, _raise, _weight, format_word, parse_type, parse_word

EXIT_FALSE, EXIT_USAGE, EXIT_LIMIT = 1, 2, 3


class TypeSpec(click.ParamType):
    name = "type"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_type(value)
        except CrystalError as exc:
            self.fail(str(exc), param, ctx)


TYPE = TypeSpec()


def _word_text(w) -> str:
    return format_word(w) or "ε"


def _cols_text(cols) -> str:
    return " ".join("[" + format_word(c) + "]" for c in cols) or "ε"


def _emit(data, as_json: bool, text: str):
    if as_json:
        click.echo(json.dumps(data, ensure_ascii=False, sort_keys=True))
    else:
        click.echo(text)


def _guarded(fn):
    """Map library errors to exit codes."""
    @wraps(fn)
    def run(*args, **kw):
        try:
            return fn(*args, **kw)
        except ResourceLimit as exc:
            click.echo(f"resource limit: {exc}", err=True)
            sys.exit(EXIT_LIMIT)
        except CrystalError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_USAGE)
    return run


def type_option(fn):
    return click.option("--type", "ct", type=TYPE, default="A:2", show_default=True,
                        help="A:n, B:n, C:n, D:n or G2")(fn)


def json_option(fn):
    return click.option("--json", "as_json", is_flag=True, help="machine-readable output")(fn)


@click.group()
def main():
    """Plactic monoids of types A, B, C, D and G2 via crystal bases."""


@main.command()
@type_option
@json_option
@click.option("--oracle", is_flag=True, help="also compute the class by breadth-first search")
@click.option("--max-class", default=10**6, show_default=True, help="oracle class size limit")
@click.argument("word", default="")
@_guarded
def nf(ct, as_json, oracle, max_class, word):
    """Normal form of WORD, the tableau rows (top first) and its columns in reading order."""
    w = parse_word(ct, word)
    cols = automata.incremental_nf(ct, w)
    reading = tuple(x for c in cols for x in c)
    data = {"type": ct.spec, "word": list(w), "nf": list(reading), "columns": [list(c) for c in cols]}
    rows = tableaux.format_rows(cols)
    data["rows"] = rows
    text = "\n".join([_word_text(reading), *rows, "columns: " + _cols_text(cols)])
    if oracle:
        o = presentations.oracle_nf(presentations.build_presentation(ct), w, max_class_size=max_class)
        data["oracle"] = list(o)
        text += f"\noracle: {_word_text(o)}"
    _emit(data, as_json, text)


@main.command()
@type_option
@json_option
@click.argument("u")
@click.argument("v")
@_guarded
def eq(ct, as_json, u, v):
    """Exit 0 if U and V are equal in the plactic monoid, 1 otherwise."""
    a, b = parse_word(ct, u), parse_word(ct, v)
    same = automata.equal(ct, a, b)
    _emit({"type": ct.spec, "equal": same}, as_json, "equal" if same else "not equal")
    sys.exit(0 if same else EXIT_FALSE)


@main.command()
@type_option
@json_option
@click.argument("u")
@click.argument("v")
@_guarded
def iso(ct, as_json, u, v):
    """Exit 0 if the components of U and V are isomorphic, 1 otherwise."""
    a, b = parse_word(ct, u), parse_word(ct, v)
    same = automata.components_isomorphic(ct, a, b)
    _emit({"type": ct.spec, "isomorphic": same}, as_json, "isomorphic" if same else "not isomorphic")
    sys.exit(0 if same else EXIT_FALSE)


@main.command()
@type_option
@click.option("--presentation", is_flag=True, help="dump the defining relations instead")
@_guarded
def rules(ct, presentation):
    """JSON dump of the rewriting system (or of the defining relations)."""
    if presentation:
        click.echo(presentations.build_presentation(ct).to_json())
    else:
        click.echo(plactic.build_rule_table(ct).to_json())


@main.command()
@type_option
@json_option
@_guarded
def columns(ct, as_json):
    """List the admissible columns, one per line."""
    cols = [c.letters for c in tableaux.enumerate_admissible_columns(ct)]
    _emit([list(c) for c in cols], as_json, "\n".join(_cols_text([c]) for c in cols))


@main.command("component")
@type_option
@json_option
@click.option("--dot", is_flag=True, help="Graphviz output")
@click.option("--max-vertices", default=graph.MAX_VERTICES, show_default=True)
@click.argument("word", default="")
@_guarded
def component_cmd(ct, as_json, dot, max_vertices, word):
    """The connected component of WORD in the crystal graph."""
    g = graph.component(ct, parse_word(ct, word), max_vertices)
    if dot:
        click.echo(graph.to_dot(g), nl=False)
    elif as_json:
        click.echo(graph.to_json(g))
    else:
        click.echo(f"{len(g.vertices)} vertices, {len(g.edges)} edges, highest weight {_word_text(g.root)}")


@main.command()
@type_option
@json_option
@click.argument("word", default="")
@_guarded
def wt(ct, as_json, word):
    """Weight of WORD."""
    v = _weight(ct, parse_word(ct, word))
    _emit({"type": ct.spec, "weight": list(v)}, as_json, " ".join(map(str, v)))


@main.command("raise")
@type_option
@json_option
@click.argument("word", default="")
@_guarded
def raise_cmd(ct, as_json, word):
    """Highest-weight word of the component of WORD and the e-steps taken."""
    w0, seq = _raise(ct, parse_word(ct, word))
    steps = [f"e{i}" for _, i in seq]
    _emit({"type": ct.spec, "highest": list(w0), "steps": steps}, as_json,
          f"{_word_text(w0)}\n{' '.join(steps) or '-'}")


@main.command()
@type_option
@json_option
@click.option("--seed", default=0, show_default=True, help="seed for sampled suites")
@click.option("--max-class", default=10**6, show_default=True)
@click.option("--max-vertices", default=graph.MAX_VERTICES, show_default=True)
@click.argument("suites", nargs=-1)
@_guarded
def check(ct, as_json, seed, max_class, max_vertices, suites):
    """Run invariant suites (all by default) and report pass/fail counts."""
    names = suites or checks.SUITES
    bad = [s for s in names if s not in checks.SUITES]
    if bad:
        raise CrystalError(f"unknown suite {bad[0]!r}; choose from {', '.join(checks.SUITES)}")
    results = []
    for name in names:
        kw = {"seed": seed, "max_class": max_class, "max_vertices": max_vertices}
        if name == "dfa" and len(plactic.build_rule_table(ct).sigma) > 41:
            kw["max_length"] = 3
        results.append(checks.run_suite(name, ct, **kw))
    data = [{"suite": r.name, "passed": r.passed, "failed": r.failed, "failures": [str(f) for f in r.failures]}
            for r in results]
    lines = [str(r) for r in results]
    for r in results:
        lines += [f"  {r.name} failure: {f}" for f in r.failures]
    _emit(data, as_json, "\n".join(lines))
    sys.exit(0 if all(r.ok for r in results) else EXIT_FALSE)


if __name__ == "__main__":
    main()
