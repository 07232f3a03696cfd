"""Deterministic JSON, Markdown and DOT renderings of verification output."""
from __future__ import annotations

import json
from typing import Sequence

import networkx as nx

from ginv.errors import InvalidFormat
from ginv.verifier.claims import ClaimResult
from ginv.verifier.schema import CLASSES, ElementClass, RelationSchema

FORMATS = ("json", "markdown", "dot")


def emit_report(results: Sequence[ClaimResult], schema: RelationSchema | None,
                fmt: str) -> str:
    fmt = fmt.lower()
    if fmt in ("md",):
        fmt = "markdown"
    if fmt == "json":
        return _json(results, schema)
    if fmt == "markdown":
        return _markdown(results, schema)
    if fmt == "dot":
        return _dot(schema)
    raise InvalidFormat(f"unknown report format {fmt!r}; expected one of {', '.join(FORMATS)}")


def _json(results, schema) -> str:
    doc = {"claims": [r.to_json() for r in results],
           "schema": None if schema is None else schema.to_json()}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _cell(text: str) -> str:
    return str(text).replace("|", "\\|")


def _markdown(results, schema) -> str:
    lines = ["# Verification report", ""]
    if results:
        lines += ["| claim | ring | scope | checked | verdict |",
                  "|---|---|---|---|---|"]
        for r in results:
            lines.append(f"| {r.claim_id} | {r.ring_id} | {_cell(r.scope)} | "
                         f"{r.elements_checked} | {r.verdict.name} |")
        bad = [r for r in results if r.verdict.name == "Counterexample"]
        for r in bad:
            doc = r.to_json()["counterexample"]
            lines += ["", f"## Counterexample to {r.claim_id} in {r.ring_id}", "",
                      f"subject: `{json.dumps(doc['subject'], sort_keys=True)}`", ""]
            for text, value in doc["truth"].items():
                lines.append(f"- `{_cell(text)}`: {value}")
        skipped = [r for r in results if r.verdict.name == "Skipped"]
        if skipped:
            lines += ["", "## Skipped", ""]
            lines += [f"- {r.claim_id} in {r.ring_id}: {r.verdict.reason}" for r in skipped]
    else:
        lines.append("No claims were run.")
    if schema is not None:
        lines += ["", "## Relation schema", "",
                  f"Rings: {', '.join(schema.rings)} ({schema.elements_audited} elements)", "",
                  "| implication | witnesses | unresolved |", "|---|---|---|"]
        for e in schema.edges:
            lines.append(f"| {e.source.value} => {e.target.value} | {e.witnesses} | "
                         f"{e.unresolved} |")
        lines += ["", "| separation | count | first example per ring |", "|---|---|---|"]
        for s in schema.separations:
            ex = "; ".join(f"{rid}: `{_cell(el)}`" for rid, el in s.examples)
            lines.append(f"| {s.source.value} =/=> {s.target.value} | {s.count} | {ex} |")
    return "\n".join(lines) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_graph(schema: RelationSchema) -> tuple[nx.DiGraph, dict[int, list[ElementClass]]]:
    """Transitive reduction of the condensed implication graph.

    Classes that imply each other collapse into one node.  Node ids are the
    positions of their first member in ``CLASSES`` so the result does not
    depend on networkx's internal numbering.
    """
    g = nx.DiGraph()
    g.add_nodes_from(CLASSES)
    g.add_edges_from((e.source, e.target) for e in schema.edges)
    cond = nx.condensation(g)
    order = {c: i for i, c in enumerate(CLASSES)}
    members: dict[int, list[ElementClass]] = {}
    renumber = {}
    for n, data in cond.nodes(data=True):
        ms = sorted(data["members"], key=order.__getitem__)
        key = order[ms[0]]
        renumber[n] = key
        members[key] = ms
    h = nx.DiGraph()
    h.add_nodes_from(sorted(members))
    h.add_edges_from((renumber[u], renumber[v]) for u, v in cond.edges())
    return nx.transitive_reduction(h), members


def _dot(schema) -> str:
    lines = ["digraph relation_schema {", "  rankdir=BT;", "  node [shape=box];"]
    if schema is None:
        lines.append("}")
        return "\n".join(lines) + "\n"
    red, members = hasse_graph(schema)
    names = {k: " = ".join(c.value for c in ms) for k, ms in members.items()}
    for k in sorted(members):
        lines.append(f"  n{k} [label={_quote(names[k])}];")
    for u, v in sorted(red.edges()):
        lines.append(f"  n{u} -> n{v};")
    for u, v in sorted(red.edges()):
        # the reverse inclusion fails: show the first separating element found
        sep = schema.separation(members[v][0], members[u][0])
        if sep is None:
            continue
        rid, el = sep.examples[0]
        lines.append(f"  n{v} -> n{u} [style=dashed, color=red, constraint=false, "
                     f"label={_quote(f'{rid}: {el}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
