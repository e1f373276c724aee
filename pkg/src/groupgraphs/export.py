"""Byte-stable JSON and DOT serialisation of labeled graphs."""

from __future__ import annotations

import json

from .graphs import LabeledGraph


def graph_to_obj(graph: LabeledGraph, group: str | None = None) -> dict:
    return {
        "group": group,
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges()],
    }


def graph_to_json(graph: LabeledGraph, group: str | None = None) -> str:
    return json.dumps(graph_to_obj(graph, group), sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def graph_from_json(text: str) -> tuple[LabeledGraph, str | None]:
    doc = json.loads(text)
    graph = LabeledGraph(doc["vertices"], (tuple(e) for e in doc["edges"]))
    return graph, doc.get("group")


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(graph: LabeledGraph, name: str = "G") -> str:
    lines = [f"graph {_quote(name)} {{"]
    lines += [f"  {_quote(v)};" for v in sorted(graph.vertices)]
    lines += [f"  {_quote(u)} -- {_quote(v)};" for u, v in graph.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_text(graph: LabeledGraph, group: str | None = None) -> str:
    head = f"{group or 'graph'}: {len(graph)} vertices, {graph.edge_count} edges"
    return "\n".join([head, *(f"{u} -- {v}" for u, v in graph.edges())]) + "\n"
