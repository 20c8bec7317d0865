"""JSON documents for graphs, labelings and reports, plus DOT export."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from tepc.graphs import Graph
from tepc.labeling import EdgeLabeling, induced_vertex_labels


class DocumentError(ValueError):
    """A JSON document is malformed or does not match its graph."""


def graph_to_doc(g: Graph) -> dict[str, Any]:
    return {
        "vertex_count": g.vertex_count,
        "edges": [list(e) for e in g.edges],
        "roles": {str(v): tag for v, tag in sorted(g.roles.items())},
    }


def graph_from_doc(doc: Any) -> Graph:
    try:
        vertex_count = doc["vertex_count"]
        edges = doc["edges"]
        roles = doc.get("roles") or {}
        if not isinstance(vertex_count, int) or isinstance(vertex_count, bool):
            raise TypeError("vertex_count must be an integer")
        pairs = []
        for e in edges:
            if len(e) != 2 or not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
                raise TypeError(f"bad edge {e!r}")
            pairs.append((e[0], e[1]))
        return Graph.from_edges(vertex_count, pairs, {int(k): str(v) for k, v in roles.items()})
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise DocumentError(f"malformed graph document: {exc}") from exc


def labeling_to_doc(f: EdgeLabeling, graph_ref: str | None = None) -> dict[str, Any]:
    """Labeling document; ``graph_ref`` names a graph file instead of embedding it."""
    return {
        "graph": graph_ref if graph_ref is not None else graph_to_doc(f.graph),
        "edge_labels": list(f.labels),
    }


def labeling_from_doc(doc: Any, graph: Graph | None = None, base_dir: Path | None = None) -> EdgeLabeling:
    """Parse a labeling document.

    The embedded or referenced graph must equal ``graph`` when one is
    given; with no embedded graph at all, ``graph`` is used directly.
    """
    try:
        ref = doc.get("graph")
        bits = doc["edge_labels"]
    except (AttributeError, KeyError) as exc:
        raise DocumentError(f"malformed labeling document: {exc}") from exc
    if isinstance(ref, str):
        path = Path(ref)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        bound = load_graph(path)
    elif ref is not None:
        bound = graph_from_doc(ref)
    else:
        bound = graph
    if bound is None:
        raise DocumentError("labeling document names no graph")
    if graph is not None and bound != graph:
        raise DocumentError("labeling is bound to a different graph")
    if not isinstance(bits, list) or any(b not in (0, 1) or isinstance(b, bool) for b in bits):
        raise DocumentError("edge_labels must be a list of 0/1 integers")
    if len(bits) != bound.edge_count:
        raise DocumentError(f"labeling has {len(bits)} labels but the graph has {bound.edge_count} edges")
    return EdgeLabeling(bound, tuple(bits))


def _read_json(path: Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc


def load_graph(path: Path | str) -> Graph:
    return graph_from_doc(_read_json(Path(path)))


def load_labeling(path: Path | str, graph: Graph | None = None) -> EdgeLabeling:
    path = Path(path)
    return labeling_from_doc(_read_json(path), graph, base_dir=path.parent)


def dump_json(doc: Any, path: Path | str) -> None:
    Path(path).write_text(json.dumps(doc) + "\n")


_FILL = {0: "lightgray", 1: "white"}


def to_dot(g: Graph, f: EdgeLabeling | None = None, name: str = "G") -> str:
    """Undirected DOT; with a labeling, edges carry 0/1 and vertices are filled by induced label."""
    lines = [f"graph {name} {{"]
    vertex_labels = induced_vertex_labels(g, f).labels if f is not None else None
    for v in range(g.vertex_count):
        attrs = [f'label="{g.role(v)}"']
        if vertex_labels is not None:
            attrs.append(f'style=filled fillcolor="{_FILL[vertex_labels[v]]}"')
            attrs.append(f'xlabel="{vertex_labels[v]}"')
        lines.append(f"  {v} [{' '.join(attrs)}];")
    for k, (a, b) in enumerate(g.edges):
        attr = f' [label="{f.labels[k]}"]' if f is not None else ""
        lines.append(f"  {a} -- {b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
