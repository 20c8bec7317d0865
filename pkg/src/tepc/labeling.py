"""Edge labelings, their induced vertex labels, and the cordiality check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from tepc.errors import BindingMismatch
from tepc.graphs import Edge, Graph


@dataclass(frozen=True)
class EdgeLabeling:
    """A 0/1 label for every edge of ``graph``, in canonical edge order."""

    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        labels = tuple(int(b) for b in self.labels)
        if len(labels) != self.graph.edge_count:
            raise BindingMismatch(
                f"labeling has {len(labels)} labels but the graph has {self.graph.edge_count} edges"
            )
        if any(b not in (0, 1) for b in labels):
            raise ValueError("edge labels must be 0 or 1")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_mapping(cls, graph: Graph, labels: Mapping[Edge, int]) -> EdgeLabeling:
        """Build from an ``{edge: bit}`` mapping that must cover exactly the edge set."""
        canon = {(min(e), max(e)): b for e, b in labels.items()}
        if set(canon) != set(graph.edges):
            missing = set(graph.edges) - set(canon)
            extra = set(canon) - set(graph.edges)
            raise BindingMismatch(f"edge mapping mismatch: missing={sorted(missing)} extra={sorted(extra)}")
        return cls(graph, tuple(canon[e] for e in graph.edges))

    @classmethod
    def from_mask(cls, graph: Graph, mask: int) -> EdgeLabeling:
        """Bit ``k`` of ``mask`` is the label of canonical edge ``k``."""
        return cls(graph, tuple((mask >> k) & 1 for k in range(graph.edge_count)))

    @property
    def mask(self) -> int:
        return sum(b << k for k, b in enumerate(self.labels))

    def label_of(self, u: int, v: int) -> int:
        return self.labels[self.graph.index_of(u, v)]


@dataclass(frozen=True)
class VertexLabeling:
    """Vertex labels induced by an edge labeling; build via :func:`induced_vertex_labels`."""

    source: EdgeLabeling
    labels: tuple[int, ...]


@dataclass(frozen=True)
class Tally:
    e0: int
    e1: int
    v0: int
    v1: int
    gap: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gap", (self.v0 + self.e0) - (self.v1 + self.e1))

    @property
    def is_tepc(self) -> bool:
        return abs(self.gap) <= 1

    def as_dict(self) -> dict[str, int]:
        return {"e0": self.e0, "e1": self.e1, "v0": self.v0, "v1": self.v1, "gap": self.gap}


def _bind(g: Graph, f: EdgeLabeling) -> None:
    if f.graph != g:
        raise BindingMismatch("labeling is bound to a different graph")


def induced_vertex_labels(g: Graph, f: EdgeLabeling) -> VertexLabeling:
    """Each vertex gets the product of its incident edge labels (1 if isolated)."""
    _bind(g, f)
    labels = tuple(int(all(f.labels[k] for k in g.incident_edges[v])) for v in range(g.vertex_count))
    return VertexLabeling(f, labels)


def tally(g: Graph, f: EdgeLabeling) -> Tally:
    vertex_labels = induced_vertex_labels(g, f).labels
    e1 = sum(f.labels)
    v1 = sum(vertex_labels)
    return Tally(e0=g.edge_count - e1, e1=e1, v0=g.vertex_count - v1, v1=v1)


def is_tepc(g: Graph, f: EdgeLabeling) -> bool:
    return abs(tally(g, f).gap) <= 1


def verdict(t: Tally) -> dict[str, int | bool]:
    """Verdict record ``{"e0", "e1", "v0", "v1", "gap", "tepc"}``."""
    return {**t.as_dict(), "tepc": t.is_tepc}

