"""Simple undirected graphs and the families used by the labelers.

Vertex ids are dense integers starting at 0.  Edges are stored as
``(a, b)`` pairs with ``a < b`` and kept in lexicographic order, which is
the canonical edge order every labeling and file format relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping

from tepc.errors import InvalidParameter, UnsupportedSize

Edge = tuple[int, int]

ISOMORPHISM_MAX_VERTICES = 10


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``roles`` is informational only (``spine(i)``, ``copy(i,j)``,
    ``center``, ``rim(j)`` or ``plain``) and does not take part in
    equality: two graphs are the same graph when their vertex counts and
    canonical edge lists agree.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    roles: Mapping[int, str] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidParameter(f"vertex_count must be non-negative, got {self.vertex_count}")
        canon = set()
        for a, b in self.edges:
            if a == b:
                raise InvalidParameter(f"self-loop at vertex {a}")
            for x in (a, b):
                if not 0 <= x < self.vertex_count:
                    raise InvalidParameter(f"edge endpoint {x} outside [0, {self.vertex_count})")
            pair = (a, b) if a < b else (b, a)
            if pair in canon:
                raise InvalidParameter(f"parallel edge {pair}")
            canon.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        for v in self.roles:
            if not 0 <= v < self.vertex_count:
                raise InvalidParameter(f"role given for unknown vertex {v}")
        object.__setattr__(self, "roles", MappingProxyType(dict(self.roles)))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge], roles: Mapping[int, str] | None = None) -> Graph:
        return cls(vertex_count, tuple(tuple(e) for e in edges), dict(roles or {}))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        """Position of each edge in canonical order."""
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the canonical indices of its incident edges."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for k, (a, b) in enumerate(self.edges):
            inc[a].append(k)
            inc[b].append(k)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def index_of(self, u: int, v: int) -> int:
        """Canonical index of edge ``uv``; raises ``KeyError`` if absent."""
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def role(self, v: int) -> str:
        return self.roles.get(v, "plain")


@dataclass(frozen=True)
class CoronaLayout:
    """Index map for ``P_n ∘ P_m`` or ``P_n ∘ C_m``.

    All indices are 1-based, matching the usual ``u_i`` / ``v_j^i``
    notation.  Accessors return vertex ids or ``(a, b)`` edges of the
    underlying graph.
    """

    n: int
    m: int
    closed: bool  # copies are cycles

    def spine_vertex(self, i: int) -> int:
        self._check(i, 1, self.n, "i")
        return i - 1

    def copy_vertex(self, i: int, j: int) -> int:
        self._check(i, 1, self.n, "i")
        self._check(j, 1, self.m, "j")
        return self.n + (i - 1) * self.m + (j - 1)

    def spine_edge(self, i: int) -> Edge:
        self._check(i, 1, self.n - 1, "i")
        return (i - 1, i)

    def link_edge(self, i: int, j: int) -> Edge:
        return (self.spine_vertex(i), self.copy_vertex(i, j))

    def copy_edge(self, i: int, j: int) -> Edge:
        self._check(j, 1, self.m - 1, "j")
        return (self.copy_vertex(i, j), self.copy_vertex(i, j + 1))

    def closure_edge(self, i: int) -> Edge:
        if not self.closed:
            raise InvalidParameter("closure edges exist only when copies are cycles")
        return (self.copy_vertex(i, 1), self.copy_vertex(i, self.m))

    @property
    def vertex_count(self) -> int:
        return self.n * (1 + self.m)

    @property
    def edge_count(self) -> int:
        return 2 * self.n * self.m + (self.n - 1 if self.closed else -1)

    @staticmethod
    def _check(x: int, lo: int, hi: int, name: str) -> None:
        if not lo <= x <= hi:
            raise IndexError(f"{name}={x} outside [{lo}, {hi}]")


def build_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def build_cycle(m: int) -> Graph:
    if m < 3:
        raise InvalidParameter(f"cycle needs m >= 3, got {m}")
    return Graph.from_edges(m, [(j, j + 1) for j in range(m - 1)] + [(0, m - 1)])


def _hub(m: int, closed: bool) -> Graph:
    # center is vertex 0, rim vertex v_j is vertex j
    edges = [(0, j) for j in range(1, m + 1)]
    edges += [(j, j + 1) for j in range(1, m)]
    if closed:
        edges.append((1, m))
    roles = {0: "center", **{j: f"rim({j})" for j in range(1, m + 1)}}
    return Graph.from_edges(m + 1, edges, roles)


def build_fan(m: int) -> Graph:
    """Fan ``F_m``: a path ``v_1..v_m`` plus a center joined to every ``v_j``."""
    if m < 2:
        raise InvalidParameter(f"fan needs m >= 2, got {m}")
    return _hub(m, closed=False)


def build_wheel(m: int) -> Graph:
    """Wheel ``W_m``: a cycle ``v_1..v_m`` plus a center joined to every ``v_j``."""
    if m < 3:
        raise InvalidParameter(f"wheel needs m >= 3, got {m}")
    return _hub(m, closed=True)


def build_paw() -> Graph:
    """Triangle with a pendant edge, degree sequence (3, 2, 2, 1)."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def degree_sequence_realizations() -> dict[tuple[int, ...], Graph]:
    """Connected graphs realizing the degree sequences (1,1), (2,2,2,2), (3,2,2,1)."""
    return {
        (1, 1): build_path(2),
        (2, 2, 2, 2): build_cycle(4),
        (3, 2, 2, 1): build_paw(),
    }


def _is_canonical_path(g: Graph) -> bool:
    return g.edges == tuple((i, i + 1) for i in range(g.vertex_count - 1))


def _is_canonical_cycle(g: Graph) -> bool:
    m = g.vertex_count
    return m >= 3 and g.edges == tuple(sorted([(j, j + 1) for j in range(m - 1)] + [(0, m - 1)]))


def corona(g: Graph, h: Graph) -> tuple[Graph, CoronaLayout | None]:
    """Corona product ``g ∘ h``.

    Vertices of ``g`` keep their ids; copy ``i`` of ``h`` (1-based) occupies
    ids ``n + (i-1)·|V(h)| ...``.  A :class:`CoronaLayout` is returned only
    when ``g`` is a path and ``h`` is a path or a cycle in canonical
    vertex order; otherwise the layout is ``None``.
    """
    n, m = g.vertex_count, h.vertex_count
    if n < 1:
        raise InvalidParameter("corona needs a base graph with at least one vertex")
    edges = list(g.edges)
    roles = {u: f"spine({u + 1})" for u in range(n)}
    for i in range(n):
        off = n + i * m
        edges.extend((i, off + j) for j in range(m))
        edges.extend((off + a, off + b) for a, b in h.edges)
        roles.update({off + j: f"copy({i + 1},{j + 1})" for j in range(m)})
    product = Graph.from_edges(n * (1 + m), edges, roles)

    layout = None
    if _is_canonical_path(g):
        if _is_canonical_cycle(h):
            layout = CoronaLayout(n, m, closed=True)
        elif m >= 1 and _is_canonical_path(h):
            layout = CoronaLayout(n, m, closed=False)
    return product, layout


def corona_path_path(n: int, m: int) -> tuple[Graph, CoronaLayout]:
    g, layout = corona(build_path(n), build_path(m))
    assert layout is not None
    return g, layout


def corona_path_cycle(n: int, m: int) -> tuple[Graph, CoronaLayout]:
    g, layout = corona(build_path(n), build_cycle(m))
    assert layout is not None
    return g, layout


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted((g.degree(v) for v in range(g.vertex_count)), reverse=True))


def isomorphic_small(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by enumerating vertex bijections.

    The enumeration extends partial bijections one vertex at a time and
    abandons a branch as soon as a degree or an adjacency to an already
    placed vertex disagrees, so every surviving leaf is an isomorphism.
    """
    if g.vertex_count > ISOMORPHISM_MAX_VERTICES or h.vertex_count > ISOMORPHISM_MAX_VERTICES:
        raise UnsupportedSize(f"isomorphism test supports at most {ISOMORPHISM_MAX_VERTICES} vertices")
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if degree_sequence(g) != degree_sequence(h):
        return False

    nv = g.vertex_count
    order = sorted(range(nv), key=g.degree, reverse=True)
    image = [-1] * nv
    used = [False] * nv

    def extend(k: int) -> bool:
        if k == nv:
            return True
        u = order[k]
        for w in range(nv):
            if used[w] or h.degree(w) != g.degree(u):
                continue
            if any(g.has_edge(u, order[p]) != h.has_edge(w, image[order[p]]) for p in range(k)):
                continue
            image[u], used[w] = w, True
            if extend(k + 1):
                return True
            image[u], used[w] = -1, False
        return False

    return extend(0)
