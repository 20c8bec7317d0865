"""Exhaustive search over all ``2^|E|`` edge labelings.

Labelings are packed into an integer, bit ``k`` holding the label of
canonical edge ``k``.  The canonical enumeration order is the reflected
binary Gray sequence: step ``i`` visits labeling ``i ^ (i >> 1)``, so
consecutive labelings differ in exactly one edge and the tally can be
updated in O(1) per step.  Each vertex carries a counter of incident
0-edges; its induced label is 1 exactly when that counter is 0.

A contiguous block of Gray indices ``[s·2^r, (s+1)·2^r)`` keeps the top
``|E| - r`` bits fixed, so work splits into shards that are plain index
ranges.  Every shard is independent, and the merged report is defined
purely in terms of global Gray indices, which makes it identical for any
number of workers.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numba
import numpy as np

from tepc.errors import UnsupportedSize, WitnessFound
from tepc.graphs import Graph
from tepc.labeling import EdgeLabeling, Tally

DEFAULT_EDGE_BUDGET = 24
# shards per worker; finer shards let an early witness cancel more work
_SHARDS_PER_JOB = 4


def gray(i: int) -> int:
    return i ^ (i >> 1)


def flipped_bit(i: int) -> int:
    """Bit that changes between Gray codes ``i - 1`` and ``i`` (``i >= 1``)."""
    return (i & -i).bit_length() - 1


@dataclass(frozen=True)
class SearchReport:
    graph: Graph
    labelings_examined: int
    witness: EdgeLabeling | None
    tepc_count: int | None
    exhaustive: bool
    elapsed: float = field(default=0.0, compare=False)

    def as_dict(self) -> dict:
        return {
            "edges": self.graph.edge_count,
            "examined": self.labelings_examined,
            "tepc_count": self.tepc_count,
            "witness": list(self.witness.labels) if self.witness is not None else None,
            "exhaustive": self.exhaustive,
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }


class GrayWalker:
    """Reference incremental walker, one labeling at a time.

    Slow but transparent; the compiled scan below follows the same update
    rule and is checked against this class in the test suite.
    """

    def __init__(self, g: Graph, start: int = 0):
        self.graph = g
        self.index = start
        self.mask = gray(start)
        self.zero_count = [0] * g.vertex_count
        self.e0 = 0
        for k, (a, b) in enumerate(g.edges):
            if not (self.mask >> k) & 1:
                self.e0 += 1
                self.zero_count[a] += 1
                self.zero_count[b] += 1
        self.v0 = sum(1 for c in self.zero_count if c)

    def tally(self) -> Tally:
        g = self.graph
        return Tally(e0=self.e0, e1=g.edge_count - self.e0, v0=self.v0, v1=g.vertex_count - self.v0)

    def step(self) -> int:
        """Advance to the next Gray index; returns the flipped edge."""
        self.index += 1
        k = flipped_bit(self.index)
        a, b = self.graph.edges[k]
        bit = 1 << k
        if self.mask & bit:
            self.e0 += 1
            for w in (a, b):
                self.zero_count[w] += 1
                if self.zero_count[w] == 1:
                    self.v0 += 1
        else:
            self.e0 -= 1
            for w in (a, b):
                self.zero_count[w] -= 1
                if self.zero_count[w] == 0:
                    self.v0 -= 1
        self.mask ^= bit
        return k

    def walk(self, stop: int | None = None) -> Iterator[tuple[int, int, Tally]]:
        """Yield ``(index, mask, tally)`` from the current index up to ``stop``."""
        stop = 1 << self.graph.edge_count if stop is None else stop
        while self.index < stop:
            yield self.index, self.mask, self.tally()
            if self.index + 1 >= stop:
                break
            self.step()


@numba.njit(nogil=True, cache=True)
def _scan(eu, ev, n_vertices, start, stop, first_only):  # pragma: no cover - compiled
    # returns (tepc count, first witness Gray index or -1)
    n_edges = eu.shape[0]
    zero_count = np.zeros(n_vertices, np.int64)
    mask = start ^ (start >> 1)
    e0 = 0
    for k in range(n_edges):
        if not (mask >> k) & 1:
            e0 += 1
            zero_count[eu[k]] += 1
            zero_count[ev[k]] += 1
    v0 = 0
    for w in range(n_vertices):
        if zero_count[w] > 0:
            v0 += 1
    total = n_vertices + n_edges
    count = 0
    first = -1
    i = start
    while True:
        gap = 2 * (v0 + e0) - total
        if -1 <= gap <= 1:
            if first < 0:
                first = i
            count += 1
            if first_only:
                break
        i += 1
        if i >= stop:
            break
        k = 0
        while not (i >> k) & 1:
            k += 1
        a = eu[k]
        b = ev[k]
        if (mask >> k) & 1:
            e0 += 1
            zero_count[a] += 1
            if zero_count[a] == 1:
                v0 += 1
            zero_count[b] += 1
            if zero_count[b] == 1:
                v0 += 1
        else:
            e0 -= 1
            zero_count[a] -= 1
            if zero_count[a] == 0:
                v0 -= 1
            zero_count[b] -= 1
            if zero_count[b] == 0:
                v0 -= 1
        mask ^= 1 << k
    return count, first


def _endpoints(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    eu = np.array([a for a, _ in g.edges], dtype=np.int64)
    ev = np.array([b for _, b in g.edges], dtype=np.int64)
    return eu, ev


def shard_ranges(edge_count: int, shards: int) -> list[tuple[int, int]]:
    """Split ``[0, 2^edge_count)`` into power-of-two blocks of Gray indices."""
    top = 0
    while (1 << top) < shards and top < edge_count:
        top += 1
    width = 1 << (edge_count - top)
    return [(s * width, (s + 1) * width) for s in range(1 << top)]


def _run(g: Graph, first_only: bool, jobs: int) -> tuple[int, int]:
    """Scan all labelings; returns ``(count, first witness index or -1)``.

    In ``first_only`` mode the count is meaningless and shards after the
    first successful one are skipped.
    """
    eu, ev = _endpoints(g)
    nv = g.vertex_count
    jobs = max(1, jobs)
    ranges = shard_ranges(g.edge_count, 1 if jobs == 1 else jobs * _SHARDS_PER_JOB)

    def scan(r: tuple[int, int]) -> tuple[int, int]:
        c, f = _scan(eu, ev, nv, r[0], r[1], first_only)
        return int(c), int(f)

    if jobs == 1:
        results = []
        for r in ranges:
            results.append(scan(r))
            if first_only and results[-1][1] >= 0:
                break
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(scan, r) for r in ranges]
            results = []
            for k, fut in enumerate(futures):
                results.append(fut.result())
                if first_only and results[-1][1] >= 0:
                    for later in futures[k + 1:]:
                        later.cancel()
                    break
    first = next((f for _, f in results if f >= 0), -1)
    return sum(c for c, _ in results), first


def _check_budget(g: Graph, edge_budget: int) -> None:
    if g.edge_count > edge_budget:
        raise UnsupportedSize(
            f"graph has {g.edge_count} edges, above the search budget of {edge_budget}"
        )


def find_tepc(g: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET, jobs: int = 1) -> SearchReport:
    """First TEPC labeling in Gray order, or an exhaustive certificate that none exists.

    ``labelings_examined`` counts labelings up to and including the
    witness in canonical order, independent of how the work was sharded.
    """
    _check_budget(g, edge_budget)
    t0 = time.perf_counter()
    _, first = _run(g, first_only=True, jobs=jobs)
    elapsed = time.perf_counter() - t0
    total = 1 << g.edge_count
    if first < 0:
        return SearchReport(g, total, None, 0, True, elapsed)
    witness = EdgeLabeling.from_mask(g, gray(first))
    return SearchReport(g, first + 1, witness, None, False, elapsed)


def count_tepc(g: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET, jobs: int = 1) -> SearchReport:
    """Exact number of TEPC labelings; the witness is the first in Gray order."""
    _check_budget(g, edge_budget)
    t0 = time.perf_counter()
    count, first = _run(g, first_only=False, jobs=jobs)
    elapsed = time.perf_counter() - t0
    witness = EdgeLabeling.from_mask(g, gray(first)) if first >= 0 else None
    return SearchReport(g, 1 << g.edge_count, witness, count, True, elapsed)


def certify_not_tepc(g: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET, jobs: int = 1) -> SearchReport:
    """Exhaustive proof that ``g`` has no TEPC labeling; raises ``WitnessFound`` otherwise."""
    report = find_tepc(g, edge_budget, jobs)
    if report.witness is not None:
        raise WitnessFound(f"graph admits a TEPC labeling: {list(report.witness.labels)}", report)
    return report
