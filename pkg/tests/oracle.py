"""Independent brute-force reference used to freeze expected values.

Nothing here imports the package under test: graphs are plain
``(vertex_count, edge_list)`` pairs and labels are tuples of bits.
"""

from __future__ import annotations

import itertools
import math


def naive_tally(vertex_count, edges, bits):
    """(e0, e1, v0, v1, gap) with vertex labels as literal products."""
    vertex_labels = []
    for v in range(vertex_count):
        vertex_labels.append(math.prod(b for (a, c), b in zip(edges, bits) if v in (a, c)))
    e1 = sum(bits)
    e0 = len(bits) - e1
    v1 = sum(vertex_labels)
    v0 = vertex_count - v1
    return e0, e1, v0, v1, (v0 + e0) - (v1 + e1)


def all_labelings(edge_count):
    return itertools.product((0, 1), repeat=edge_count)


def count_tepc(vertex_count, edges):
    return sum(abs(naive_tally(vertex_count, edges, bits)[4]) <= 1 for bits in all_labelings(len(edges)))


def first_gray_witness(vertex_count, edges):
    """(index, bits) of the first TEPC labeling when masks are visited as i ^ (i >> 1)."""
    for i in range(2 ** len(edges)):
        mask = i ^ (i >> 1)
        bits = tuple((mask >> k) & 1 for k in range(len(edges)))
        if abs(naive_tally(vertex_count, edges, bits)[4]) <= 1:
            return i, bits
    return None


def are_isomorphic(nv, edges_a, edges_b):
    """Plain permutation enumeration, no pruning."""
    ea = {frozenset(e) for e in edges_a}
    eb = {frozenset(e) for e in edges_b}
    if len(ea) != len(eb):
        return False
    return any(
        {frozenset((p[a], p[b])) for a, b in ea} == eb for p in itertools.permutations(range(nv))
    )
