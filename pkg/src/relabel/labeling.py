"""Vertex and edge labelings and the flips that act on them.

A vertex labeling of a graph on n vertices is a bijection onto
{0, ..., n-1} stored as a sequence: labels[v] is the label held by
vertex v.  An edge labeling is the same over the graph's edge list.
A vertex flip swaps the labels across an edge; an edge flip swaps the
labels of two edges sharing an endpoint.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph
from .perm import compose, inverse, is_permutation

VertexFlip = "tuple[int, int]"   # an edge {u, v} of the instance graph
EdgeFlip = "tuple[int, int]"     # two edge indices sharing an endpoint


def identity_labeling(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def validate_vertex_labeling(g: Graph, labels: Sequence[int]) -> tuple[int, ...]:
    t = tuple(labels)
    if len(t) != g.n or not is_permutation(t):
        raise ValueError(f"not a vertex labeling of a graph on {g.n} vertices: {list(t)}")
    return t


def validate_edge_labeling(g: Graph, labels: Sequence[int]) -> tuple[int, ...]:
    t = tuple(labels)
    if len(t) != g.m or not is_permutation(t):
        raise ValueError(f"not an edge labeling of a graph with {g.m} edges: {list(t)}")
    return t


def apply_vertex_flip(g: Graph, labels: Sequence[int], flip: Sequence[int]) -> tuple[int, ...]:
    """Swap the labels at the endpoints of an edge."""
    u, v = flip
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    out = list(labels)
    out[u], out[v] = out[v], out[u]
    return tuple(out)


def edges_share_endpoint(g: Graph, e1: int, e2: int) -> bool:
    a = g.edges[e1]
    b = g.edges[e2]
    return e1 != e2 and bool(set(a) & set(b))


def apply_edge_flip(g: Graph, labels: Sequence[int], flip: Sequence[int]) -> tuple[int, ...]:
    """Swap the labels of two edges sharing an endpoint."""
    e1, e2 = flip
    if not (0 <= e1 < g.m and 0 <= e2 < g.m):
        raise ValueError(f"edge index out of range: ({e1},{e2})")
    if not edges_share_endpoint(g, e1, e2):
        raise ValueError(f"edges {e1} and {e2} share no endpoint")
    out = list(labels)
    out[e1], out[e2] = out[e2], out[e1]
    return tuple(out)


def apply_vertex_sequence(g: Graph, labels: Sequence[int],
                          flips: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Left-to-right fold of apply_vertex_flip."""
    cur = tuple(labels)
    for i, flip in enumerate(flips):
        try:
            cur = apply_vertex_flip(g, cur, flip)
        except ValueError as err:
            raise ValueError(f"flip {i}: {err}") from None
    return cur


def apply_edge_sequence(g: Graph, labels: Sequence[int],
                        flips: Sequence[Sequence[int]]) -> tuple[int, ...]:
    cur = tuple(labels)
    for i, flip in enumerate(flips):
        try:
            cur = apply_edge_flip(g, cur, flip)
        except ValueError as err:
            raise ValueError(f"flip {i}: {err}") from None
    return cur


def relative_permutation(labels: Sequence[int], target: Sequence[int]) -> tuple[int, ...]:
    """Rename labels so that the target labeling reads as the identity.

    Renaming labels commutes with flips, so the pair (labels, target) and
    the pair (result, identity) are the same instance of any relabeling
    problem.  Recomposition: compose(target, result) == labels.
    """
    if len(labels) != len(target):
        raise ValueError(f"size mismatch: {len(labels)} vs {len(target)}")
    return compose(inverse(tuple(target)), tuple(labels))
