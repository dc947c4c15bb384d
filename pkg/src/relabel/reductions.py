"""Instance maps between the vertex and edge relabeling problems.

Vertex to edge: hang a pendant vertex off every original vertex and move
the vertex labels onto the pendant edges; original edges keep fixed high
labels (n..n+m-1) in both source and target, and the flip bound triples.
Edge to vertex: relabel the line graph, bound unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, line_graph
from .labeling import validate_edge_labeling, validate_vertex_labeling


@dataclass(frozen=True)
class VertexInstance:
    graph: Graph
    from_labels: tuple[int, ...]
    to_labels: tuple[int, ...]
    t: int

    def __post_init__(self):
        object.__setattr__(self, "from_labels",
                           validate_vertex_labeling(self.graph, self.from_labels))
        object.__setattr__(self, "to_labels",
                           validate_vertex_labeling(self.graph, self.to_labels))
        if self.t < 0:
            raise ValueError("bound t must be nonnegative")


@dataclass(frozen=True)
class EdgeInstance:
    graph: Graph
    from_labels: tuple[int, ...]
    to_labels: tuple[int, ...]
    t: int

    def __post_init__(self):
        object.__setattr__(self, "from_labels",
                           validate_edge_labeling(self.graph, self.from_labels))
        object.__setattr__(self, "to_labels",
                           validate_edge_labeling(self.graph, self.to_labels))
        if self.t < 0:
            raise ValueError("bound t must be nonnegative")


def pendant_graph(g: Graph) -> Graph:
    """g plus a pendant neighbor n+i for each vertex i.

    Edge i < n is the pendant edge of vertex i; edge n+k is g.edges[k].
    """
    edges = [(i, g.n + i) for i in range(g.n)] + list(g.edges)
    return Graph(2 * g.n, edges)


def vertex_to_edge(inst: VertexInstance) -> EdgeInstance:
    """Equivalent edge instance with flip bound 3t."""
    g = inst.graph
    n, m = g.n, g.m
    g2 = pendant_graph(g)
    frm = list(inst.from_labels) + [n + k for k in range(m)]
    to = list(inst.to_labels) + [n + k for k in range(m)]
    return EdgeInstance(g2, tuple(frm), tuple(to), 3 * inst.t)


def edge_to_vertex(inst: EdgeInstance) -> VertexInstance:
    """Equivalent vertex instance on the line graph, same bound."""
    return VertexInstance(line_graph(inst.graph), inst.from_labels,
                          inst.to_labels, inst.t)


def compile_vertex_flips_to_edge_flips(g: Graph, flips: Sequence[Sequence[int]]
                                       ) -> list[tuple[int, int]]:
    """Simulate vertex flips of g as edge flips of pendant_graph(g).

    Each vertex flip {k, l} becomes three edge flips: pendant k with the
    edge {k, l}, that edge with pendant l, then that edge with pendant k
    again, which swaps the pendant labels and restores the edge label.
    """
    out: list[tuple[int, int]] = []
    for k, l in flips:
        e = g.n + g.edge_index(k, l)
        out.extend([(k, e), (e, l), (e, k)])
    return out
