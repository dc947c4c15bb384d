"""Mapping vertex relabeling instances to edge instances and back.

Vertex to edge: pendant edges carry the vertex labels and the original
edges keep fixed labels; one vertex flip compiles to three edge flips, so
yes-instances stay yes at triple the bound.  The tripled bound is loose
in the other direction: pendant labels can also trade places along a path
of original edges for fewer flips, so an edge-side yes does not certify a
vertex-side yes.  Edge to vertex via the line graph is flip-for-flip
exact.
"""

from relabel import (
    ConfigurationSpace,
    VertexInstance,
    bfs_distance,
    compile_vertex_flips_to_edge_flips,
    edge_to_vertex,
    identity_labeling,
    make_family,
    vertex_to_edge,
)

g = make_family("path", 3)
inst = VertexInstance(g, (2, 1, 0), identity_labeling(3), 3)
out = vertex_to_edge(inst)
print(f"vertex instance on P_3 (t={inst.t}) becomes an edge instance with")
print(f"  graph: n={out.graph.n}, edges={out.graph.edges}")
print(f"  labels {out.from_labels} -> {out.to_labels}, bound {out.t}")

dv = bfs_distance(ConfigurationSpace(g), inst.from_labels, inst.to_labels)
de = bfs_distance(ConfigurationSpace(out.graph, mode="edge"),
                  out.from_labels, out.to_labels)
print(f"  vertex optimum {dv}, edge optimum {de} (3x simulation gives {3 * dv})")

flips = [(0, 1), (1, 2), (0, 1)]
eflips = compile_vertex_flips_to_edge_flips(g, flips)
print(f"compiling {len(flips)} vertex flips yields {len(eflips)} edge flips:")
print(f"  {eflips}")

back = edge_to_vertex(out)
print(f"line-graph translation: vertex instance on n={back.graph.n}, "
      f"same bound {back.t}")
dl = bfs_distance(ConfigurationSpace(back.graph), back.from_labels, back.to_labels)
print(f"  distance there equals the edge optimum: {dl == de}")
