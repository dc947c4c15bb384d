import itertools
import random
from collections import deque

import pytest

from relabel.graph import line_graph, make_family
from relabel.labeling import (
    apply_edge_flip,
    apply_edge_sequence,
    apply_vertex_sequence,
    edges_share_endpoint,
    identity_labeling,
)
from relabel.oracle import ConfigurationSpace, bfs_distance, distance_map
from relabel.reductions import (
    EdgeInstance,
    VertexInstance,
    compile_vertex_flips_to_edge_flips,
    edge_to_vertex,
    pendant_graph,
    vertex_to_edge,
)


def brute_edge_distances(g, source):
    # direct edge-flip BFS, independent of the line-graph machinery
    pairs = [(i, j) for i in range(g.m) for j in range(i + 1, g.m)
             if edges_share_endpoint(g, i, j)]
    dist = {tuple(source): 0}
    queue = deque([tuple(source)])
    while queue:
        state = queue.popleft()
        for pair in pairs:
            nxt = apply_edge_flip(g, state, pair)
            if nxt not in dist:
                dist[nxt] = dist[state] + 1
                queue.append(nxt)
    return dist


def test_vertex_to_edge_p2():
    g = make_family("path", 2)
    inst = VertexInstance(g, (0, 1), (1, 0), 1)
    out = vertex_to_edge(inst)
    assert out.graph.n == 4 and out.graph.m == 3
    assert out.t == 3
    assert out.from_labels == (0, 1, 2)
    assert out.to_labels == (1, 0, 2)


def test_vertex_to_edge_identity():
    g = make_family("path", 3)
    inst = VertexInstance(g, (2, 0, 1), (2, 0, 1), 0)
    out = vertex_to_edge(inst)
    assert out.from_labels == out.to_labels
    assert out.t == 0


def test_pendant_labels_track_vertex_labels():
    g = make_family("star", 4)
    frm = (2, 0, 3, 1)
    to = (0, 1, 2, 3)
    out = vertex_to_edge(VertexInstance(g, frm, to, 2))
    n, m = g.n, g.m
    assert out.from_labels[:n] == frm and out.to_labels[:n] == to
    assert out.from_labels[n:] == tuple(range(n, n + m)) == out.to_labels[n:]
    assert out.graph.edges[:n] == tuple((i, n + i) for i in range(n))
    assert out.graph.edges[n:] == g.edges


def test_p3_reversal_yes_at_tripled_bound():
    g = make_family("path", 3)
    inst = VertexInstance(g, (2, 1, 0), identity_labeling(3), 3)
    dv = bfs_distance(ConfigurationSpace(g), inst.from_labels, inst.to_labels)
    assert dv == 3 <= inst.t
    out = vertex_to_edge(inst)
    de = bfs_distance(ConfigurationSpace(out.graph, mode="edge"),
                      out.from_labels, out.to_labels)
    assert de <= out.t


def test_simulation_bounds_edge_distance():
    # a vertex solution of length d compiles to 3d edge flips, so the edge
    # optimum is at most three times the vertex optimum
    for g in (make_family("path", 3), make_family("complete", 3),
              make_family("star", 4)):
        ident = identity_labeling(g.n)
        dv_map = distance_map(ConfigurationSpace(g), ident)
        g2 = pendant_graph(g)
        fixed = tuple(range(g.n, g.n + g.m))
        de_map = distance_map(ConfigurationSpace(g2, mode="edge"), ident + fixed)
        for lab, dv in dv_map.items():
            de = de_map[lab + fixed]
            assert de <= 3 * dv


def test_yes_instances_stay_yes():
    g = make_family("path", 3)
    ident = identity_labeling(3)
    dv_map = distance_map(ConfigurationSpace(g), ident)
    for lab in itertools.permutations(range(3)):
        for t in range(4):
            if dv_map[lab] <= t:
                out = vertex_to_edge(VertexInstance(g, lab, ident, t))
                de = bfs_distance(ConfigurationSpace(out.graph, mode="edge"),
                                  out.from_labels, out.to_labels)
                assert de <= out.t


def test_gadget_compiler():
    rng = random.Random(19)
    for trial in range(30):
        g = make_family("random_connected", rng.randint(2, 6), seed=trial)
        n = g.n
        frm = tuple(rng.sample(range(n), n))
        flips = [g.edges[rng.randrange(g.m)] for _ in range(rng.randint(0, 6))]
        eflips = compile_vertex_flips_to_edge_flips(g, flips)
        assert len(eflips) == 3 * len(flips)
        g2 = pendant_graph(g)
        start = frm + tuple(range(n, n + g.m))
        out = apply_edge_sequence(g2, start, eflips)
        direct = apply_vertex_sequence(g, frm, flips)
        assert out[:n] == direct
        assert out[n:] == start[n:]


def test_edge_to_vertex_examples():
    star = make_family("star", 4)
    inst = EdgeInstance(star, (2, 0, 1), (0, 1, 2), 2)
    out = edge_to_vertex(inst)
    assert out.graph == line_graph(star)
    assert out.graph.m == 3  # triangle
    assert out.t == 2
    assert out.from_labels == inst.from_labels

    same = EdgeInstance(star, (2, 0, 1), (2, 0, 1), 0)
    assert edge_to_vertex(same).from_labels == edge_to_vertex(same).to_labels


def test_edge_to_vertex_preserves_answers_exactly():
    # flip-for-flip correspondence: checked against a direct edge-flip BFS
    for g in (make_family("path", 3), make_family("path", 4),
              make_family("star", 4)):
        ident = identity_labeling(g.m)
        direct = brute_edge_distances(g, ident)
        for lab in itertools.permutations(range(g.m)):
            de = direct[lab]
            for t in range(5):
                inst = EdgeInstance(g, lab, ident, t)
                out = edge_to_vertex(inst)
                dv = bfs_distance(ConfigurationSpace(out.graph),
                                  out.from_labels, out.to_labels)
                assert (de <= t) == (dv <= out.t)


def test_round_trip_matches_intermediate():
    # e2v after v2e answers exactly like the edge instance it came from
    g = make_family("path", 3)
    rng = random.Random(29)
    for _ in range(10):
        frm = tuple(rng.sample(range(3), 3))
        to = tuple(rng.sample(range(3), 3))
        einst = vertex_to_edge(VertexInstance(g, frm, to, rng.randint(0, 4)))
        vinst = edge_to_vertex(einst)
        de = bfs_distance(ConfigurationSpace(einst.graph, mode="edge"),
                          einst.from_labels, einst.to_labels)
        dv = bfs_distance(ConfigurationSpace(vinst.graph),
                          vinst.from_labels, vinst.to_labels)
        assert de == dv and einst.t == vinst.t


def test_instance_validation():
    g = make_family("path", 3)
    with pytest.raises(ValueError):
        VertexInstance(g, (0, 1), (0, 1, 2), 1)
    with pytest.raises(ValueError):
        VertexInstance(g, (0, 1, 2), (0, 1, 2), -1)
    with pytest.raises(ValueError):
        EdgeInstance(g, (0, 1, 2), (0, 1), 1)
