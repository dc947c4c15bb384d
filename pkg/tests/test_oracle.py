import itertools
import random
from collections import deque

import pytest

from relabel.graph import Graph, make_family
from relabel.labeling import apply_edge_flip, edges_share_endpoint, identity_labeling
from relabel.oracle import (
    CapacityError,
    ConfigurationSpace,
    bfs_distance,
    component,
    diameter,
    distance_distribution,
    distance_map,
    rank_labeling,
    reachable_in_exactly,
    shortest_flip_sequence,
    unrank_labeling,
)


def brute_edge_distances(g, source):
    # edge-flip BFS straight off the edge list, no line graph involved
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


def test_bfs_distance_examples():
    g = make_family("path", 4)
    space = ConfigurationSpace(g)
    ident = identity_labeling(4)
    assert bfs_distance(space, ident, ident) == 0
    assert bfs_distance(space, (3, 2, 1, 0), ident) == 6


def test_restricted_space_can_be_unreachable():
    # non-privileged neighbors swapped: blocked on a path
    g = make_family("path", 4)
    space = ConfigurationSpace(g, privileged=[0, 1])
    assert bfs_distance(space, (0, 1, 2, 3), (0, 1, 3, 2)) is None


def test_reachable_in_exactly():
    g = make_family("star", 3)
    space = ConfigurationSpace(g)
    ident = identity_labeling(3)
    lab = (1, 2, 0)  # distance 2
    assert reachable_in_exactly(space, lab, ident, 2)
    assert not reachable_in_exactly(space, lab, ident, 3)
    assert reachable_in_exactly(space, lab, ident, 4)
    assert reachable_in_exactly(space, ident, ident, 0)
    assert not reachable_in_exactly(space, ident, ident, 1)
    assert reachable_in_exactly(space, ident, ident, 2)


def test_no_odd_closed_walks():
    g = make_family("cycle", 4)
    space = ConfigurationSpace(g)
    rng = random.Random(12)
    for _ in range(10):
        lab = tuple(rng.sample(range(4), 4))
        for t in (1, 3, 5):
            assert not reachable_in_exactly(space, lab, lab, t)


def test_component_full_space():
    for n in (2, 3, 4):
        g = make_family("random_connected", n, seed=n)
        summary = component(ConfigurationSpace(g), identity_labeling(n))
        size = 1
        for k in range(2, n + 1):
            size *= k
        assert summary.size == size


def test_component_restricted_path_matches_enumeration():
    # one privileged label on a path: exactly the labelings with the same
    # non-privileged left-to-right order are reachable
    g = make_family("path", 4)
    start = (0, 1, 2, 3)
    space = ConfigurationSpace(g, privileged=[3])
    summary = component(space, start, cap=100)
    expected = set()
    for slot in range(4):
        rest = [0, 1, 2]
        lab = rest[:slot] + [3] + rest[slot:]
        expected.add(tuple(lab))
    assert summary.size == 4
    assert set(summary.states) == expected


def test_component_cap():
    g = make_family("path", 3)
    summary = component(ConfigurationSpace(g), (0, 1, 2), cap=2)
    assert summary.size == 6 and len(summary.states) == 2


def test_diameter_and_distribution():
    assert diameter(ConfigurationSpace(make_family("star", 4))) == 4
    assert diameter(ConfigurationSpace(make_family("path", 4))) == 6
    hist = distance_distribution(ConfigurationSpace(make_family("star", 4)))
    assert sum(hist.values()) == 24
    assert max(hist.keys()) == 4


def test_shortest_flip_sequence():
    from relabel.labeling import apply_vertex_sequence

    g = make_family("cycle", 5)
    space = ConfigurationSpace(g)
    rng = random.Random(3)
    for _ in range(20):
        a = tuple(rng.sample(range(5), 5))
        b = tuple(rng.sample(range(5), 5))
        seq = shortest_flip_sequence(space, a, b)
        assert len(seq) == bfs_distance(space, a, b)
        assert apply_vertex_sequence(g, a, seq) == b


def test_capacity_guard():
    big = make_family("path", 11)
    space = ConfigurationSpace(big)
    with pytest.raises(CapacityError):
        bfs_distance(space, identity_labeling(11), identity_labeling(11))
    small = make_family("path", 5)
    with pytest.raises(CapacityError):
        distance_map(ConfigurationSpace(small, capacity=100), identity_labeling(5))
    assert diameter(ConfigurationSpace(small, capacity=10**6)) == 10


def test_edge_mode_matches_direct_edge_flips():
    for g in (make_family("path", 4), make_family("star", 4),
              make_family("cycle", 4), Graph(4, [(0, 1), (1, 2), (2, 3), (0, 2)])):
        ident = identity_labeling(g.m)
        direct = brute_edge_distances(g, ident)
        via_line_graph = distance_map(ConfigurationSpace(g, mode="edge"), ident)
        assert direct == via_line_graph


def test_edge_mode_diameter_bound():
    g = make_family("path", 4)
    assert diameter(ConfigurationSpace(g, mode="edge")) <= g.m * (g.m - 1) // 2


def test_rank_bijection():
    for n in range(7):
        seen = set()
        for p in itertools.permutations(range(n)):
            r = rank_labeling(p)
            assert unrank_labeling(n, r) == p
            seen.add(r)
        size = 1
        for k in range(2, n + 1):
            size *= k
        assert seen == set(range(size))


def test_determinism():
    g = make_family("random_connected", 5, seed=44)
    space = ConfigurationSpace(g)
    a = distance_map(space, identity_labeling(5))
    b = distance_map(space, identity_labeling(5))
    assert a == b
    assert distance_distribution(space) == distance_distribution(space)


def test_symmetry_of_distance():
    g = make_family("cycle", 5)
    space = ConfigurationSpace(g)
    rng = random.Random(21)
    for _ in range(15):
        a = tuple(rng.sample(range(5), 5))
        b = tuple(rng.sample(range(5), 5))
        assert bfs_distance(space, a, b) == bfs_distance(space, b, a)
