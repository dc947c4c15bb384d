"""Relabeling transformations and exact parameters for general connected graphs.

The constructive transformation routes labels home one vertex at a time
along a spanning tree, in leaf elimination order, never touching vertices
already completed; it uses at most n(n-1)/2 flips.  The exact minimum for
small graphs comes from the BFS oracle.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Sequence

from .graph import Graph, prufer_elimination_order, spanning_tree
from .labeling import relative_permutation, validate_vertex_labeling
from .oracle import CAPACITY_LIMIT, ConfigurationSpace, bfs_distance, diameter
from .perm import parity


def _residual_path(adj: dict[int, set[int]], u: int, v: int) -> list[int]:
    # unique u-v path in the residual tree
    if u == v:
        return [u]
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def _transform_steps(g: Graph, labels: Sequence[int], target: Sequence[int]
                     ) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    """Yield (vertex, flips) per placement iteration; shared by the public API."""
    frm = validate_vertex_labeling(g, labels)
    to = validate_vertex_labeling(g, target)
    tree = spanning_tree(g)
    order = prufer_elimination_order(tree)
    adj = {v: set(tree.adjacency[v]) for v in range(tree.n)}
    cur = list(frm)
    for v in order[:-1]:
        flips: list[tuple[int, int]] = []
        holder = cur.index(to[v])
        if holder != v:
            path = _residual_path(adj, holder, v)
            for a, b in zip(path, path[1:]):
                flips.append((min(a, b), max(a, b)))
                cur[a], cur[b] = cur[b], cur[a]
        yield v, flips
        for w in adj[v]:
            adj[w].discard(v)
        del adj[v]
    assert cur == list(to)


def spanning_tree_transform(g: Graph, labels: Sequence[int],
                            target: Sequence[int]) -> list[tuple[int, int]]:
    """A flip sequence from labels to target of length at most n(n-1)/2."""
    flips: list[tuple[int, int]] = []
    for _, step in _transform_steps(g, labels, target):
        flips.extend(step)
    return flips


def distance_upper_bound(g: Graph, mode: str = "vertex") -> int:
    """n(n-1)/2 flips always suffice (m(m-1)/2 for edge labelings)."""
    if mode == "vertex":
        return g.n * (g.n - 1) // 2
    if mode == "edge":
        return g.m * (g.m - 1) // 2
    raise ValueError(f"mode must be 'vertex' or 'edge', got {mode!r}")


def p_g(g: Graph, labels: Sequence[int], target: Sequence[int],
        capacity: int = CAPACITY_LIMIT) -> int:
    """Exact minimum flip count on a small connected graph, by BFS."""
    space = ConfigurationSpace(g, capacity=capacity)
    d = bfs_distance(space, labels, target)
    if d is None:
        raise ValueError("graph is not connected")
    return d


def exact_t_feasible(g: Graph, labels: Sequence[int], target: Sequence[int],
                     t: int, capacity: int = CAPACITY_LIMIT) -> bool:
    """True iff exactly t flips can turn labels into target.

    Feasible exactly when t is at least the BFS distance and of the same
    parity; the distance parity equals the relative permutation's parity.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    d = p_g(g, labels, target, capacity=capacity)
    assert d % 2 == parity(relative_permutation(labels, target))
    return t >= d and (t - d) % 2 == 0


def p_g_diameter(g: Graph, capacity: int = CAPACITY_LIMIT) -> int:
    """Largest exact distance between any two labelings of g.

    One BFS from the identity suffices: renaming labels is an automorphism
    of the configuration space, so it is vertex-transitive.
    """
    return diameter(ConfigurationSpace(g, capacity=capacity))
