"""Exhaustive breadth-first search over labeling configuration spaces.

A configuration space has one node per labeling of a graph and one edge
per legal flip.  Edge-mode spaces run on the line graph, where an edge
flip of the original graph is exactly a vertex flip.  The flip rule is
either unrestricted or privileged(S): a flip is legal only if at least
one of the two swapped labels belongs to S.

All searches refuse to start when the space would exceed the capacity
guard (10! states by default); pass a larger capacity explicitly to
override.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterator, NamedTuple, Sequence

from .graph import Graph, line_graph
from .labeling import identity_labeling, validate_vertex_labeling

CAPACITY_LIMIT = math.factorial(10)


class CapacityError(Exception):
    """The configuration space is too large for exhaustive search."""


class ConfigurationSpace:
    """All labelings of a graph joined by single legal flips."""

    def __init__(self, graph: Graph, mode: str = "vertex",
                 privileged: Sequence[int] | None = None,
                 capacity: int = CAPACITY_LIMIT):
        if mode not in ("vertex", "edge"):
            raise ValueError(f"mode must be 'vertex' or 'edge', got {mode!r}")
        self.graph = graph
        self.mode = mode
        self.base = line_graph(graph) if mode == "edge" else graph
        if privileged is not None:
            s = frozenset(privileged)
            if not s:
                raise ValueError("privileged set must be nonempty")
            if not all(0 <= x < self.base.n for x in s):
                raise ValueError("privileged labels out of range")
            self.privileged = s
        else:
            self.privileged = None
        self.capacity = capacity

    @property
    def positions(self) -> int:
        return self.base.n

    def size(self) -> int:
        return math.factorial(self.positions)

    def check_capacity(self) -> None:
        if self.size() > self.capacity:
            raise CapacityError(
                f"{self.positions}! = {self.size()} states exceeds capacity {self.capacity}"
            )

    def is_legal(self, state: Sequence[int], u: int, v: int) -> bool:
        if self.privileged is None:
            return True
        return state[u] in self.privileged or state[v] in self.privileged

    def neighbor_flips(self, state: tuple[int, ...]) -> Iterator[
            tuple[tuple[int, int], tuple[int, ...]]]:
        for u, v in self.base.edges:
            if self.is_legal(state, u, v):
                nxt = list(state)
                nxt[u], nxt[v] = nxt[v], nxt[u]
                yield (u, v), tuple(nxt)

    def validate_state(self, state: Sequence[int]) -> tuple[int, ...]:
        return validate_vertex_labeling(self.base, state)

    def identity_state(self) -> tuple[int, ...]:
        return identity_labeling(self.positions)


def rank_labeling(state: Sequence[int]) -> int:
    """Mixed-radix (factorial base) rank of a labeling; a bijection onto 0..n!-1."""
    n = len(state)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if state[j] < state[i])
        r = r * (n - i) + smaller
    return r


def unrank_labeling(n: int, r: int) -> tuple[int, ...]:
    """Inverse of rank_labeling."""
    digits = []
    for base in range(1, n + 1):
        digits.append(r % base)
        r //= base
    digits.reverse()
    pool = list(range(n))
    out = []
    for d in digits:
        out.append(pool.pop(d))
    return tuple(out)


def distance_map(space: ConfigurationSpace,
                 source: Sequence[int]) -> dict[tuple[int, ...], int]:
    """BFS distances from source to every reachable labeling."""
    space.check_capacity()
    src = space.validate_state(source)
    visited = {rank_labeling(src): 0}
    dist = {src: 0}
    queue = deque([src])
    while queue:
        state = queue.popleft()
        d = dist[state]
        for _, nxt in space.neighbor_flips(state):
            key = rank_labeling(nxt)
            if key not in visited:
                visited[key] = d + 1
                dist[nxt] = d + 1
                queue.append(nxt)
    return dist


def bfs_distance(space: ConfigurationSpace, frm: Sequence[int],
                 to: Sequence[int]) -> int | None:
    """Shortest flip count from frm to to, or None when unreachable."""
    space.check_capacity()
    src = space.validate_state(frm)
    dst = space.validate_state(to)
    if src == dst:
        return 0
    dst_key = rank_labeling(dst)
    visited = {rank_labeling(src): 0}
    queue = deque([(src, 0)])
    while queue:
        state, d = queue.popleft()
        for _, nxt in space.neighbor_flips(state):
            key = rank_labeling(nxt)
            if key not in visited:
                if key == dst_key:
                    return d + 1
                visited[key] = d + 1
                queue.append((nxt, d + 1))
    return None


def shortest_flip_sequence(space: ConfigurationSpace, frm: Sequence[int],
                           to: Sequence[int]) -> list[tuple[int, int]] | None:
    """A shortest legal flip sequence from frm to to, or None when unreachable."""
    space.check_capacity()
    src = space.validate_state(frm)
    dst = space.validate_state(to)
    if src == dst:
        return []
    back: dict[int, tuple[tuple[int, ...], tuple[int, int]]] = {}
    visited = {rank_labeling(src)}
    queue = deque([src])
    while queue:
        state = queue.popleft()
        for flip, nxt in space.neighbor_flips(state):
            key = rank_labeling(nxt)
            if key in visited:
                continue
            visited.add(key)
            back[key] = (state, flip)
            if nxt == dst:
                flips = []
                cur_key, cur = key, nxt
                while cur != src:
                    prev, f = back[cur_key]
                    flips.append(f)
                    cur = prev
                    cur_key = rank_labeling(prev)
                flips.reverse()
                return flips
            queue.append(nxt)
    return None


def reachable_in_exactly(space: ConfigurationSpace, frm: Sequence[int],
                         to: Sequence[int], t: int) -> bool:
    """True iff some walk of exactly t legal flips joins frm and to.

    BFS over (labeling, walk parity) pairs gives the shortest even and odd
    walks; longer walks of the same parity pad by repeating a flip.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    space.check_capacity()
    src = space.validate_state(frm)
    dst = space.validate_state(to)
    want = (rank_labeling(dst), t % 2)
    start = (rank_labeling(src), 0)
    best = 0 if want == start else None
    visited = {start}
    queue = deque([(src, 0, 0)])
    while queue and best is None:
        state, par, d = queue.popleft()
        for _, nxt in space.neighbor_flips(state):
            key = (rank_labeling(nxt), (par + 1) % 2)
            if key not in visited:
                visited.add(key)
                if key == want:
                    best = d + 1
                    break
                queue.append((nxt, (par + 1) % 2, d + 1))
    if best is None or t < best:
        return False
    if t == best:
        return True
    # pad t - best (even) by repeating some flip; needs one legal flip on the walk
    if best >= 1:
        return True
    return next(space.neighbor_flips(src), None) is not None


class ComponentSummary(NamedTuple):
    size: int
    states: tuple[tuple[int, ...], ...] | None


def component(space: ConfigurationSpace, frm: Sequence[int],
              cap: int | None = None) -> ComponentSummary:
    """Size of the reachable set from frm, with up to cap states listed."""
    dist = distance_map(space, frm)
    states = None
    if cap is not None:
        states = tuple(sorted(dist.keys())[:cap])
    return ComponentSummary(len(dist), states)


def diameter(space: ConfigurationSpace, frm: Sequence[int] | None = None) -> int:
    """Eccentricity of frm (default: the identity labeling) over its component."""
    if frm is None:
        frm = space.identity_state()
    return max(distance_map(space, frm).values())


def distance_distribution(space: ConfigurationSpace,
                          frm: Sequence[int] | None = None) -> dict[int, int]:
    """Histogram mapping distance from frm to the number of labelings at it."""
    if frm is None:
        frm = space.identity_state()
    hist: dict[int, int] = {}
    for d in distance_map(space, frm).values():
        hist[d] = hist.get(d, 0) + 1
    return dict(sorted(hist.items()))
