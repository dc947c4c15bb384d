"""Exact flip distances on the star K_{1,n-1} with center vertex 0.

Every flip on the star swaps the center with a leaf i, written (0, i).
Against the identity target, the exact distance of a labeling given by a
permutation pi is the parameter q:

  * q = |support(pi)| + (number of nontrivial cycles)   if pi fixes 0,
  * q = q(pi0) + 1 if the center and the vertex holding label 0 have
    simply traded labels (pi(0) = i, pi(i) = 0),
  * q = q(pi0) - 1 otherwise,

where pi0 is pi normalized to fix 0.  Exactly t flips work iff t >= q
and t has the same parity as q.
"""

from __future__ import annotations

from typing import Sequence

from .labeling import relative_permutation
from .perm import cycle_decomposition, validated


def _q(p: tuple[int, ...]) -> int:
    if p and p[0] != 0:
        i = p[0]
        j = p.index(0)
        p0 = list(p)
        p0[0], p0[j] = p0[j], p0[0]  # p composed with (0, j), fixes 0
        return _q(tuple(p0)) + (1 if i == j else -1)
    cycles = cycle_decomposition(p)
    return sum(len(c) for c in cycles) + len(cycles)


def star_q(labels: Sequence[int]) -> int:
    """Flip distance from a star labeling to the identity labeling."""
    return _q(validated(labels))


def star_distance(labels: Sequence[int], target: Sequence[int]) -> int:
    """Minimum number of flips turning one star labeling into another."""
    return _q(relative_permutation(validated(labels), validated(target)))


def star_flip_sequence(labels: Sequence[int],
                       target: Sequence[int]) -> list[tuple[int, int]]:
    """An optimal flip sequence from labels to target.

    Greedy center rule: while the center holds a label c that is not its
    own, flip with c's home vertex; when the center holds 0 but leaves are
    wrong, flip with the lowest-index wrong leaf.  Each flip lowers q by
    one, so the length equals star_distance(labels, target).
    """
    rel = list(relative_permutation(validated(labels), validated(target)))
    n = len(rel)
    flips: list[tuple[int, int]] = []
    while True:
        if rel[0] != 0:
            i = rel[0]
        else:
            i = next((v for v in range(1, n) if rel[v] != v), 0)
            if i == 0:
                break
        flips.append((0, i))
        rel[0], rel[i] = rel[i], rel[0]
    return flips


def star_exact_t_feasible(labels: Sequence[int], target: Sequence[int], t: int) -> bool:
    """True iff the transformation is doable in exactly t flips."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    q = star_distance(labels, target)
    return t >= q and (t - q) % 2 == 0


def star_max_distance(n: int) -> int:
    """Largest flip distance between any two labelings of the n-vertex star."""
    if n < 2:
        raise ValueError("star diameter needs n >= 2")
    return 3 * (n - 1) // 2
