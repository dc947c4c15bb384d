"""Permutation algebra on {0, ..., n-1}.

Permutations are plain integer sequences in one-line (word) form: ``p[i]``
is the image of ``i``.  Functions accept any integer sequence and return
tuples.  Everything here is 0-based.
"""

from __future__ import annotations

from typing import Sequence

Perm = "tuple[int, ...]"


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def is_permutation(p: Sequence[int]) -> bool:
    """True iff p is a bijection on {0, ..., len(p)-1}.

    >>> is_permutation([2, 0, 1])
    True
    >>> is_permutation([0, 0, 2])
    False
    """
    return sorted(p) == list(range(len(p)))


def validated(p: Sequence[int]) -> tuple[int, ...]:
    """Return p as a tuple, raising ValueError if it is not a permutation."""
    t = tuple(p)
    if not is_permutation(t):
        raise ValueError(f"not a permutation of 0..{len(t) - 1}: {list(t)}")
    return t


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Return p after q, i.e. (p o q)(i) = p(q(i))."""
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return tuple(p[v] for v in q)


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    """The permutation of n elements swapping i and j."""
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"transposition ({i},{j}) out of range for n={n}")
    word = list(range(n))
    word[i], word[j] = word[j], word[i]
    return tuple(word)


def cycle_decomposition(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Nontrivial disjoint cycles of p, in canonical form.

    Each cycle starts at its smallest element; cycles are sorted by first
    element; fixed points are omitted.  The identity decomposes into [].

    >>> cycle_decomposition([0, 2, 3, 1])
    [(1, 2, 3)]
    >>> cycle_decomposition([1, 0, 3, 2])
    [(0, 1), (2, 3)]
    """
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        cycles.append(tuple(cycle))
    return cycles


def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Recompose disjoint cycles into a permutation of n elements."""
    word = list(range(n))
    for cycle in cycles:
        for k, v in enumerate(cycle):
            if word[v] != v:
                raise ValueError("cycles are not disjoint")
            word[v] = cycle[(k + 1) % len(cycle)]
    return tuple(word)


def support(p: Sequence[int]) -> tuple[int, ...]:
    """The elements moved by p, ascending."""
    return tuple(i for i, v in enumerate(p) if v != i)


def cycle_count(p: Sequence[int]) -> int:
    """Number of nontrivial disjoint cycles of p."""
    return len(cycle_decomposition(p))


def inversions(p: Sequence[int]) -> int:
    """Number of pairs i < j with p[i] > p[j], counted by merge sort.

    >>> inversions([2, 0, 1])
    2
    >>> inversions([3, 2, 1, 0])
    6
    """

    def count(seq: list[int]) -> tuple[list[int], int]:
        if len(seq) <= 1:
            return seq, 0
        mid = len(seq) // 2
        left, a = count(seq[:mid])
        right, b = count(seq[mid:])
        merged = []
        inv = a + b
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                j += 1
                inv += len(left) - i
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, inv

    return count(list(p))[1]


def parity(p: Sequence[int]) -> int:
    """Parity of p: 0 for even, 1 for odd.

    Equals inversions(p) mod 2 and the length mod 2 of any decomposition
    of p into transpositions.  Computed from the cycle structure in O(n).
    """
    # a cycle of length c contributes c - 1 transpositions
    seen = [False] * len(p)
    total = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = p[v]
            length += 1
        total += length - 1
    return total % 2


def pi_zero(p: Sequence[int]) -> tuple[int, ...]:
    """Normalize p to fix 0.

    If p(0) = 0 this is p itself; otherwise it is p composed with the
    transposition (0, j) where p(j) = 0, which always sends 0 to 0.
    """
    t = tuple(p)
    if not t or t[0] == 0:
        return t
    j = t.index(0)
    return compose(t, transposition(len(t), 0, j))
