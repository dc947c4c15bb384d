"""Flip distances on a path: inversions, optimal sequences, parity.

Swapping the labels across an edge of the path is an adjacent
transposition, so the minimum number of flips between two labelings is
the inversion count of one labeling read in the coordinates where the
other is the identity.
"""

from relabel import (
    ConfigurationSpace,
    bfs_distance,
    identity_labeling,
    make_family,
    apply_vertex_sequence,
    path_distance,
    path_exact_t_feasible,
    path_flip_sequence,
    transposition_cost_on_path,
)

n = 5
g = make_family("path", n)
ident = identity_labeling(n)
reversal = tuple(range(n - 1, -1, -1))

print(f"path on {n} vertices, reversal vs identity")
d = path_distance(reversal, ident)
print(f"  distance = {d} (n(n-1)/2 = {n * (n - 1) // 2})")

seq = path_flip_sequence(reversal, ident)
print(f"  optimal sequence ({len(seq)} flips): {seq}")
print(f"  applies correctly: {apply_vertex_sequence(g, reversal, seq) == ident}")

print("  BFS agrees:", bfs_distance(ConfigurationSpace(g), reversal, ident) == d)

print("exact-t feasibility from distance", d)
for t in range(d, d + 4):
    print(f"  t={t}: {path_exact_t_feasible(reversal, ident, t)}")

cost, flips = transposition_cost_on_path(1, 4)
print(f"swapping positions 1 and 4 alone costs {cost} flips: {flips}")
