"""Flip distances on a star: the q parameter and the greedy center rule.

All flips on a star touch the center, so the exact distance to the
identity is q = support + cycle count (of the labeling as a permutation),
corrected by one when the center's own label is displaced.
"""

import itertools

from relabel import (
    ConfigurationSpace,
    apply_vertex_sequence,
    distance_distribution,
    identity_labeling,
    make_family,
    star_flip_sequence,
    star_max_distance,
    star_q,
)

n = 5
g = make_family("star", n)
ident = identity_labeling(n)

lab = (0, 2, 3, 1, 4)  # a 3-cycle on leaves 1,2,3
print(f"labeling {lab}: q = {star_q(lab)} (support 3 + 1 cycle)")
seq = star_flip_sequence(lab, ident)
print(f"  greedy sequence: {seq}")
print(f"  reaches identity: {apply_vertex_sequence(g, lab, seq) == ident}")

worst = max(itertools.permutations(range(n)), key=star_q)
print(f"hardest labeling {worst}: q = {star_q(worst)}"
      f" = floor(3(n-1)/2) = {star_max_distance(n)}")

hist = distance_distribution(ConfigurationSpace(g))
print("distance histogram from the identity over all", sum(hist.values()),
      "labelings:")
for d, count in hist.items():
    print(f"  {d:2d}: {count}")
