import itertools
import random

import pytest

from relabel.exact_star import (
    star_distance,
    star_exact_t_feasible,
    star_flip_sequence,
    star_max_distance,
    star_q,
)
from relabel.graph import make_family
from relabel.labeling import apply_vertex_flip, apply_vertex_sequence, identity_labeling
from relabel.oracle import ConfigurationSpace, distance_distribution, distance_map


def test_q_examples():
    assert star_q(identity_labeling(5)) == 0
    # center and leaf traded labels: normalization is the identity, q = 1
    assert star_q((2, 1, 0)) == 1
    # center fixed, one 3-cycle on the leaves: support 3 plus 1 cycle
    assert star_q((0, 2, 3, 1)) == 4
    # center label elsewhere: normalized q = 3, corrected down to 2
    assert star_q((1, 2, 0)) == 2


def test_distance_examples():
    lab = (3, 0, 2, 1)
    assert star_distance(lab, lab) == 0
    ident = identity_labeling(4)
    worst = max(star_distance(lab, ident) for lab in itertools.permutations(range(4)))
    assert worst == 4 == star_max_distance(4)


def test_max_distance_examples():
    assert star_max_distance(4) == 4
    assert star_max_distance(7) == 9
    assert star_max_distance(2) == 1
    with pytest.raises(ValueError):
        star_max_distance(1)


def test_flip_sequence_examples():
    ident = identity_labeling(3)
    assert star_flip_sequence(ident, ident) == []
    assert star_flip_sequence((1, 2, 0), ident) == [(0, 1), (0, 2)]
    # leaf 3-cycle fixing the center: open at the cycle, close where it began
    seq = star_flip_sequence((0, 2, 3, 1), identity_labeling(4))
    assert seq == [(0, 1), (0, 2), (0, 3), (0, 1)]
    g = make_family("star", 4)
    assert apply_vertex_sequence(g, (0, 2, 3, 1), seq) == identity_labeling(4)


def test_greedy_length_equals_q_exhaustive():
    for n in range(2, 7):
        g = make_family("star", n)
        ident = identity_labeling(n)
        for lab in itertools.permutations(range(n)):
            seq = star_flip_sequence(lab, ident)
            assert len(seq) == star_q(lab)
            assert apply_vertex_sequence(g, lab, seq) == ident


def test_flip_sequence_arbitrary_targets():
    rng = random.Random(6)
    for _ in range(100):
        n = rng.randint(2, 8)
        g = make_family("star", n)
        a = tuple(rng.sample(range(n), n))
        b = tuple(rng.sample(range(n), n))
        seq = star_flip_sequence(a, b)
        assert len(seq) == star_distance(a, b)
        assert apply_vertex_sequence(g, a, seq) == b


def test_oracle_equivalence_small():
    for n in range(2, 7):
        ident = identity_labeling(n)
        dist = distance_map(ConfigurationSpace(make_family("star", n)), ident)
        for lab in itertools.permutations(range(n)):
            assert star_q(lab) == dist[lab]


def test_plus_minus_one_step():
    for n in range(2, 6):
        g = make_family("star", n)
        for lab in itertools.permutations(range(n)):
            q = star_q(lab)
            for edge in g.edges:
                assert abs(star_q(apply_vertex_flip(g, lab, edge)) - q) == 1


def test_exact_t_examples():
    ident = identity_labeling(3)
    lab = (1, 2, 0)  # q = 2
    assert star_exact_t_feasible(lab, ident, 2)
    assert not star_exact_t_feasible(lab, ident, 3)
    assert star_exact_t_feasible(lab, ident, 4)
    assert not star_exact_t_feasible(ident, ident, 1)


def test_exact_t_matches_oracle_walks():
    from relabel.oracle import reachable_in_exactly

    g = make_family("star", 4)
    space = ConfigurationSpace(g)
    ident = identity_labeling(4)
    for lab in itertools.permutations(range(4)):
        for t in range(7):
            assert star_exact_t_feasible(lab, ident, t) == \
                reachable_in_exactly(space, lab, ident, t)


def test_diameter_and_distribution():
    for n in range(2, 7):
        dist = distance_map(ConfigurationSpace(make_family("star", n)),
                            identity_labeling(n))
        assert max(dist.values()) == star_max_distance(n)
    hist = distance_distribution(ConfigurationSpace(make_family("star", 4)))
    assert sum(hist.values()) == 24
    assert max(hist) == 4
    # histogram agrees with the q parameter counted directly
    direct = {}
    for lab in itertools.permutations(range(4)):
        direct[star_q(lab)] = direct.get(star_q(lab), 0) + 1
    assert hist == direct
