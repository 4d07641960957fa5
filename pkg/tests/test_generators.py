import random

import pytest
from hypothesis import given, settings, strategies as st

from twoblock.digraph import digraph_sha, serialize
from twoblock.errors import BadParams, Infeasible
from twoblock.generators import (
    all_position_pairs,
    complete_biorientation,
    directed_cycle,
    mutate,
    random_girth_constrained,
    ring_block,
    ring_of_cycles,
    theta,
)
from twoblock.metrics import distance, girth
from twoblock.digraph import degrees


def test_ring_of_cycles_smallest():
    D = ring_of_cycles(2)
    assert serialize(D) == (
        "6 12\n0 2\n0 3\n1 4\n1 5\n2 1\n2 3\n3 1\n3 2\n4 0\n4 5\n5 0\n5 4\n"
    )


def test_ring_of_cycles_shape():
    for k in (3, 4, 5):
        D = ring_of_cycles(k)
        assert D.n == k + k * k
        assert D.m == 2 * k + 2 * k * k
        assert girth(D) == k
        d = degrees(D)
        assert d.min_out == 2
        # hubs have in-degree k (one arc from every vertex of the previous block)
        assert all(D.in_degree(h) == k for h in range(k))


def test_ring_block_indexing():
    assert ring_block(2, 0) == (2, 3)
    assert ring_block(2, 1) == (4, 5)
    assert ring_block(3, 2) == (9, 10, 11)


def test_ring_choices():
    D = ring_of_cycles(3, [(0, 1), (0, 2), (1, 2)])
    assert D.n == 12 and D.m == 24 and girth(D) == 3
    # hub 1 feeds positions (0, 2) of its block (6, 7, 8)
    assert D.has_arc(1, 6) and D.has_arc(1, 8) and not D.has_arc(1, 7)


def test_ring_rejects_bad_choices():
    with pytest.raises(BadParams):
        ring_of_cycles(1)
    with pytest.raises(BadParams):
        ring_of_cycles(3, (0, 0))
    with pytest.raises(BadParams):
        ring_of_cycles(3, (0, 5))
    with pytest.raises(BadParams):
        ring_of_cycles(3, [(0, 1), (0, 2)])  # one pair per block


def test_all_position_pairs():
    assert all_position_pairs(3) == [(0, 1), (0, 2), (1, 2)]
    assert len(all_position_pairs(5)) == 10


def test_complete_biorientation():
    D = complete_biorientation(4)
    assert D.n == 4 and D.m == 12 and girth(D) == 2


def test_directed_cycle():
    D = directed_cycle(5)
    assert girth(D) == 5 and D.m == 5
    with pytest.raises(BadParams):
        directed_cycle(1)


def test_theta():
    D = theta(2, 4)
    assert serialize(D) == "6 6\n0 1\n0 3\n1 2\n3 4\n4 5\n5 2\n"
    assert distance(D, 0, 2) == 2
    assert girth(D) == float("inf")
    with pytest.raises(BadParams):
        theta(1, 1)


def test_random_girth_constrained_postconditions():
    # out-degree 2 and girth g need at least 2(g - 1) + 1 vertices, so each
    # bound gets its own feasible n range
    rng = random.Random(5)
    for _ in range(30):
        lb, nmin = rng.choice([(4, 8), (6, 12), (10, 24)])
        n = rng.randint(nmin, 40)
        D = random_girth_constrained(n, lb, 2, seed=rng.getrandbits(64))
        assert D.n == n
        assert girth(D) >= lb
        assert degrees(D).min_out >= 2


def test_random_girth_constrained_deterministic():
    a = random_girth_constrained(31, 10, 2, seed=5)
    b = random_girth_constrained(31, 10, 2, seed=5)
    assert digraph_sha(a) == digraph_sha(b)
    c = random_girth_constrained(31, 10, 2, seed=6)
    assert digraph_sha(a) != digraph_sha(c)


def test_random_girth_constrained_varies():
    shas = {digraph_sha(random_girth_constrained(24, 10, 2, seed=s)) for s in range(20)}
    assert len(shas) >= 18


def test_random_girth_constrained_param_errors():
    with pytest.raises(BadParams):
        random_girth_constrained(1, 2)
    with pytest.raises(BadParams):
        random_girth_constrained(5, 1)
    with pytest.raises(BadParams):
        random_girth_constrained(5, 2, min_outdeg=0)
    with pytest.raises(Infeasible):
        random_girth_constrained(5, 6)
    with pytest.raises(Infeasible):
        random_girth_constrained(5, 2, min_outdeg=5)
    # girth n with out-degree 2 would need a duplicate arc
    with pytest.raises(Infeasible):
        random_girth_constrained(6, 6)


def test_mutate_rejects_thin_digraphs():
    with pytest.raises(BadParams):
        mutate(directed_cycle(4))


def test_mutate_deterministic():
    D = complete_biorientation(4)
    assert serialize(mutate(D, seed=3)) == serialize(mutate(D, seed=3))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_mutate_postconditions(seed):
    rng = random.Random(seed)
    base = random_girth_constrained(rng.randint(8, 16), 3, 2, seed=rng.getrandbits(64))
    child = mutate(base, seed=rng.getrandbits(64))
    assert degrees(child).min_out >= 2
    assert child.n in (base.n, base.n + 1)  # subdivision adds one vertex
    # still simple: build() would have rejected loops or duplicates
    assert all(a.tail != a.head for a in child.sorted_arcs())
