from __future__ import annotations

import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from verkit import (
    GraphMismatch,
    InstanceTooLarge,
    LevelledWeighting,
    NonTrivalentGraph,
    NotATree,
    admissible_triple,
    admissible_triple_level,
    caterpillar,
    count_classical,
    count_cox,
    count_points,
    count_points_bruteforce,
    dumbbell,
    enumerate_points,
    is_point,
    loop_with_leg,
    new_graph,
    theta_graph,
    trinode,
)

small = st.integers(min_value=0, max_value=8)


def test_admissible_triple_basics():
    assert admissible_triple(0, 0, 0)
    assert not admissible_triple(1, 1, 1)
    assert admissible_triple(2, 2, 2)
    assert admissible_triple(1, 1, 0)
    assert not admissible_triple(0, 0, 2)
    assert not admissible_triple(-1, 1, 0)


@settings(max_examples=200, deadline=None)
@given(a=small, b=small, c=small)
def test_admissible_triple_symmetric(a, b, c):
    base = admissible_triple(a, b, c)
    for p in itertools.permutations((a, b, c)):
        assert admissible_triple(*p) == base


def test_admissible_triple_level_examples():
    assert admissible_triple_level(1, 1, 0, 1)
    assert not admissible_triple_level(1, 1, 2, 1)
    assert admissible_triple_level(1, 1, 2, 2)
    assert admissible_triple_level(2, 2, 2, 3)
    assert not admissible_triple_level(2, 2, 2, 2)
    assert not admissible_triple_level(3, 0, 3, 2)  # weight above level


@settings(max_examples=200, deadline=None)
@given(a=small, b=small, c=small, L=st.integers(min_value=0, max_value=10))
def test_level_condition_monotone_in_level(a, b, c, L):
    if admissible_triple_level(a, b, c, L):
        assert admissible_triple_level(a, b, c, L + 1)


def test_is_point_dumbbell_examples():
    g = dumbbell()
    # edge order: loop at 0, bridge, loop at 1
    assert is_point(g, LevelledWeighting(g, (1, 0, 1), (), 1))
    assert not is_point(g, LevelledWeighting(g, (0, 2, 0), (), 2))
    t = trinode()
    assert is_point(t, LevelledWeighting(t, (), (0, 0, 0), 0))


def test_is_point_validation():
    bad = new_graph([(0, 1)], [], [(0, 1)])
    with pytest.raises(NonTrivalentGraph):
        is_point(bad, LevelledWeighting(bad, (), (0,), 1))
    g, h = dumbbell(), theta_graph()
    with pytest.raises(GraphMismatch):
        is_point(g, LevelledWeighting(h, (0, 0, 0), (), 1))


def test_count_points_frozen_examples():
    cat = caterpillar(4)
    assert count_points(cat, (1, 1, 1, 1), 1) == 1
    assert count_points(cat, (1, 1, 1, 1), 2) == 2
    assert count_points(dumbbell(), (), 1) == 4
    assert count_points(theta_graph(), (), 1) == 4
    t = trinode()
    for r in itertools.product(range(4), repeat=3):
        expected = 1 if admissible_triple_level(*r, 3) else 0
        assert count_points(t, r, 3) == expected


def test_count_points_out_of_range_weights_give_zero():
    cat = caterpillar(4)
    assert count_points(cat, (3, 0, 0, 0), 2) == 0
    assert count_points(cat, (1, 1, 1, 0), 4) == 0  # odd total
    assert count_points(cat, (-1, 1, 1, 1), 4) == 0


def test_count_points_rejects_non_trivalent():
    four_valent = new_graph([(0, 0)], [(0, 0), (0, 0)], [])
    with pytest.raises(NonTrivalentGraph):
        count_points(four_valent, (), 2)


def test_leaf_weight_count_must_match():
    with pytest.raises(GraphMismatch):
        count_points(trinode(), (1, 1), 2)
    with pytest.raises(GraphMismatch):
        count_points(trinode(), {1: 0, 2: 0, 4: 0}, 2)


def test_count_points_accepts_label_keyed_mapping():
    cat = caterpillar(4)
    assert count_points(cat, {1: 1, 2: 1, 3: 1, 4: 1}, 2) == 2


def test_brute_force_agrees_exhaustively():
    cases = [
        (trinode(), 3),
        (caterpillar(4), 3),
        (caterpillar(5), 2),
        (dumbbell(), 3),
        (theta_graph(), 3),
        (loop_with_leg(), 4),
    ]
    for graph, lmax in cases:
        n = graph.n_legs
        for L in range(lmax + 1):
            for r in itertools.product(range(L + 1), repeat=n):
                assert count_points(graph, r, L) == count_points_bruteforce(
                    graph, r, L
                ), (graph, r, L)


def test_enumerate_points_matches_count_and_order():
    cat = caterpillar(4)
    pts = list(enumerate_points(cat, (1, 1, 1, 1), 2))
    assert [w.edge_weights for w in pts] == [(0,), (2,)]
    assert all(is_point(cat, w) for w in pts)
    assert len(pts) == count_points(cat, (1, 1, 1, 1), 2)

    t = trinode()
    pts = list(enumerate_points(t, (0, 0, 0), 5))
    assert len(pts) == 1 and pts[0].edge_weights == ()

    assert list(enumerate_points(cat, (9, 0, 0, 0), 5)) == []


def test_enumerate_points_lexicographic():
    th = theta_graph()
    pts = [w.edge_weights for w in enumerate_points(th, (), 2)]
    assert pts == sorted(pts)
    assert len(pts) == count_points(th, (), 2)


def test_brute_limit_env(monkeypatch):
    monkeypatch.setenv("VK_BRUTE_LIMIT", "10")
    with pytest.raises(InstanceTooLarge):
        count_points_bruteforce(theta_graph(), (), 3)
    with pytest.raises(InstanceTooLarge):
        list(enumerate_points(theta_graph(), (), 3))
    # the tensor route is not capped
    assert count_points(theta_graph(), (), 3) == 20


def test_count_classical_examples():
    assert count_classical(trinode(), (1, 1, 0)) == 1
    assert count_classical(caterpillar(4), (1, 1, 1, 1)) == 2
    assert count_classical(caterpillar(4), (2, 2, 2, 2)) == 3
    assert count_classical(trinode(), (0, 0, 0)) == 1


def test_count_classical_rejects_non_trees():
    with pytest.raises(NotATree):
        count_classical(theta_graph(), ())
    with pytest.raises(NotATree):
        count_classical(loop_with_leg(), (0,))


def test_stabilization_at_leaf_sum():
    rng = random.Random(11)
    for n in (3, 4, 5):
        tree = caterpillar(n)
        for _ in range(25):
            r = tuple(rng.randint(0, 4) for _ in range(n))
            s = sum(r)
            cl = count_classical(tree, r)
            assert count_points(tree, r, s) == cl
            assert count_points(tree, r, s + 3) == cl
            # truncation only removes points
            for L in range(s):
                assert count_points(tree, r, L) <= cl


@settings(max_examples=80, deadline=None)
@given(
    r=st.tuples(*[st.integers(min_value=0, max_value=5)] * 4),
    L=st.integers(min_value=0, max_value=8),
)
def test_count_nondecreasing_in_level(r, L):
    cat = caterpillar(4)
    assert count_points(cat, r, L) <= count_points(cat, r, L + 1)


@settings(max_examples=80, deadline=None)
@given(r=st.tuples(*[st.integers(min_value=0, max_value=6)] * 4))
def test_odd_leaf_sum_counts_zero(r):
    if sum(r) % 2 == 1:
        assert count_points(caterpillar(4), r, 5) == 0


def test_odd_sum_zero_on_loop_graphs():
    g = loop_with_leg()
    for r in (1, 3, 5):
        assert count_points(g, (r,), 6) == 0


def test_count_cox_values():
    t = trinode()
    assert [count_cox(t, L) for L in range(5)] == [1, 4, 10, 20, 35]
    assert count_cox(dumbbell(), 1) == 4
    for g in (caterpillar(4), theta_graph(), loop_with_leg()):
        assert count_cox(g, 0) == 1


def test_count_cox_matches_leafwise_sum():
    for graph, lmax in [(trinode(), 4), (caterpillar(4), 2), (loop_with_leg(), 3)]:
        n = graph.n_legs
        for L in range(lmax + 1):
            total = sum(
                count_points_bruteforce(graph, r, L)
                for r in itertools.product(range(L + 1), repeat=n)
            )
            assert count_cox(graph, L) == total, (graph, L)


def test_weighting_json_round_trip():
    cat = caterpillar(4)
    w = LevelledWeighting(cat, (2,), (1, 1, 1, 1), 3)
    data = w.to_json()
    assert set(data) == {"edges", "legs", "level"}
    assert data["edges"] == {"0": 2}
    assert data["legs"] == {"1": 1, "2": 1, "3": 1, "4": 1}
    back = LevelledWeighting.from_json(cat, json.dumps(data))
    assert back == w


def test_weighting_addition_and_scaling():
    cat = caterpillar(4)
    w1 = LevelledWeighting(cat, (2,), (1, 1, 1, 1), 3)
    w2 = LevelledWeighting(cat, (0,), (1, 0, 1, 0), 2)
    s = w1 + w2
    assert s.edge_weights == (2,) and s.leg_weights == (2, 1, 2, 1)
    assert s.level == 5
    assert w1.scaled(3).level == 9
    with pytest.raises(GraphMismatch):
        w1 + LevelledWeighting(trinode(), (), (0, 0, 0), 1)


def test_factorization_shape_of_caterpillar_count():
    # two-vertex chain: the middle weight ranges over fused values
    cat = caterpillar(4)
    for L in range(4):
        for r in itertools.product(range(L + 1), repeat=4):
            direct = count_points(cat, r, L)
            bysum = sum(
                count_points(trinode(), (r[0], r[1], m), L)
                * count_points(trinode(), (m, r[2], r[3]), L)
                for m in range(L + 1)
            )
            assert direct == bysum
