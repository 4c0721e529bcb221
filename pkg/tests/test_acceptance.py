"""Acceptance suite: the nine gate checks, one printed line per criterion.

Run with `pytest tests/test_acceptance.py -s` to see the lines as they pass.
Each criterion is exact (integer equality); randomness is seeded.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from fractions import Fraction

from verkit import (
    LevelledWeighting,
    caterpillar,
    count_classical,
    count_points,
    count_points_bruteforce,
    degree_one_generation_check,
    dualizing_weighting,
    dumbbell,
    enumerate_trivalent,
    factorization_4point,
    filtration_value,
    flip_connectivity,
    fusion_coeff,
    gorenstein_check,
    hilbert_cox,
    loop_with_leg,
    new_functional,
    theta_graph,
    trinode,
    verlinde,
    verlinde_closed_form,
)

SIGNATURES = [(0, 4), (0, 5), (0, 6), (1, 1), (1, 2), (2, 0), (2, 1)]
DESK_GRAPHS = [trinode(), caterpillar(4), dumbbell(), theta_graph(), loop_with_leg()]


def _report(number: int, body) -> float:
    t0 = time.perf_counter()
    try:
        body()
    except BaseException:
        print(f"[criterion {number}] FAIL")
        raise
    elapsed = time.perf_counter() - t0
    print(f"[criterion {number}] PASS ({elapsed:.1f}s)")
    return elapsed


def test_criterion_1_cross_method_agreement():
    def body():
        for g in range(3):
            for n in range(5):
                for L in range(7):
                    for r in itertools.product(range(L + 1), repeat=n):
                        a = verlinde(g, r, L)
                        b = verlinde_closed_form(g, r, L)
                        assert a == b, (g, r, L, a, b)
                        if g == 0 and n == 4:
                            assert factorization_4point(*r, L) == a, (r, L)

    elapsed = _report(1, body)
    assert elapsed < 120.0


def test_criterion_2_graph_independence():
    def body():
        rng = random.Random(2)
        for g, n in SIGNATURES:
            classes = enumerate_trivalent(g, n)
            for _ in range(50):
                L = rng.randint(0, 5)
                r = tuple(rng.randint(0, L) for _ in range(n))
                values = {count_points(cls, r, L) for cls in classes}
                assert len(values) == 1, (g, n, r, L, values)
                assert values.pop() == verlinde(g, r, L)

    _report(2, body)


def test_criterion_3_known_closed_values():
    def body():
        for L in range(21):
            assert verlinde(1, (), L) == L + 1
        assert verlinde(2, (), 1) == 4
        for L in range(11):
            for r in itertools.product(range(L + 1), repeat=3):
                assert verlinde(0, r, L) == fusion_coeff(*r, L)
        table = hilbert_cox(trinode(), 10)
        for L in range(11):
            assert table.values[L] == math.comb(L + 3, 3)

    _report(3, body)


def test_criterion_4_oracle_equivalence():
    def body():
        rng = random.Random(4)
        for g, n in SIGNATURES:
            for cls in enumerate_trivalent(g, n):
                assert len(cls.edges) <= 6
                for _ in range(20):
                    L = rng.randint(0, 4)
                    r = tuple(rng.randint(0, L) for _ in range(n))
                    assert count_points(cls, r, L) == count_points_bruteforce(
                        cls, r, L
                    ), (g, n, r, L)

    _report(4, body)


def test_criterion_5_stabilization_and_monotonicity():
    def body():
        for n in (3, 4, 5):
            for tree in enumerate_trivalent(0, n):
                for r in itertools.product(range(5), repeat=n):
                    total = sum(r)
                    classical = count_classical(tree, r)
                    previous = 0
                    for L in range(total + 3):
                        value = count_points(tree, r, L)
                        assert value >= previous, (r, L)
                        if L >= total:
                            assert value == classical, (r, L)
                        previous = value

    _report(5, body)


def test_criterion_6_gorenstein():
    def body():
        for graph in DESK_GRAPHS:
            holds, certificates = gorenstein_check(graph, 8)
            assert holds
            omega = dualizing_weighting(graph)
            for interior, residual in certificates:
                assert residual + omega == interior
                assert all(
                    x >= 0 for x in residual.edge_weights + residual.leg_weights
                )

    elapsed = _report(6, body)
    assert elapsed < 60.0


def test_criterion_7_degree_one_generation():
    def body():
        for n in (3, 4, 5):
            for tree in enumerate_trivalent(0, n):
                holds, certificates = degree_one_generation_check(tree, 3)
                assert holds
                zero = LevelledWeighting(
                    tree, (0,) * len(tree.edges), (0,) * n, 0
                )
                for point, parts in certificates.items():
                    assert len(parts) == point.level
                    assert all(p.level == 1 for p in parts)
                    acc = zero
                    for p in parts:
                        acc = acc + p
                    assert acc == point

    _report(7, body)


def test_criterion_8_moduli_combinatorics():
    def body():
        for n in range(3, 8):
            want = 1
            for k in range(2 * n - 5, 0, -2):
                want *= k
            assert len(enumerate_trivalent(0, n)) == want, n
        assert len(enumerate_trivalent(2, 0)) == 2
        for g, n in [(0, 4), (0, 5), (0, 6), (2, 0), (1, 2)]:
            connected, _ = flip_connectivity(g, n)
            assert connected, (g, n)

    elapsed = _report(8, body)
    assert elapsed < 300.0


def test_criterion_9_valuation_laws():
    def body():
        rng = random.Random(9)
        for graph in DESK_GRAPHS:
            ne, nl = len(graph.edges), graph.n_legs
            theta = None
            for trial in range(1000):
                if trial % 50 == 0:
                    theta = new_functional(
                        graph,
                        [Fraction(rng.randint(0, 12), rng.randint(1, 4))
                         for _ in range(ne)],
                        [Fraction(rng.randint(0, 12), rng.randint(1, 4))
                         for _ in range(nl)],
                    )
                w1 = LevelledWeighting(
                    graph,
                    tuple(rng.randint(0, 9) for _ in range(ne)),
                    tuple(rng.randint(0, 9) for _ in range(nl)),
                    rng.randint(0, 9),
                )
                w2 = LevelledWeighting(
                    graph,
                    tuple(rng.randint(0, 9) for _ in range(ne)),
                    tuple(rng.randint(0, 9) for _ in range(nl)),
                    rng.randint(0, 9),
                )
                assert filtration_value(w1 + w2, theta) == filtration_value(
                    w1, theta
                ) + filtration_value(w2, theta)

    _report(9, body)
