from itertools import combinations

import networkx as nx
import pytest

import corpus
from matchstick.bounds import ceil_isqrt
from matchstick.construct import extremality_audit, penny_graph_of, spiral_points
from matchstick.errors import DuplicatePoints, NonPositive
from matchstick.geometry import LatticePoint, Tolerance
from matchstick.planegraph import blocks, extract_faces, find_violations

RING1 = {(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)}


def brute_edges(points):
    return sum(1 for p, q in combinations(points, 2) if (p - q).norm2() == 1)


def test_spiral_examples():
    assert spiral_points(1) == [LatticePoint(0, 0)]
    pts = spiral_points(7)
    assert pts[0] == (0, 0) and set(pts[1:]) == RING1
    with pytest.raises(NonPositive):
        spiral_points(0)


def test_spiral_rings():
    pts = spiral_points(1 + 3 * 10 * 11)
    assert len(set(pts)) == len(pts)
    start = 1
    for k in range(1, 11):
        ring = pts[start:start + 6 * k]
        assert all(p.hex_distance() == k for p in ring)
        start += 6 * k


def test_spiral_prefixes_connected():
    pts = spiral_points(400)
    for i in range(1, len(pts)):
        # each new point touches an earlier one
        assert any((pts[i] - q).norm2() == 1 for q in pts[:i])


def test_spiral_19_is_hex19():
    # the full radius-2 hexagon; the hand-drawn fixture is isomorphic to it
    pts = spiral_points(19)
    assert set(pts) == {p for p in (LatticePoint(a, b) for a in range(-2, 3) for b in range(-2, 3)) if p.hex_distance() <= 2}
    fig = corpus.hex19()
    spiral = penny_graph_of(pts)
    g1, g2 = nx.Graph(list(fig.edges)), nx.Graph(list(spiral.edges))
    assert nx.is_isomorphic(g1, g2)


def test_penny_graph_examples():
    assert penny_graph_of([LatticePoint(0, 0), LatticePoint(1, 0)]).e == 1
    assert penny_graph_of(spiral_points(7)).e == 12
    assert penny_graph_of(spiral_points(17)).e == 36
    with pytest.raises(DuplicatePoints):
        penny_graph_of([LatticePoint(0, 0), LatticePoint(0, 0)])


@pytest.mark.parametrize("seed", range(20))
def test_penny_graph_against_brute_force(seed):
    import random

    pts = corpus.random_point_set(random.Random(seed), 40)
    m = penny_graph_of(pts)
    assert m.e == brute_edges(pts)
    # valid even with zero tolerance: exact predicates on lattice points
    assert find_violations(m.graph, Tolerance(0.0)) == []


def test_spiral_edge_count_monotone():
    prev = 0
    for n in range(1, 300):
        e = penny_graph_of(spiral_points(n)).e
        assert 1 <= e - prev <= 3 or n == 1
        prev = e


def test_audit_examples():
    rows = extremality_audit(17)
    assert tuple(rows[2]) == (3, 3, 1, True)
    assert tuple(rows[16]) == (17, 36, 20, True)
    with pytest.raises(NonPositive):
        extremality_audit(0)


def test_audit_against_independent_counts():
    for row in extremality_audit(150):
        pts = spiral_points(row.n)
        assert row.edges == brute_edges(pts)
        assert row.triangles == extract_faces(penny_graph_of(pts)).f3
        assert row.edges == 3 * row.n - ceil_isqrt(12 * row.n - 3)


def test_audit_workers_agree():
    assert extremality_audit(60, workers=2) == extremality_audit(60)


def test_spiral_prefixes_biconnected_from_three():
    for n in range(3, 200):
        assert blocks(penny_graph_of(spiral_points(n))).is_biconnected
