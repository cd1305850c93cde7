import pytest

from wpoly.engine import kauffman_bracket
from wpoly.graph import Color, ColoredGraph, Edge, GraphError, spanning_trees
from wpoly.laurent import D, ONE
from wpoly.twist import MultiPoly, norm_bound_scan, p_statistic, specialize_twist, twist_polynomial
from conftest import random_graph


def cycle_of_chains(m: int) -> ColoredGraph:
    return ColoredGraph(m, tuple(Edge(i, (i + 1) % m, Color.CHAIN, 1) for i in range(m)))


def test_single_sheaf():
    G = ColoredGraph(2, (Edge(0, 1, Color.SHEAF, 2),))
    P = twist_polynomial(G)
    assert P == MultiPoly(1, {(0,): D * D - ONE, (1,): ONE})
    assert specialize_twist(P, G, [2]).to_str() == "-A^4 - A^-4"


def test_specialization_matches_bracket(rng):
    for _ in range(25):
        G = random_graph(rng, max_vertices=3, max_edges=4, connected=True)
        P = twist_polynomial(G)
        for _ in range(3):
            n = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in G.edges]
            assert specialize_twist(P, G, n) == kauffman_bracket(G.with_lengths(n))


def test_twist_polynomial_requires_connected():
    with pytest.raises(GraphError):
        twist_polynomial(ColoredGraph(2))


def test_specialize_rejects_zero_length():
    G = cycle_of_chains(3)
    with pytest.raises(GraphError):
        specialize_twist(twist_polynomial(G), G, [1, 0, 1])


def test_multipoly_text():
    P = MultiPoly(2, {(1, 0): D, (0, 0): ONE})
    assert P.to_str() == "[1] 1\n[x1] -A^2 - A^-2"


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_p_of_chain_cycle(m):
    p, F = p_statistic(cycle_of_chains(m))
    assert p == 1
    assert F in set(spanning_trees(cycle_of_chains(m)))


def test_norm_scan_uses_p():
    scan = norm_bound_scan(cycle_of_chains(3), [(1, 1, 1), (2, -1, 3)])
    assert scan.p == 1
    assert scan.max_within(1) == scan.norms[(1, 1, 1)]
