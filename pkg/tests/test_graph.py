import json

import pytest

from wpoly.graph import (
    Color, ColoredGraph, Edge, GraphError, activities, components, cyclomatic, dump_graph,
    expand_to_unit, glue, glue_n, kirchhoff_count, parse_graph, spanning_trees,
)
from conftest import random_graph


def test_parse_and_dump_roundtrip():
    text = '{"vertices": 2, "edges": [{"u": 0, "v": 1, "color": "sheaf", "t": 2}], "marked": [0, 1]}'
    G = parse_graph(text)
    assert G.edges == (Edge(0, 1, Color.SHEAF, 2),)
    assert parse_graph(dump_graph(G)) == G


@pytest.mark.parametrize("bad", [
    {"vertices": 2, "edges": [], "colour": 1},
    {"vertices": 2, "edges": [{"u": 0, "v": 1, "color": "sheaf", "t": 0}]},
    {"vertices": 2, "edges": [{"u": 0, "v": 5, "color": "chain", "t": 1}]},
    {"vertices": 2, "edges": [{"u": 0, "v": 1, "color": "red", "t": 1}]},
    {"vertices": 2, "edges": [{"u": 0, "v": 1, "color": "chain", "t": 1, "w": 3}]},
    {"edges": []},
])
def test_parse_rejects(bad):
    with pytest.raises(GraphError):
        parse_graph(json.dumps(bad))


def test_components_and_cyclomatic():
    G = ColoredGraph(4, (Edge(0, 1, Color.CHAIN, 1), Edge(1, 0, Color.CHAIN, 1), Edge(2, 2, Color.SHEAF, 1)))
    assert components(G) == 3
    assert components(G, 0) == 4
    assert cyclomatic(G) == 2


def test_spanning_trees_match_kirchhoff(rng):
    for _ in range(60):
        G = random_graph(rng, max_vertices=5, max_edges=8, connected=True)
        assert sum(1 for _ in spanning_trees(G)) == kirchhoff_count(G)


def test_spanning_trees_need_connected_graph():
    with pytest.raises(GraphError):
        list(spanning_trees(ColoredGraph(2)))


def test_activities_triangle():
    G = ColoredGraph(3, tuple(Edge(a, b, Color.CHAIN, 1) for a, b in ((0, 1), (1, 2), (0, 2))))
    # tree {1, 2}: edge 0 closes the cycle with least index -> externally active
    assert activities(G, 0b110) == ["EA", "II", "II"]
    assert activities(G, 0b011) == ["IA", "IA", "EI"]


def test_expand_to_unit():
    G = ColoredGraph(2, (Edge(0, 1, Color.CHAIN, -3), Edge(0, 1, Color.SHEAF, 2)))
    H = expand_to_unit(G)
    assert H.vcount == 4 and H.ecount == 5
    assert all(abs(e.t) == 1 for e in H.edges)


def test_glue_identifies_marked_pair():
    base = ColoredGraph(2, (), (0, 1))
    tangle = ColoredGraph(3, (Edge(0, 2, Color.SHEAF, 2), Edge(2, 1, Color.CHAIN, 1)), (0, 1))
    G = glue(base, tangle)
    assert G.vcount == 3 and G.marked == (0, 1)
    assert glue_n(base, tangle, 3).vcount == 5
