import random

import pytest

from wpoly.graph import Color, ColoredGraph, Edge, components


def random_graph(rng: random.Random, max_vertices: int = 4, max_edges: int = 6,
                 max_len: int = 3, connected: bool = False, marked: bool = False) -> ColoredGraph:
    while True:
        n = rng.randint(1, max_vertices)
        m = rng.randint(0, max_edges)
        edges = []
        for _ in range(m):
            u, v = rng.randrange(n), rng.randrange(n)
            t = rng.choice([s * k for k in range(1, max_len + 1) for s in (1, -1)])
            edges.append(Edge(u, v, rng.choice([Color.CHAIN, Color.SHEAF]), t))
        mk = (0, n - 1) if marked and n >= 2 else None
        if marked and mk is None:
            continue
        G = ColoredGraph(n, tuple(edges), mk)
        if connected and components(G) != 1:
            continue
        return G


@pytest.fixture
def rng():
    return random.Random(20261017)
