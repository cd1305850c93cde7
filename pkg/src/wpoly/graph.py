"""Colored multigraphs with chain/sheaf edges.

A ``ColoredGraph`` is the template graph of a link family: every edge is a
chain or a sheaf carrying a signed integer length.  Edge subsets are
plain ``int`` bitmasks over the edge list, bit ``i`` standing for edge
``i``; the edge list order is the canonical order used for activities.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

__all__ = [
    "Color",
    "Edge",
    "ColoredGraph",
    "GraphError",
    "parse_graph",
    "dump_graph",
    "load_graph",
    "components",
    "cyclomatic",
    "spanning_trees",
    "kirchhoff_count",
    "activities",
    "expand_to_unit",
    "glue",
    "glue_n",
    "disjoint_union",
]


class GraphError(ValueError):
    """Malformed graph input or a violated graph precondition."""


class Color(enum.Enum):
    CHAIN = "chain"
    SHEAF = "sheaf"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    color: Color
    t: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class ColoredGraph:
    vcount: int
    edges: tuple[Edge, ...] = ()
    marked: tuple[int, int] | None = None

    def __post_init__(self):
        if self.vcount < 1:
            raise GraphError("a graph needs at least one vertex")
        object.__setattr__(self, "edges", tuple(self.edges))
        for e in self.edges:
            for w in (e.u, e.v):
                if not 0 <= w < self.vcount:
                    raise GraphError(f"vertex {w} out of range [0, {self.vcount})")
        if self.marked is not None:
            u, v = self.marked
            object.__setattr__(self, "marked", (int(u), int(v)))
            for w in self.marked:
                if not 0 <= w < self.vcount:
                    raise GraphError(f"marked vertex {w} out of range")

    @property
    def ecount(self) -> int:
        return len(self.edges)

    @property
    def full(self) -> int:
        return (1 << len(self.edges)) - 1

    def with_lengths(self, lengths: Sequence[int]) -> "ColoredGraph":
        if len(lengths) != len(self.edges):
            raise GraphError("one length per edge required")
        edges = tuple(replace(e, t=int(t)) for e, t in zip(self.edges, lengths))
        return replace(self, edges=edges)

    def mirror(self) -> "ColoredGraph":
        return self.with_lengths([-e.t for e in self.edges])

    def permuted(self, order: Sequence[int]) -> "ColoredGraph":
        return replace(self, edges=tuple(self.edges[i] for i in order))

    def unit_crossings(self) -> int:
        return sum(abs(e.t) for e in self.edges)


# -- file format ---------------------------------------------------------------

_TOP_KEYS = {"vertices", "edges", "marked"}
_EDGE_KEYS = {"u", "v", "color", "t"}


def parse_graph(text: str | dict) -> ColoredGraph:
    """Parse the JSON graph format.

    ``{"vertices": n, "edges": [{"u": 0, "v": 1, "color": "sheaf", "t": 2}],
    "marked": [0, 1]}``; unknown fields and zero lengths are rejected.
    """
    obj = json.loads(text) if isinstance(text, str) else text
    if not isinstance(obj, dict):
        raise GraphError("graph must be a JSON object")
    extra = set(obj) - _TOP_KEYS
    if extra:
        raise GraphError(f"unknown fields: {sorted(extra)}")
    if "vertices" not in obj or "edges" not in obj:
        raise GraphError("fields 'vertices' and 'edges' are required")
    n = obj["vertices"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphError("'vertices' must be an integer")
    edges = []
    for i, raw in enumerate(obj["edges"]):
        if not isinstance(raw, dict):
            raise GraphError(f"edge {i} must be an object")
        if set(raw) != _EDGE_KEYS:
            raise GraphError(f"edge {i} must have exactly the fields u, v, color, t")
        try:
            color = Color(raw["color"])
        except ValueError:
            raise GraphError(f"edge {i}: unknown color {raw['color']!r}") from None
        for key in ("u", "v", "t"):
            if not isinstance(raw[key], int) or isinstance(raw[key], bool):
                raise GraphError(f"edge {i}: {key!r} must be an integer")
        if raw["t"] == 0:
            raise GraphError(f"edge {i}: length 0 is not allowed")
        edges.append(Edge(raw["u"], raw["v"], color, raw["t"]))
    marked = obj.get("marked")
    if marked is not None:
        if (not isinstance(marked, list) or len(marked) != 2
                or not all(isinstance(w, int) for w in marked)):
            raise GraphError("'marked' must be a pair of integers")
        marked = tuple(marked)
    return ColoredGraph(n, tuple(edges), marked)


def dump_graph(G: ColoredGraph) -> str:
    obj = {
        "vertices": G.vcount,
        "edges": [{"u": e.u, "v": e.v, "color": e.color.value, "t": e.t} for e in G.edges],
    }
    if G.marked is not None:
        obj["marked"] = list(G.marked)
    return json.dumps(obj)


def load_graph(path) -> ColoredGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


# -- connectivity ---------------------------------------------------------------


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union_find(G: ColoredGraph, S: int) -> list[int]:
    parent = list(range(G.vcount))
    for i, e in enumerate(G.edges):
        if S >> i & 1:
            a, b = _find(parent, e.u), _find(parent, e.v)
            if a != b:
                parent[a] = b
    return parent


def components(G: ColoredGraph, S: int | None = None) -> int:
    """Connected components of the spanning subgraph with edge set ``S``."""
    if S is None:
        S = G.full
    parent = _union_find(G, S)
    return sum(1 for x in range(G.vcount) if _find(parent, x) == x)


def cyclomatic(G: ColoredGraph, S: int | None = None) -> int:
    if S is None:
        S = G.full
    return bin(S).count("1") - G.vcount + components(G, S)


def connects(G: ColoredGraph, S: int, a: int, b: int) -> bool:
    parent = _union_find(G, S)
    return _find(parent, a) == _find(parent, b)


# -- spanning trees -------------------------------------------------------------


def spanning_trees(G: ColoredGraph) -> Iterator[int]:
    """Yield every spanning tree of a connected graph as an edge bitmask."""
    if components(G) != 1:
        raise GraphError("not connected")
    need = G.vcount - 1
    candidates = [i for i, e in enumerate(G.edges) if not e.is_loop]
    for combo in combinations(candidates, need):
        parent = list(range(G.vcount))
        ok = True
        for i in combo:
            e = G.edges[i]
            a, b = _find(parent, e.u), _find(parent, e.v)
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            yield sum(1 << i for i in combo)


def kirchhoff_count(G: ColoredGraph) -> int:
    """Number of spanning trees by the matrix-tree theorem, in exact arithmetic."""
    n = G.vcount
    if n == 1:
        return 1
    L = [[Fraction(0)] * n for _ in range(n)]
    for e in G.edges:
        if e.is_loop:
            continue
        L[e.u][e.u] += 1
        L[e.v][e.v] += 1
        L[e.u][e.v] -= 1
        L[e.v][e.u] -= 1
    M = [row[1:] for row in L[1:]]
    m = n - 1
    det = Fraction(1)
    for c in range(m):
        pivot = next((r for r in range(c, m) if M[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, m):
            f = M[r][c] / M[c][c]
            if f:
                for k in range(c, m):
                    M[r][k] -= f * M[c][k]
    return int(det)


def _tree_path(G: ColoredGraph, F: int, a: int, b: int) -> list[int]:
    """Edge indices on the unique path from ``a`` to ``b`` inside tree ``F``."""
    adj: dict[int, list[tuple[int, int]]] = {x: [] for x in range(G.vcount)}
    for i, e in enumerate(G.edges):
        if F >> i & 1:
            adj[e.u].append((e.v, i))
            adj[e.v].append((e.u, i))
    prev: dict[int, tuple[int, int] | None] = {a: None}
    stack = [a]
    while stack:
        x = stack.pop()
        for y, i in adj[x]:
            if y not in prev:
                prev[y] = (x, i)
                stack.append(y)
    path = []
    x = b
    while prev[x] is not None:
        x, i = prev[x]
        path.append(i)
    return path


def activities(G: ColoredGraph, F: int) -> list[str]:
    """Tag every edge ``IA``, ``II``, ``EA`` or ``EI`` with respect to tree ``F``.

    Tree edges are internally active when they are the least-indexed edge of
    their fundamental cut; non-tree edges are externally active when they
    are the least-indexed edge of their fundamental cycle.
    """
    if bin(F).count("1") != G.vcount - 1 or components(G, F) != 1:
        raise GraphError("F is not a spanning tree")
    tags = []
    for i, e in enumerate(G.edges):
        if F >> i & 1:
            parent = _union_find(G, F & ~(1 << i))
            side = _find(parent, e.u)
            cut = [
                j for j, f in enumerate(G.edges)
                if (_find(parent, f.u) == side) != (_find(parent, f.v) == side)
            ]
            tags.append("IA" if min(cut) == i else "II")
        else:
            cyc = [i] if e.is_loop else [i] + _tree_path(G, F, e.u, e.v)
            tags.append("EA" if min(cyc) == i else "EI")
    return tags


# -- constructions --------------------------------------------------------------


def expand_to_unit(G: ColoredGraph) -> ColoredGraph:
    """Realize every length-``t`` edge as ``|t|`` unit edges of sign ``sign(t)``."""
    edges: list[Edge] = []
    n = G.vcount
    for e in G.edges:
        if e.t == 0:
            raise GraphError("length 0 is not allowed")
        s = 1 if e.t > 0 else -1
        m = abs(e.t)
        if e.color is Color.SHEAF:
            edges.extend(Edge(e.u, e.v, Color.SHEAF, s) for _ in range(m))
        else:
            path = [e.u] + list(range(n, n + m - 1)) + [e.v]
            n += m - 1
            edges.extend(Edge(a, b, Color.CHAIN, s) for a, b in zip(path, path[1:]))
    return ColoredGraph(n, tuple(edges), G.marked)


def glue(base: ColoredGraph, tangle: ColoredGraph) -> ColoredGraph:
    """Attach ``tangle`` to ``base`` by identifying their marked pairs."""
    if base.marked is None or tangle.marked is None:
        raise GraphError("both graphs need a marked vertex pair")
    bu, bv = base.marked
    tu, tv = tangle.marked
    relabel = {tu: bu, tv: bv}
    nxt = base.vcount
    for w in range(tangle.vcount):
        if w not in relabel:
            relabel[w] = nxt
            nxt += 1
    edges = base.edges + tuple(
        Edge(relabel[e.u], relabel[e.v], e.color, e.t) for e in tangle.edges
    )
    return ColoredGraph(nxt, edges, base.marked)


def glue_n(base: ColoredGraph, tangle: ColoredGraph, n: int) -> ColoredGraph:
    G = base
    for _ in range(n):
        G = glue(G, tangle)
    return G


def disjoint_union(G: ColoredGraph, H: ColoredGraph) -> ColoredGraph:
    off = G.vcount
    edges = G.edges + tuple(Edge(e.u + off, e.v + off, e.color, e.t) for e in H.edges)
    return ColoredGraph(G.vcount + H.vcount, edges, G.marked)
