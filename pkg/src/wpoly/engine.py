"""W-polynomial of colored graphs at ``t = z1 = z2 = d`` and the Kauffman bracket.

Three formulations are provided: the subset sum (reference path),
deletion-contraction, and the spanning-tree expansion.  ``bracket_oracle``
is an independent state sum over the unit expansion of a template graph.
"""

from __future__ import annotations

from typing import Sequence

from .graph import (
    Color,
    ColoredGraph,
    GraphError,
    activities,
    components,
    expand_to_unit,
    spanning_trees,
)
from .laurent import (
    D,
    DR_ONE,
    DRingElem,
    LaurentPoly,
    NotDivisibleError,
    ONE,
    ZERO,
    exact_div,
)

__all__ = [
    "NormalizationError",
    "edge_weights",
    "theorem1_weights",
    "w_subset",
    "w_delcon",
    "w_spantree",
    "kauffman_bracket",
    "bracket_oracle",
    "jones",
    "FORMULATIONS",
]

Weights = Sequence[tuple[DRingElem, DRingElem]]


class NormalizationError(ArithmeticError):
    """A value that must be d-free kept a power of ``d`` in its denominator."""


def theorem1_weights(color: Color, t: int) -> tuple[DRingElem, DRingElem]:
    """Edge weights ``(x, y)`` that turn W into the Kauffman bracket.

    chain:  x = A^t,                         y = ((-A^-3)^t - A^t) / d
    sheaf:  x = ((-A^3)^t - A^-t) / d,       y = A^-t
    """
    if t == 0:
        raise GraphError("length 0 is not allowed")
    sign = -1 if t % 2 else 1
    if color is Color.CHAIN:
        x = LaurentPoly.monomial(1, t)
        # division by d is exact for every t != 0
        y = exact_div(LaurentPoly({-3 * t: sign}) - x, D)
        return DRingElem(x), DRingElem(y)
    y = LaurentPoly.monomial(1, -t)
    x = exact_div(LaurentPoly({3 * t: sign}) - y, D)
    return DRingElem(x), DRingElem(y)


def edge_weights(G: ColoredGraph) -> list[tuple[DRingElem, DRingElem]]:
    return [theorem1_weights(e.color, e.t) for e in G.edges]


def _collect(acc: dict[int, LaurentPoly]) -> DRingElem:
    if not acc:
        return DRingElem(ZERO)
    lo = min(acc)
    total = ZERO
    for e, num in acc.items():
        total = total + (num if e == lo else num * D ** (e - lo))
    return DRingElem(total, lo)


def w_subset(G: ColoredGraph, w: Weights) -> DRingElem:
    """Subset expansion ``sum_S x^S y^(E-S) d^(|S| + 2k(S) - V - 1)``.

    Walks the include/exclude tree depth first, carrying the partial weight
    product and a union-find with rollback for ``k(S)``.
    """
    if len(w) != G.ecount:
        raise ValueError("one weight pair per edge required")
    edges = G.edges
    E = len(edges)
    parent = list(range(G.vcount))
    size = [1] * G.vcount
    acc: dict[int, LaurentPoly] = {}
    base_exp = -G.vcount - 1

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i, prod, dexp, nsel, k):
        if i == E:
            e = dexp + nsel + 2 * k + base_exp
            acc[e] = acc[e] + prod if e in acc else prod
            return
        x, y = w[i]
        # exclude edge i
        if not y.is_zero():
            rec(i + 1, prod * y.num, dexp + y.dexp, nsel, k)
        if x.is_zero():
            return
        a, b = find(edges[i].u), find(edges[i].v)
        if a == b:
            rec(i + 1, prod * x.num, dexp + x.dexp, nsel + 1, k)
            return
        if size[a] > size[b]:
            a, b = b, a
        parent[a] = b
        size[b] += size[a]
        rec(i + 1, prod * x.num, dexp + x.dexp, nsel + 1, k - 1)
        parent[a] = a
        size[b] -= size[a]

    rec(0, ONE, 0, 0, G.vcount)
    acc = {e: p for e, p in acc.items() if not p.is_zero()}
    return _collect(acc)


def w_delcon(G: ColoredGraph, w: Weights) -> DRingElem:
    """Deletion-contraction recursion with bridge/loop rules.

    Memoization keys on the exact labelled edge multiset, so a cache hit is
    always the same graph with the same weights.
    """
    if len(w) != G.ecount:
        raise ValueError("one weight pair per edge required")
    d = DRingElem(ONE, 1)
    memo: dict = {}

    def key(n, edges):
        return n, tuple(sorted((min(a, b), max(a, b), i) for a, b, i in edges))

    def connected(n, edges, a, b, skip):
        adj: dict[int, list[int]] = {}
        for j, (p, q, _) in enumerate(edges):
            if j == skip:
                continue
            adj.setdefault(p, []).append(q)
            adj.setdefault(q, []).append(p)
        seen = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            if x == b:
                return True
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def contract(n, edges, j):
        a, b, _ = edges[j]
        lo, hi = min(a, b), max(a, b)

        def rl(x):
            if x == hi:
                x = lo
            return x - 1 if x > hi else x

        return n - 1, [(rl(p), rl(q), i) for k, (p, q, i) in enumerate(edges) if k != j]

    def rec(n, edges):
        if not edges:
            return d ** (n - 1)
        k = key(n, edges)
        if k in memo:
            return memo[k]
        a, b, i = edges[0]
        x, y = w[i]
        rest = edges[1:]
        if a == b:
            val = (x * d + y) * rec(n, rest)
        elif not connected(n, edges, a, b, 0):
            val = (x + d * y) * rec(*contract(n, edges, 0))
        else:
            val = x * rec(*contract(n, edges, 0)) + y * rec(n, rest)
        memo[k] = val
        return val

    start = [(e.u, e.v, i) for i, e in enumerate(G.edges)]
    return rec(G.vcount, start).normalized()


def w_spantree(G: ColoredGraph, w: Weights) -> DRingElem:
    """Spanning-tree expansion over activity classes; ``G`` must be connected."""
    if len(w) != G.ecount:
        raise ValueError("one weight pair per edge required")
    if components(G) != 1:
        raise GraphError("not connected")
    d = DRingElem(ONE, 1)
    total = DRingElem(ZERO)
    for F in spanning_trees(G):
        term = DR_ONE
        for (x, y), tag in zip(w, activities(G, F)):
            if tag == "IA":
                term = term * (x + d * y)
            elif tag == "EA":
                term = term * (d * x + y)
            elif tag == "II":
                term = term * x
            else:
                term = term * y
        total = total + term
    return total.normalized()


FORMULATIONS = {"subset": w_subset, "delcon": w_delcon, "spantree": w_spantree}


def kauffman_bracket(G: ColoredGraph, formulation: str = "subset") -> LaurentPoly:
    """Kauffman bracket of the diagram encoded by template graph ``G``."""
    if formulation == "oracle":
        return bracket_oracle(G)
    try:
        fn = FORMULATIONS[formulation]
    except KeyError:
        raise ValueError(f"unknown formulation {formulation!r}") from None
    W = fn(G, edge_weights(G))
    try:
        return W.to_laurent()
    except NotDivisibleError:
        raise NormalizationError("normalization failure: bracket is not d-free") from None


def bracket_oracle(G: ColoredGraph) -> LaurentPoly:
    """Kauffman state sum on the unit expansion of ``G``.

    Each unit edge of sign ``s`` has weights ``x = A^s``, ``y = A^-s``; each
    state contributes ``d^(|S| + 2k(S) - V - 1)`` loops.  States are
    tallied by (A-exponent, d-power) before any polynomial is formed.
    """
    H = expand_to_unit(G)
    n = H.vcount
    ends = [(e.u, e.v) for e in H.edges]
    signs = [e.t for e in H.edges]
    E = len(ends)
    tally: dict[tuple[int, int], int] = {}
    for S in range(1 << E):
        comp = list(range(n))

        def root(x):
            while comp[x] != x:
                x = comp[x]
            return x

        aexp = 0
        size = 0
        k = n
        for i in range(E):
            if S >> i & 1:
                size += 1
                aexp += signs[i]
                ra, rb = root(ends[i][0]), root(ends[i][1])
                if ra != rb:
                    comp[ra] = rb
                    k -= 1
            else:
                aexp -= signs[i]
        key = (aexp, size + 2 * k - n - 1)
        tally[key] = tally.get(key, 0) + 1
    by_power: dict[int, dict[int, int]] = {}
    for (aexp, p), c in tally.items():
        by_power.setdefault(p, {})[aexp] = c
    total = ZERO
    for p, terms in by_power.items():
        total = total + LaurentPoly(terms) * D ** p
    return total


def jones(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    """Jones polynomial in ``q = t^(1/4)``: ``(-A^3)^-w <D>`` at ``A = q^-1``.

    Exponent ``k`` of the result stands for ``t^(k/4)``.
    """
    sign = -1 if writhe % 2 else 1
    return (bracket * LaurentPoly({-3 * writhe: sign})).mirror()

