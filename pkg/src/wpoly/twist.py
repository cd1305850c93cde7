"""Twist polynomials of colored graphs and the p-statistic.

The twist polynomial ``P(A, x_1..x_k)`` is ``d^k`` times the W-polynomial
with per-edge symbolic weights (chain: ``x=1, y=(x_i-1)/d``; sheaf:
``x=(x_i-1)/d, y=1``).  Substituting ``x_i = (-A^-4)^r_i`` recovers the
bracket of every diagram in the family, up to ``A^sum(r) / d^k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .engine import NormalizationError, kauffman_bracket
from .graph import Color, ColoredGraph, GraphError, components, spanning_trees
from .laurent import D, LaurentPoly, NotDivisibleError, ZERO, exact_div, l2_norm_sq

__all__ = [
    "MultiPoly",
    "twist_polynomial",
    "specialize_twist",
    "p_statistic",
    "norm_bound_scan",
    "NormScan",
]


class MultiPoly:
    """Polynomial in ``x_1..x_k`` with Laurent-in-``A`` coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], LaurentPoly] | None = None):
        self.nvars = nvars
        self.terms = {}
        for key, c in (terms or {}).items():
            if len(key) != nvars:
                raise ValueError("exponent vector has wrong length")
            if not c.is_zero():
                self.terms[tuple(key)] = c

    def add_term(self, key: tuple[int, ...], c: LaurentPoly) -> None:
        v = self.terms.get(key, ZERO) + c
        if v.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = v

    def evaluate(self, values: Sequence[LaurentPoly]) -> LaurentPoly:
        """Substitute a Laurent polynomial for every ``x_i``."""
        if len(values) != self.nvars:
            raise ValueError("one value per variable required")
        total = ZERO
        for key, c in self.terms.items():
            term = c
            for v, k in zip(values, key):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for key in sorted(self.terms):
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}"
                for i, k in enumerate(key) if k
            ) or "1"
            lines.append(f"[{mono}] {self.terms[key].to_str()}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_str()


def twist_polynomial(G: ColoredGraph) -> MultiPoly:
    """Twist polynomial of a connected colored graph.

    A subset ``S`` sets ``sigma_i = 1`` for sheafs in ``S`` and chains outside
    it; its term is ``prod_{sigma_i=1} (x_i - 1)`` times
    ``d^(E - |sigma| + |S| + 2k(S) - V - 1)``.
    """
    if components(G) != 1:
        raise GraphError("not connected")
    E, V = G.ecount, G.vcount
    P = MultiPoly(E)
    d_powers: dict[int, LaurentPoly] = {}
    for S in range(1 << E):
        sigma = [
            1 if ((S >> i & 1) == (e.color is Color.SHEAF)) else 0
            for i, e in enumerate(G.edges)
        ]
        nsig = sum(sigma)
        dexp = E - nsig + bin(S).count("1") + 2 * components(G, S) - V - 1
        if dexp < 0:
            raise NormalizationError("normalization failure: twist coefficient not d-free")
        if dexp not in d_powers:
            d_powers[dexp] = D ** dexp
        coeff = d_powers[dexp]
        # expand prod (x_i - 1) over sigma_i = 1
        active = [i for i in range(E) if sigma[i]]
        for pick in product((0, 1), repeat=len(active)):
            key = [0] * E
            for i, p in zip(active, pick):
                key[i] = p
            sign = -1 if (len(active) - sum(pick)) % 2 else 1
            P.add_term(tuple(key), coeff if sign > 0 else -coeff)
    return P


def _wiring_lengths(G: ColoredGraph, n: Sequence[int]) -> list[int]:
    # sheaf lengths flip sign on the wiring-diagram side
    return [t if e.color is Color.CHAIN else -t for e, t in zip(G.edges, n)]


def specialize_twist(P: MultiPoly, G: ColoredGraph, n: Sequence[int],
                     check: bool = False) -> LaurentPoly:
    """Bracket of ``G`` with lengths ``n`` recovered from its twist polynomial."""
    if len(n) != P.nvars:
        raise ValueError("one length per variable required")
    if any(t == 0 for t in n):
        raise GraphError("length 0 is not allowed")
    r = _wiring_lengths(G, n)
    values = [LaurentPoly({-4 * ri: -1 if ri % 2 else 1}) for ri in r]
    num = P.evaluate(values).shift(sum(r))
    try:
        out = exact_div(num, D ** P.nvars)
    except NotDivisibleError:
        raise NormalizationError("normalization failure: d^k does not divide") from None
    if check:
        direct = kauffman_bracket(G.with_lengths(n))
        if direct != out:
            raise NormalizationError(
                f"twist specialization {out} disagrees with bracket {direct}")
    return out


def p_statistic(G: ColoredGraph) -> tuple[int, int]:
    """Max over spanning trees of (#sheafs in F + #chains outside F).

    Returns ``(p, witness_tree_bitmask)``.
    """
    best, witness = -1, 0
    for F in spanning_trees(G):
        pF = sum(
            1 for i, e in enumerate(G.edges)
            if ((F >> i & 1) == 1) == (e.color is Color.SHEAF)
        )
        if pF > best:
            best, witness = pF, F
    return best, witness


@dataclass
class NormScan:
    p: int
    norms: dict[tuple[int, ...], int]

    @property
    def max_norm_sq(self) -> int:
        return max(self.norms.values())

    def max_within(self, bound: int) -> int:
        """Largest squared norm over samples with every ``|t_i| <= bound``."""
        vals = [v for t, v in self.norms.items() if max(map(abs, t)) <= bound]
        return max(vals) if vals else 0


def norm_bound_scan(G: ColoredGraph, samples: Iterable[Sequence[int]],
                    p: int | None = None) -> NormScan:
    """Squared coefficient norm of ``d^p <D_t>`` for every sample ``t``."""
    if p is None:
        p, _ = p_statistic(G)
    dp = D ** p
    norms = {}
    for t in samples:
        t = tuple(int(x) for x in t)
        norms[t] = l2_norm_sq(dp * kauffman_bracket(G.with_lengths(t)))
    return NormScan(p, norms)
