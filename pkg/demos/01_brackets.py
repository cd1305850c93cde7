"""
Kauffman brackets from colored graphs
=====================================

A template graph draws a link: a *sheaf* of length t is t parallel twists
between two vertices, a *chain* of length t is t twists in series.  The
bracket comes out of a W-polynomial subset sum, and three independent
formulations have to agree.
"""

from wpoly import ColoredGraph, Color, Edge, kauffman_bracket, jones, parse_graph

# One sheaf of length 2 between two vertices is the Hopf link.
hopf = parse_graph('{"vertices": 2, "edges": [{"u": 0, "v": 1, "color": "sheaf", "t": 2}]}')
print("Hopf link      ", kauffman_bracket(hopf))

# Length 3 gives a trefoil (the left-handed one, writhe -3).
trefoil = ColoredGraph(2, (Edge(0, 1, Color.SHEAF, 3),))
print("trefoil        ", kauffman_bracket(trefoil))
print("its Jones poly ", jones(kauffman_bracket(trefoil), -3), "  (exponent k means t^(k/4))")

# n isolated vertices are n disjoint circles: d^(n-1).
for n in range(1, 4):
    print(f"{n} circle(s)    ", kauffman_bracket(ColoredGraph(n)))

# Subset sum, deletion-contraction, spanning trees and the raw state sum
# on the unit expansion all give the same polynomial.
theta = ColoredGraph(2, (Edge(0, 1, Color.CHAIN, 2), Edge(0, 1, Color.SHEAF, -1),
                         Edge(0, 1, Color.CHAIN, -3)))
for formulation in ("subset", "delcon", "spantree", "oracle"):
    print(f"{formulation:9s}", kauffman_bracket(theta, formulation))
