"""
Twist polynomials and the p-statistic
=====================================

Replace every length by a variable: the twist polynomial P(A, x_1..x_k)
stores the bracket of every diagram with the same template.  The
p-statistic bounds how many factors of d can hide in it, which in turn
bounds coefficient norms over the whole family.
"""

import itertools

from wpoly import ColoredGraph, Color, Edge, kauffman_bracket
from wpoly.twist import norm_bound_scan, p_statistic, specialize_twist, twist_polynomial

# The pretzel template: a triangle of chains.  Lengths (a, b, c) draw the
# (a, b, c) pretzel link.
triangle = ColoredGraph(3, tuple(Edge(i, (i + 1) % 3, Color.CHAIN, 1) for i in range(3)))
P = twist_polynomial(triangle)
print("twist polynomial of the triangle, one line per monomial in x:")
print(P)

# Specializing x_i = (-A^-4)^n_i and dividing by d^k recovers the bracket.
for lengths in [(1, 1, 1), (2, -3, 3), (-1, 4, 2)]:
    via_p = specialize_twist(P, triangle, lengths)
    direct = kauffman_bracket(triangle.with_lengths(lengths))
    print(lengths, via_p == direct, via_p)

p, tree = p_statistic(triangle)
print("\np-statistic:", p, " witnessed by spanning tree", bin(tree))

# Multiplying by d^p keeps the squared coefficient norm bounded over the
# whole family; the maximum is already reached with tiny lengths.
vals = [s * k for k in range(1, 6) for s in (1, -1)]
scan = norm_bound_scan(triangle, itertools.product(vals, repeat=3))
for bound in range(1, 6):
    print(f"max ||d^p <D_t>||^2 over |t_i| <= {bound}:", scan.max_within(bound))
