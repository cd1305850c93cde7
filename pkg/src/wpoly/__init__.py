"""Exact W-polynomials of colored graphs, Kauffman brackets of the link
families they encode, and Mahler-measure diagnostics for those families."""

from .laurent import (
    A, D, ONE, ZERO, DRingElem, LaurentPoly, NonInvertibleError, NotDivisibleError,
    eval_complex, exact_div, l2_norm_sq, parse_laurent,
)
from .graph import (
    Color, ColoredGraph, Edge, GraphError, activities, components, cyclomatic,
    disjoint_union, dump_graph, expand_to_unit, glue, glue_n, kirchhoff_count,
    load_graph, parse_graph, spanning_trees,
)
from .engine import (
    NormalizationError, bracket_oracle, jones, kauffman_bracket, theorem1_weights,
    w_delcon, w_spantree, w_subset,
)
from .twist import MultiPoly, norm_bound_scan, p_statistic, specialize_twist, twist_polynomial
from .family import (
    FamilyForm, builtin_family, family_bracket, family_closed_form, matrix_power_check,
    state_sums, tangle_coeffs,
)
from .zeros import (
    Certificate, EquimodularPoint, RootSet, divergence_certificate, equimodular_points,
    euclidean_mahler, mahler, mahler_trend, roots, v_poly,
)

__version__ = "0.1.0"

__all__ = [
    "A",
    "D",
    "ONE",
    "ZERO",
    "DRingElem",
    "LaurentPoly",
    "NonInvertibleError",
    "NotDivisibleError",
    "eval_complex",
    "exact_div",
    "l2_norm_sq",
    "parse_laurent",
    "Color",
    "ColoredGraph",
    "Edge",
    "GraphError",
    "activities",
    "components",
    "cyclomatic",
    "disjoint_union",
    "dump_graph",
    "expand_to_unit",
    "glue",
    "glue_n",
    "kirchhoff_count",
    "load_graph",
    "parse_graph",
    "spanning_trees",
    "NormalizationError",
    "bracket_oracle",
    "jones",
    "kauffman_bracket",
    "theorem1_weights",
    "w_delcon",
    "w_spantree",
    "w_subset",
    "FamilyForm",
    "builtin_family",
    "family_bracket",
    "family_closed_form",
    "matrix_power_check",
    "state_sums",
    "tangle_coeffs",
    "Certificate",
    "EquimodularPoint",
    "RootSet",
    "divergence_certificate",
    "equimodular_points",
    "euclidean_mahler",
    "mahler",
    "mahler_trend",
    "roots",
    "v_poly",
    "MultiPoly",
    "norm_bound_scan",
    "p_statistic",
    "specialize_twist",
    "twist_polynomial",
]
