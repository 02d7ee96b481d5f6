"""Chromatic quasisymmetric functions of natural unit interval orders.

Exact Schur and elementary expansions from P-tableaux, closed forms for
several families, a brute-force coloring oracle, and positivity checkers.
"""

__version__ = "0.1.0"

from .orders import NUIOrder, classify, inc_graph, parse_m, reflect, validate
from .qpoly import TPoly, q_factorial, q_int
from .symfun import e_expansion, s_to_e
from .tableaux import enumerate_ptableaux, schur_expansion

__all__ = [
    "NUIOrder",
    "TPoly",
    "classify",
    "e_expansion",
    "enumerate_ptableaux",
    "inc_graph",
    "parse_m",
    "q_factorial",
    "q_int",
    "reflect",
    "s_to_e",
    "schur_expansion",
    "validate",
]
