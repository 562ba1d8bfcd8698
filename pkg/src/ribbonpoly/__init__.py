"""Polynomial invariants of graphs on orientable surfaces."""

from .embed import EmbeddedGraph, delete_embedded, recap
from .laurent import LaurentPoly, format_poly, parse, substitute
from .matroid import RankOracle, bond_matroid, cycle_matroid, dual_matroid, make_perspective
from .polys import (
    bollobas_riordan,
    deletion_contraction_report,
    krushkal,
    las_vergnas,
    tutte_polynomial,
    verify_all,
)
from .rgraph import RibbonGraph, contract, delete_ribbon, dual, from_cycles, genus, validate

__all__ = [
    "EmbeddedGraph", "LaurentPoly", "RankOracle", "RibbonGraph",
    "bollobas_riordan", "bond_matroid", "contract", "cycle_matroid", "delete_embedded",
    "delete_ribbon", "deletion_contraction_report", "dual", "dual_matroid", "format_poly",
    "from_cycles", "genus", "krushkal", "las_vergnas", "make_perspective", "parse", "recap",
    "substitute", "tutte_polynomial", "validate", "verify_all",
]
