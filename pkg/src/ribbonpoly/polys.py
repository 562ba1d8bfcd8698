"""Polynomial invariants of graphs on surfaces and the identities relating them.

The Las Vergnas polynomial is computed only from rank tables (bond matroid of
the dual graph over cycle matroid of the graph).  The Krushkal polynomial is
computed only from surface data (orbit counts of restricted maps).  The two
routes share no code, so agreement between them is a real check.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .embed import (
    EmbeddedGraph,
    c_sub,
    delete_embedded,
    k_param,
    k_param_via_2_5,
    recap,
    s_param,
    s_perp,
)
from .laurent import (
    BR_VARS,
    KRUSHKAL_VARS,
    LV_VARS,
    LaurentPoly,
    format_poly,
    rename,
    substitute,
)
from .matroid import (
    Perspective,
    Verdict,
    bond_matroid,
    cycle_matroid,
    make_perspective,
    popcount,
    tutte,
    tutte_perspective,
    verify_tutte_recovery,
)
from .rgraph import (
    RibbonGraph,
    contract,
    counts,
    delete_ribbon,
    dual,
    genus,
    is_bridge,
    is_loop,
    restrict,
)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _as_embedded(E: EmbeddedGraph | RibbonGraph) -> EmbeddedGraph:
    if isinstance(E, RibbonGraph):
        return EmbeddedGraph.cellular_from(E)
    return E


def krushkal(E: EmbeddedGraph | RibbonGraph) -> LaurentPoly:
    """Subset expansion in ``(X, Y, A, B)`` over the marked edges."""
    E = _as_embedded(E)
    cG = c_sub(E, E.marked)
    tally = Counter()
    for H in _submasks(E.marked):
        s, sp = s_param(E, H), s_perp(E, H)
        if s % 2 or sp % 2:
            raise AssertionError(f"odd s or s_perp for H={H:#x}: {s}, {sp}")
        tally[(c_sub(E, H) - cG, k_param(E, H), s // 2, sp // 2)] += 1
    return LaurentPoly(KRUSHKAL_VARS, tally)


def graph_perspective(G: RibbonGraph) -> Perspective:
    """Bond matroid of the dual graph over the cycle matroid of ``G``."""
    return make_perspective(bond_matroid(dual(G)), cycle_matroid(G))


def las_vergnas(G: RibbonGraph) -> LaurentPoly:
    return tutte_perspective(graph_perspective(G))


def tutte_polynomial(G: RibbonGraph | EmbeddedGraph) -> LaurentPoly:
    """Classical Tutte polynomial of the underlying (marked) graph."""
    if isinstance(G, EmbeddedGraph):
        G = restrict(G.carrier, G.marked)
    return tutte(cycle_matroid(G))


def bollobas_riordan(G: RibbonGraph) -> LaurentPoly:
    cG = counts(G)[3]
    tally = Counter()
    for H in range(1 << G.num_edges):
        R = restrict(G, H)
        v, e, bc, c = counts(R)
        n = e - v + c
        z = c - bc + n
        if z != 2 * genus(R):
            raise AssertionError(f"Z exponent {z} != 2g for H={H:#x}")
        tally[(c - cG, n, z)] += 1
    # exponents above are of (X-1), Y, Z
    p = LaurentPoly(BR_VARS, tally)
    X, Y, Z = (LaurentPoly.var(BR_VARS, v) for v in BR_VARS)
    return substitute(p, {"X": X - 1, "Y": Y, "Z": Z}, BR_VARS)


INVARIANTS = {
    "krushkal": krushkal,
    "las_vergnas": las_vergnas,
    "bollobas_riordan": bollobas_riordan,
}


# -- identities -----------------------------------------------------------------


def lv_from_krushkal(G: RibbonGraph) -> LaurentPoly:
    """``z^g P(x-1, y-1, 1/z, z)``; must come out Laurent-free."""
    x, y, z = (LaurentPoly.var(LV_VARS, v) for v in LV_VARS)
    P = krushkal(G)
    rhs = substitute(P, {"X": x - 1, "Y": y - 1, "A": z ** -1, "B": z}, LV_VARS)
    rhs = rhs * z ** genus(G)
    if not rhs.is_laurent_free():
        raise AssertionError(f"negative z power after substitution: {rhs}")
    return rhs


def verify_main_theorem(G: RibbonGraph) -> Verdict:
    lhs = las_vergnas(G)
    rhs = lv_from_krushkal(G)
    if lhs == rhs:
        return Verdict(True)
    return Verdict(False, f"LV = {lhs}, z^g P(...) = {rhs}")


def br_from_krushkal(G: RibbonGraph) -> LaurentPoly:
    """``Y^g P(X-1, Y, Y Z^2, 1/Y)``; must come out Laurent-free."""
    X, Y, Z = (LaurentPoly.var(BR_VARS, v) for v in BR_VARS)
    P = krushkal(G)
    rhs = substitute(P, {"X": X - 1, "Y": Y, "A": Y * Z * Z, "B": Y ** -1}, BR_VARS)
    rhs = rhs * Y ** genus(G)
    if not rhs.is_laurent_free():
        raise AssertionError(f"negative Y power after substitution: {rhs}")
    return rhs


def verify_br_reduction(G: RibbonGraph) -> Verdict:
    lhs = bollobas_riordan(G)
    rhs = br_from_krushkal(G)
    if lhs == rhs:
        return Verdict(True)
    return Verdict(False, f"BR = {lhs}, Y^g P(...) = {rhs}")


def verify_lv_duality(G: RibbonGraph) -> Verdict:
    x, y, z = (LaurentPoly.var(LV_VARS, v) for v in LV_VARS)
    lhs = las_vergnas(dual(G))
    rhs = substitute(las_vergnas(G), {"x": y, "y": x, "z": z ** -1}, LV_VARS) * z ** (2 * genus(G))
    if lhs == rhs:
        return Verdict(True)
    return Verdict(False, f"LV(G*) = {lhs}, z^2g LV(y,x,1/z) = {rhs}")


def verify_krushkal_duality(G: RibbonGraph) -> Verdict:
    lhs = krushkal(dual(G))
    rhs = rename(krushkal(G), {"X": "Y", "Y": "X", "A": "B", "B": "A"}, KRUSHKAL_VARS)
    if lhs == rhs:
        return Verdict(True)
    return Verdict(False, f"P(G*) = {lhs}, P(Y,X,B,A) = {rhs}")


def verify_graph_tutte_recovery(G: RibbonGraph) -> Verdict:
    return verify_tutte_recovery(graph_perspective(G))


def verify_lemmas(G: RibbonGraph) -> Verdict:
    """Subset-level agreement between surface parameters and matroid ranks.

    For every H: the two routes to k agree, k equals the nullity in the bond
    matroid of the dual, and g + s/2 - s_perp/2 = r_M(H) - r_M'(H); also
    2g = r_M(E) - r_M'(E).
    """
    E = EmbeddedGraph.cellular_from(G)
    P = graph_perspective(G)
    rM, rP = P.M.ranks, P.Mp.ranks
    g = genus(G)
    full = G.all_edges
    if 2 * g != rM[full] - rP[full]:
        return Verdict(False, f"2g = {2 * g} but r_M(E) - r_M'(E) = {rM[full] - rP[full]}")
    for H in range(1 << G.num_edges):
        k = k_param(E, H)
        k2 = k_param_via_2_5(E, H)
        if k != k2:
            return Verdict(False, f"k routes disagree at H={H:#x}: {k} vs {k2}")
        nM = popcount(H) - rM[H]
        if k != nM:
            return Verdict(False, f"k({H:#x}) = {k} but n_M = {nM}")
        s, sp = s_param(E, H), s_perp(E, H)
        if 2 * g + s - sp != 2 * (rM[H] - rP[H]):
            return Verdict(False, f"rank difference identity fails at H={H:#x}")
    return Verdict(True)


VERIFIERS = {
    "main_theorem": verify_main_theorem,
    "br_reduction": verify_br_reduction,
    "lv_duality": verify_lv_duality,
    "krushkal_duality": verify_krushkal_duality,
    "tutte_recovery": verify_graph_tutte_recovery,
    "lemmas": verify_lemmas,
}


def verify_all(G: RibbonGraph, names=None) -> dict[str, Verdict]:
    names = list(VERIFIERS) if names is None else names
    return {name: VERIFIERS[name](G) for name in names}


# -- deletion and contraction ---------------------------------------------------------


@dataclass
class DeletionContractionReport:
    edge: int
    ordinary: bool
    krushkal_same_surface: bool
    br_ribbon: bool
    krushkal_recapped: bool
    lv_recapped: bool
    polys: dict[str, str] = field(default_factory=dict)

    def pattern(self) -> tuple[bool, bool, bool, bool]:
        return (self.krushkal_same_surface, self.br_ribbon, self.krushkal_recapped, self.lv_recapped)


def deletion_contraction_report(G: RibbonGraph, e: int) -> DeletionContractionReport:
    """Test the four additive relations for edge ``e``.

    Deletion is done twice: keeping the surface (embedded deletion) and
    recapping the ribbon neighbourhood.  The additive forms are only expected
    for an edge that is neither a loop nor a bridge; otherwise the report is
    informational.
    """
    E = EmbeddedGraph.cellular_from(G)
    G_con = contract(G, e)
    E_del = delete_embedded(E, e)
    E_rec = recap(E_del)
    G_del = delete_ribbon(G, e)

    P, P_del, P_con = krushkal(E), krushkal(E_del), krushkal(G_con)
    P_rec = krushkal(E_rec)
    BR, BR_del, BR_con = bollobas_riordan(G), bollobas_riordan(G_del), bollobas_riordan(G_con)
    LV, LV_del, LV_con = las_vergnas(G), las_vergnas(E_rec.carrier), las_vergnas(G_con)

    polys = {
        "P": P, "P_delete_same_surface": P_del, "P_delete_recapped": P_rec, "P_contract": P_con,
        "BR": BR, "BR_delete": BR_del, "BR_contract": BR_con,
        "LV": LV, "LV_delete_recapped": LV_del, "LV_contract": LV_con,
    }
    return DeletionContractionReport(
        edge=e,
        ordinary=not is_loop(G, e) and not is_bridge(G, e),
        krushkal_same_surface=P == P_del + P_con,
        br_ribbon=BR == BR_del + BR_con,
        krushkal_recapped=P == P_rec + P_con,
        lv_recapped=LV == LV_del + LV_con,
        polys={k: format_poly(v) for k, v in polys.items()},
    )
