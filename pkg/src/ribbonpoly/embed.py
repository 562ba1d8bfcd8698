"""Graphs on a closed orientable surface, cellular or not.

An :class:`EmbeddedGraph` is a cellular carrier map together with a set of
marked edges.  The graph is the spanning subgraph of the carrier on the marked
edges; the surface is the carrier's capped surface.  Unmarking an edge keeps
the surface, so the result need not be cellular.

The four subset parameters of the Krushkal expansion are all obtained by
orbit counting:

* ``c(H)``: components of the spanning subgraph on ``H``;
* ``s(H)``: twice the genus of the ribbon neighbourhood of ``H``;
* ``s_perp(H)``: twice the genus of the surface minus that neighbourhood,
  which is the ribbon neighbourhood of the dual edges not crossed by ``H``;
* ``k(H)``: components of that complement minus components of the surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .rgraph import (
    EdgeSubset,
    EdgeOutOfRange,
    MapError,
    RibbonGraph,
    counts,
    dual,
    edges_of,
    genus,
    restrict,
)


class HNotWithinMarked(MapError):
    pass


class EdgeNotMarked(MapError):
    pass


class NotCellular(MapError):
    pass


@dataclass(frozen=True)
class EmbeddedGraph:
    carrier: RibbonGraph
    marked: EdgeSubset

    def __post_init__(self):
        if self.marked < 0 or self.marked >> self.carrier.num_edges:
            raise EdgeOutOfRange(f"marked set {self.marked:#x} exceeds carrier edges")

    @classmethod
    def cellular_from(cls, G: RibbonGraph) -> EmbeddedGraph:
        return cls(G, G.all_edges)

    @property
    def cellular(self) -> bool:
        return self.marked == self.carrier.all_edges

    @property
    def num_edges(self) -> int:
        return bin(self.marked).count("1")

    @property
    def surface_genus(self) -> int:
        return genus(self.carrier)

    @cached_property
    def _carrier_dual(self) -> RibbonGraph:
        return dual(self.carrier)

    @cached_property
    def _endpoints(self) -> tuple[int, list[tuple[int, int]]]:
        where = self.carrier.vertex_of()
        nv = counts(self.carrier)[0]
        return nv, [(where[2 * i], where[2 * i + 1]) for i in range(self.carrier.num_edges)]

    def _check(self, H: EdgeSubset) -> None:
        if H & ~self.marked:
            raise HNotWithinMarked(f"subset {H:#x} not within marked edges {self.marked:#x}")

    def __repr__(self) -> str:
        return f"EmbeddedGraph({self.carrier!r}, marked={edges_of(self.marked)})"


def c_sub(E: EmbeddedGraph, H: EdgeSubset) -> int:
    """Components of the spanning subgraph on ``H`` (disjoint-set union)."""
    E._check(H)
    nv, ends = E._endpoints
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = nv
    for i in edges_of(H):
        a, b = find(ends[i][0]), find(ends[i][1])
        if a != b:
            parent[a] = b
            comps -= 1
    return comps


def s_param(E: EmbeddedGraph, H: EdgeSubset) -> int:
    E._check(H)
    return 2 * genus(restrict(E.carrier, H))


def _complement_map(E: EmbeddedGraph, H: EdgeSubset) -> RibbonGraph:
    # complement in the carrier's full edge set, not in `marked`
    return restrict(E._carrier_dual, E.carrier.all_edges & ~H)


def s_perp(E: EmbeddedGraph, H: EdgeSubset) -> int:
    E._check(H)
    return 2 * genus(_complement_map(E, H))


def k_param(E: EmbeddedGraph, H: EdgeSubset) -> int:
    """Dimension of the kernel of H_1(H) -> H_1(surface), by counting pieces."""
    E._check(H)
    return counts(_complement_map(E, H))[3] - counts(E.carrier)[3]


def k_param_via_2_5(E: EmbeddedGraph, H: EdgeSubset) -> int:
    """Second route to ``k``: graph nullity minus the genus correction."""
    if not E.cellular:
        raise NotCellular("the nullity formula needs a cellular embedding")
    E._check(H)
    nv = counts(E.carrier)[0]
    s, sp = s_param(E, H), s_perp(E, H)
    if s % 2 or sp % 2:
        raise AssertionError(f"odd s/s_perp ({s}, {sp})")
    nullity = bin(H).count("1") - nv + c_sub(E, H)
    return nullity - E.surface_genus - s // 2 + sp // 2


def parameters(E: EmbeddedGraph, H: EdgeSubset) -> dict[str, int]:
    return {
        "c": c_sub(E, H),
        "k": k_param(E, H),
        "s": s_param(E, H),
        "s_perp": s_perp(E, H),
    }


def delete_embedded(E: EmbeddedGraph, e: int) -> EmbeddedGraph:
    """Unmark ``e``; the surface stays the same."""
    if not 0 <= e < E.carrier.num_edges or not (E.marked >> e) & 1:
        raise EdgeNotMarked(f"edge {e} is not marked")
    return EmbeddedGraph(E.carrier, E.marked & ~(1 << e))


def remark(E: EmbeddedGraph, e: int) -> EmbeddedGraph:
    if not 0 <= e < E.carrier.num_edges:
        raise EdgeOutOfRange(f"edge {e} not in carrier")
    return EmbeddedGraph(E.carrier, E.marked | (1 << e))


def recap(E: EmbeddedGraph) -> EmbeddedGraph:
    """Replace the surface by the capped ribbon neighbourhood of the graph.

    Marked edges are renumbered in increasing order.
    """
    G = restrict(E.carrier, E.marked)
    return EmbeddedGraph(G, G.all_edges)
