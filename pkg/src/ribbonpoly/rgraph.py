"""Orientable ribbon graphs as combinatorial maps.

Half-edges are ``0 .. 2m-1``; edge ``i`` owns half-edges ``2i`` and ``2i+1``,
so the edge involution is ``h ^ 1`` and is never stored.  ``sigma[h]`` is the
next half-edge counterclockwise around the vertex of ``h``.  Faces are the
cycles of ``phi = sigma o alpha``, i.e. ``phi(h) = sigma[h ^ 1]``.

Vertices without half-edges cannot be encoded in ``sigma``; they are carried
as a separate ``isolated`` count.  Each one is a sphere component with one
vertex and one face.

Edge subsets are plain int bitmasks over edge indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

EdgeSubset = int


class MapError(ValueError):
    pass


class NotAPermutation(MapError):
    pass


class AlphaNotInvolution(MapError):
    pass


class AlphaHasFixedPoint(MapError):
    pass


class OddHalfEdgeCount(MapError):
    pass


class EdgeOutOfRange(MapError, IndexError):
    pass


def _is_permutation(p: Sequence[int]) -> bool:
    n = len(p)
    seen = [False] * n
    for x in p:
        if not isinstance(x, int) or not 0 <= x < n or seen[x]:
            return False
        seen[x] = True
    return True


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles of ``perm``, each starting at its least element, sorted by it."""
    n = len(perm)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        h = start
        while not seen[h]:
            seen[h] = True
            cyc.append(h)
            h = perm[h]
        out.append(tuple(cyc))
    return out


def _num_cycles(perm: Sequence[int]) -> int:
    n = len(perm)
    seen = bytearray(n)
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        h = start
        while not seen[h]:
            seen[h] = 1
            h = perm[h]
    return count


@dataclass(frozen=True)
class RibbonGraph:
    sigma: tuple[int, ...]
    isolated: int = 0

    def __post_init__(self):
        sigma = tuple(self.sigma)
        object.__setattr__(self, "sigma", sigma)
        if len(sigma) % 2:
            raise OddHalfEdgeCount(f"{len(sigma)} half-edges")
        if not _is_permutation(sigma):
            raise NotAPermutation(f"sigma={sigma} is not a permutation")
        if self.isolated < 0:
            raise MapError("negative isolated-vertex count")

    @property
    def num_half_edges(self) -> int:
        return len(self.sigma)

    @property
    def num_edges(self) -> int:
        return len(self.sigma) // 2

    @property
    def all_edges(self) -> EdgeSubset:
        return (1 << self.num_edges) - 1

    @property
    def phi(self) -> tuple[int, ...]:
        s = self.sigma
        return tuple(s[h ^ 1] for h in range(len(s)))

    def vertices(self) -> list[tuple[int, ...]]:
        """Rotations of the non-isolated vertices."""
        return cycles(self.sigma)

    def faces(self) -> list[tuple[int, ...]]:
        return cycles(self.phi)

    def vertex_of(self) -> list[int]:
        """Vertex index of every half-edge; isolated vertices come after."""
        where = [0] * len(self.sigma)
        for i, cyc in enumerate(self.vertices()):
            for h in cyc:
                where[h] = i
        return where

    def __repr__(self) -> str:
        rot = "".join("(" + " ".join(map(str, c)) + ")" for c in self.vertices())
        iso = f", isolated={self.isolated}" if self.isolated else ""
        return f"RibbonGraph({rot or '()'}{iso})"


def from_cycles(rotations: Iterable[Sequence[int]], isolated: int = 0) -> RibbonGraph:
    """Build a map from vertex rotations given as lists of half-edges.

    Empty rotations count as isolated vertices.
    """
    rotations = [list(r) for r in rotations]
    isolated += sum(1 for r in rotations if not r)
    n = sum(len(r) for r in rotations)
    sigma = [-1] * n
    for r in rotations:
        for a, b in zip(r, r[1:] + r[:1]):
            if not 0 <= a < n or sigma[a] != -1:
                raise NotAPermutation(f"half-edge {a} repeated or out of range")
            sigma[a] = b
    return RibbonGraph(tuple(sigma), isolated)


def validate(sigma: Sequence[int], alpha: Sequence[int], isolated: int = 0) -> RibbonGraph:
    """Check a raw permutation pair and relabel so that alpha pairs ``2i, 2i+1``."""
    sigma = list(sigma)
    alpha = list(alpha)
    if len(sigma) != len(alpha):
        raise MapError(f"sigma has {len(sigma)} entries, alpha has {len(alpha)}")
    if len(sigma) % 2:
        raise OddHalfEdgeCount(f"{len(sigma)} half-edges")
    if not _is_permutation(sigma):
        raise NotAPermutation(f"sigma={sigma} is not a permutation")
    if not _is_permutation(alpha):
        raise NotAPermutation(f"alpha={alpha} is not a permutation")
    for h, a in enumerate(alpha):
        if a == h:
            raise AlphaHasFixedPoint(f"alpha fixes half-edge {h}")
        if alpha[a] != h:
            raise AlphaNotInvolution(f"alpha({alpha[a]}) != {h}")
    new = [-1] * len(sigma)
    k = 0
    for h in range(len(sigma)):
        if new[h] == -1:
            new[h] = k
            new[alpha[h]] = k + 1
            k += 2
    out = [0] * len(sigma)
    for h, s in enumerate(sigma):
        out[new[h]] = new[s]
    return RibbonGraph(tuple(out), isolated)


def _component_labels(G: RibbonGraph) -> tuple[list[int], int]:
    """Component index per half-edge and the number of non-isolated components."""
    n = G.num_half_edges
    comp = [-1] * n
    sigma = G.sigma
    count = 0
    for start in range(n):
        if comp[start] != -1:
            continue
        stack = [start]
        comp[start] = count
        while stack:
            h = stack.pop()
            for nb in (sigma[h], h ^ 1):
                if comp[nb] == -1:
                    comp[nb] = count
                    stack.append(nb)
        count += 1
    return comp, count


def num_components(G: RibbonGraph) -> int:
    return _component_labels(G)[1] + G.isolated


@lru_cache(maxsize=65536)
def counts(G: RibbonGraph) -> tuple[int, int, int, int]:
    """(vertices, edges, faces, components); isolated vertices are included."""
    v = _num_cycles(G.sigma) + G.isolated
    f = _num_cycles(G.phi) + G.isolated
    return v, G.num_edges, f, num_components(G)


def genus(G: RibbonGraph) -> int:
    v, e, f, c = counts(G)
    chi = v - e + f
    if chi % 2:
        raise AssertionError(f"odd Euler characteristic {chi} for {G!r}")
    g = c - chi // 2
    if g < 0:
        raise AssertionError(f"negative genus for {G!r}")
    return g


@lru_cache(maxsize=65536)
def dual(G: RibbonGraph) -> RibbonGraph:
    """Surface dual.  Edge indices are shared with ``G``."""
    return RibbonGraph(G.phi, G.isolated)


def mirror(G: RibbonGraph) -> RibbonGraph:
    """Orientation reversal: every rotation read clockwise."""
    inv = [0] * G.num_half_edges
    for h, s in enumerate(G.sigma):
        inv[s] = h
    return RibbonGraph(tuple(inv), G.isolated)


def check_subset(G: RibbonGraph, H: EdgeSubset) -> EdgeSubset:
    if H < 0 or H >> G.num_edges:
        raise EdgeOutOfRange(f"edge subset {H:#x} exceeds {G.num_edges} edges")
    return H


def subset_from_edges(edges: Iterable[int], m: int) -> EdgeSubset:
    H = 0
    for e in edges:
        if not 0 <= e < m:
            raise EdgeOutOfRange(f"edge {e} not in 0..{m - 1}")
        H |= 1 << e
    return H


def edges_of(H: EdgeSubset) -> list[int]:
    out = []
    i = 0
    while H:
        if H & 1:
            out.append(i)
        H >>= 1
        i += 1
    return out


@lru_cache(maxsize=65536)
def restrict(G: RibbonGraph, H: EdgeSubset) -> RibbonGraph:
    """Spanning ribbon subgraph on ``H``.

    All vertices are kept; kept edges are renumbered in increasing order.
    """
    check_subset(G, H)
    if H == G.all_edges:
        return G
    kept = edges_of(H)
    relabel = {}
    for j, i in enumerate(kept):
        relabel[2 * i] = 2 * j
        relabel[2 * i + 1] = 2 * j + 1
    sigma = [0] * (2 * len(kept))
    isolated = G.isolated
    for cyc in G.vertices():
        inside = [h for h in cyc if h in relabel]
        if not inside:
            isolated += 1
            continue
        for a, b in zip(inside, inside[1:] + inside[:1]):
            sigma[relabel[a]] = relabel[b]
    return RibbonGraph(tuple(sigma), isolated)


def boundary_components(G: RibbonGraph, H: EdgeSubset) -> int:
    return counts(restrict(G, H))[2]


def delete_ribbon(G: RibbonGraph, e: int) -> RibbonGraph:
    """Delete edge ``e``; later edges shift down by one.  Genus may drop."""
    if not 0 <= e < G.num_edges:
        raise EdgeOutOfRange(f"edge {e} not in 0..{G.num_edges - 1}")
    return restrict(G, G.all_edges & ~(1 << e))


def contract(G: RibbonGraph, e: int) -> RibbonGraph:
    """Contract edge ``e`` (any edge, loops included) as dual-delete-dual."""
    if not 0 <= e < G.num_edges:
        raise EdgeOutOfRange(f"edge {e} not in 0..{G.num_edges - 1}")
    return dual(delete_ribbon(dual(G), e))


def is_loop(G: RibbonGraph, e: int) -> bool:
    where = G.vertex_of()
    return where[2 * e] == where[2 * e + 1]


def is_bridge(G: RibbonGraph, e: int) -> bool:
    return num_components(delete_ribbon(G, e)) > num_components(G)


Multigraph = tuple[int, tuple[tuple[int, int], ...]]


def underlying_graph(G: RibbonGraph) -> Multigraph:
    """Abstract multigraph: (vertex count, endpoint pair per edge)."""
    where = G.vertex_of()
    nv = counts(G)[0]
    return nv, tuple((where[2 * i], where[2 * i + 1]) for i in range(G.num_edges))


# -- canonical form -------------------------------------------------------------


def _rooted_code(sigma: Sequence[int], root: int) -> tuple[int, ...]:
    # breadth-first relabelling from root; the partner of a newly met half-edge
    # always takes the next odd label so the pairing stays canonical
    label = {root: 0, root ^ 1: 1}
    order = [root, root ^ 1]
    i = 0
    while i < len(order):
        nxt = sigma[order[i]]
        if nxt not in label:
            label[nxt] = len(order)
            label[nxt ^ 1] = len(order) + 1
            order.extend((nxt, nxt ^ 1))
        i += 1
    return tuple(label[sigma[h]] for h in order)


def rooted_codes(G: RibbonGraph) -> list[list[tuple[int, ...]]]:
    """All rooted codes of every connected component (one per half-edge)."""
    comp, nc = _component_labels(G)
    members: list[list[int]] = [[] for _ in range(nc)]
    for h, c in enumerate(comp):
        members[c].append(h)
    return [[_rooted_code(G.sigma, h) for h in hs] for hs in members]


@lru_cache(maxsize=65536)
def canonical_form(G: RibbonGraph) -> tuple:
    """Isomorphism-invariant label sequence.

    Invariant under every half-edge relabelling that conjugates both sigma and
    the edge pairing (orientation-preserving map isomorphism).
    """
    codes = sorted((min(c) for c in rooted_codes(G)), key=lambda c: (len(c), c))
    return (G.isolated, tuple(codes))


def from_canonical(form: tuple) -> RibbonGraph:
    isolated, codes = form
    sigma: list[int] = []
    for code in codes:
        off = len(sigma)
        sigma.extend(off + s for s in code)
    return RibbonGraph(tuple(sigma), isolated)


def canonical_graph(G: RibbonGraph) -> RibbonGraph:
    return from_canonical(canonical_form(G))


def isomorphic(G1: RibbonGraph, G2: RibbonGraph) -> bool:
    return canonical_form(G1) == canonical_form(G2)


def unoriented_form(G: RibbonGraph) -> tuple:
    """Canonical form up to isomorphism and orientation reversal."""
    return min(canonical_form(G), canonical_form(mirror(G)))


def automorphism_count(G: RibbonGraph) -> int:
    """Order of the orientation-preserving automorphism group (connected G)."""
    comps = rooted_codes(G)
    if len(comps) != 1 or G.isolated:
        raise MapError("automorphism_count needs a connected map with edges")
    codes = comps[0]
    best = min(codes)
    return sum(1 for c in codes if c == best)


def disjoint_union(*graphs: RibbonGraph) -> RibbonGraph:
    sigma: list[int] = []
    isolated = 0
    for G in graphs:
        off = len(sigma)
        sigma.extend(off + s for s in G.sigma)
        isolated += G.isolated
    return RibbonGraph(tuple(sigma), isolated)
