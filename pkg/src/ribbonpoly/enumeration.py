"""Isomorph-free generation of small ribbon graphs and invariant-collision search.

Connected maps with ``m`` edges are grown from connected maps with ``m - 1``
edges, either by inserting a new edge between two corners or by attaching a
pendant edge with a fresh vertex.  Every connected map with an edge has a
non-bridge edge or a pendant edge whose removal keeps it connected, so the
growth reaches every class.  Duplicates are removed by canonical form.
Disconnected maps are multisets of connected components.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .laurent import LaurentPoly, format_poly
from .rgraph import (
    MapError,
    RibbonGraph,
    canonical_form,
    counts,
    disjoint_union,
    from_canonical,
    from_cycles,
    num_components,
    unoriented_form,
)

MAX_EDGES = 6


class TooLarge(MapError):
    pass


def rotation_systems(num_vertices: int, edges: Sequence[tuple[int, int]]) -> Iterator[RibbonGraph]:
    """Every rotation system of an abstract multigraph.

    Edge ``i`` gets half-edge ``2i`` at its first endpoint and ``2i+1`` at its
    second.  Each vertex of degree ``d`` contributes ``(d-1)!`` cyclic orders;
    vertices of degree 0 become isolated vertices.
    """
    if len(edges) > MAX_EDGES:
        raise TooLarge(f"{len(edges)} edges exceeds {MAX_EDGES}")
    incident: list[list[int]] = [[] for _ in range(num_vertices)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(2 * i)
        incident[v].append(2 * i + 1)
    per_vertex = []
    for hs in incident:
        if len(hs) <= 1:
            per_vertex.append([list(hs)])
        else:
            per_vertex.append([[hs[0], *rest] for rest in itertools.permutations(hs[1:])])
    for choice in itertools.product(*per_vertex):
        yield from_cycles(choice)


def _insert_after(sigma: list[int], h: int, new: int) -> None:
    sigma[new] = sigma[h]
    sigma[h] = new


def _extensions(G: RibbonGraph) -> Iterator[RibbonGraph]:
    n = G.num_half_edges
    p, q = n, n + 1
    if n == 0:
        # from a lone vertex: a loop or a pendant edge
        yield RibbonGraph((1, 0))
        yield RibbonGraph((0, 1))
        return
    for h in range(n):
        base = list(G.sigma) + [p, q]
        _insert_after(base, h, p)
        pendant = list(base)
        yield RibbonGraph(tuple(pendant))
        for h2 in range(n + 1):
            s = list(base)
            _insert_after(s, h2, q)
            yield RibbonGraph(tuple(s))


@lru_cache(maxsize=None)
def _connected_forms(m: int) -> tuple[tuple, ...]:
    if m > MAX_EDGES:
        raise TooLarge(f"{m} edges exceeds {MAX_EDGES}")
    if m == 0:
        return (canonical_form(RibbonGraph((), 1)),)
    found = set()
    for form in _connected_forms(m - 1):
        for H in _extensions(from_canonical(form)):
            found.add(canonical_form(H))
    return tuple(sorted(found))


def connected_maps(m: int) -> list[RibbonGraph]:
    """Isomorphism classes of connected maps with exactly ``m`` edges, in canonical order."""
    return [from_canonical(f) for f in _connected_forms(m)]


def _component_pool(max_edges: int, max_vertices: int) -> list[tuple[tuple, int, int]]:
    pool = []
    for m in range(max_edges + 1):
        for f in _connected_forms(m):
            v = counts(from_canonical(f))[0]
            if v <= max_vertices:
                pool.append((f, m, v))
    return pool


def _disconnected_forms(max_edges: int, max_vertices: int) -> list[tuple]:
    pool = _component_pool(max_edges, max_vertices)
    out = set()

    def extend(start, chosen, edges, verts):
        if chosen:
            G = disjoint_union(*(from_canonical(pool[i][0]) for i in chosen))
            out.add(canonical_form(G))
        for i in range(start, len(pool)):
            _, m, v = pool[i]
            if edges + m <= max_edges and verts + v <= max_vertices:
                extend(i, chosen + [i], edges + m, verts + v)

    extend(0, [], 0, 0)
    return sorted(out, key=lambda f: (from_canonical(f).num_edges, f))


def all_maps(
    max_edges: int,
    *,
    min_edges: int = 0,
    connected: bool = True,
    one_vertex: bool = False,
    one_face: bool = False,
    max_vertices: int | None = None,
) -> list[RibbonGraph]:
    """Isomorph-free list of maps with ``min_edges..max_edges`` edges.

    Disconnected maps need ``max_vertices`` since isolated vertices are
    otherwise unbounded.  Output is ordered by edge count, then canonical form.
    """
    if max_edges > MAX_EDGES:
        raise TooLarge(f"{max_edges} edges exceeds {MAX_EDGES}")
    if connected:
        forms = [f for m in range(min_edges, max_edges + 1) for f in _connected_forms(m)]
    else:
        if max_vertices is None:
            raise ValueError("disconnected enumeration needs max_vertices")
        forms = _disconnected_forms(max_edges, max_vertices)
    out = []
    for f in forms:
        G = from_canonical(f)
        if G.num_edges < min_edges:
            continue
        v, _, fc, _ = counts(G)
        if one_vertex and v != 1:
            continue
        if one_face and fc != 1:
            continue
        if max_vertices is not None and v > max_vertices:
            continue
        out.append(G)
    return out


# -- collision search ----------------------------------------------------------


def _invariant(name: str) -> Callable[[RibbonGraph], LaurentPoly]:
    from .polys import INVARIANTS

    if name not in INVARIANTS:
        raise ValueError(f"unknown invariant {name!r}; choose from {sorted(INVARIANTS)}")
    return INVARIANTS[name]


def _evaluate(args) -> str:
    name, G = args
    return format_poly(_invariant(name)(G))


def evaluate_pool(name: str, pool: Sequence[RibbonGraph], workers: int = 1) -> list[str]:
    """Canonical text of an invariant on every map, in pool order."""
    jobs = [(name, G) for G in pool]
    if workers > 1 and len(pool) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [_evaluate(j) for j in jobs]


@dataclass(frozen=True)
class Witness:
    first: RibbonGraph
    second: RibbonGraph
    equal_value: str
    distinct_values: tuple[str, str] | None

    def to_json(self) -> dict:
        out = {
            "first": {"canonical": _form_json(self.first), "sigma": list(self.first.sigma),
                      "isolated": self.first.isolated},
            "second": {"canonical": _form_json(self.second), "sigma": list(self.second.sigma),
                       "isolated": self.second.isolated},
            "equal_value": self.equal_value,
        }
        if self.distinct_values is not None:
            out["distinct_values"] = list(self.distinct_values)
        return out


def _form_json(G: RibbonGraph):
    iso, codes = canonical_form(G)
    return {"isolated": iso, "components": [list(c) for c in codes]}


def dedupe(pool: Iterable[RibbonGraph], up_to_mirror: bool = True) -> list[RibbonGraph]:
    key = unoriented_form if up_to_mirror else canonical_form
    seen = {}
    for G in pool:
        k = key(G)
        if k not in seen:
            seen[k] = from_canonical(k)
    return [seen[k] for k in sorted(seen)]


def search_collisions(
    pool: Iterable[RibbonGraph],
    inv_equal: str,
    inv_distinct: str | None,
    *,
    up_to_mirror: bool = True,
    workers: int = 1,
) -> list[Witness]:
    """Non-isomorphic pairs agreeing on ``inv_equal`` and differing on ``inv_distinct``.

    With ``inv_distinct=None`` any two non-isomorphic maps qualify.  Mirror
    images are identified when ``up_to_mirror`` is set, since every invariant
    here is unchanged by reversing orientation.
    """
    maps = dedupe(pool, up_to_mirror)
    eq_vals = evaluate_pool(inv_equal, maps, workers)
    groups: dict[str, list[int]] = {}
    for i, val in enumerate(eq_vals):
        groups.setdefault(val, []).append(i)
    candidates = [idx for idx in groups.values() if len(idx) > 1]
    dist_vals: dict[int, str] = {}
    if inv_distinct is not None:
        involved = sorted({i for idx in candidates for i in idx})
        vals = evaluate_pool(inv_distinct, [maps[i] for i in involved], workers)
        dist_vals = dict(zip(involved, vals))
    out = []
    for val in sorted(groups):
        for i, j in itertools.combinations(groups[val], 2):
            if inv_distinct is None:
                out.append(Witness(maps[i], maps[j], val, None))
            elif dist_vals[i] != dist_vals[j]:
                out.append(Witness(maps[i], maps[j], val, (dist_vals[i], dist_vals[j])))
    return out


def search_krushkal_equal(pool: Iterable[RibbonGraph], *, workers: int = 1) -> list[Witness]:
    return search_collisions(pool, "krushkal", None, workers=workers)


def is_connected(G: RibbonGraph) -> bool:
    return num_components(G) == 1
