"""Command-line front end.

Exit codes: 0 ok, 1 an identity failed, 2 unreadable input, 3 input that is
readable but unsuitable (non-cellular graph for LV/BR, broken matroid, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import embed, formats, polys, rgraph
from .embed import EmbeddedGraph
from .enumeration import all_maps, search_collisions
from .laurent import LaurentError, format_poly, to_json
from .matroid import MatroidError, make_perspective, tutte, verify_tutte_recovery
from .rgraph import MapError, RibbonGraph

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_SEMANTIC = 0, 1, 2, 3

POLY_CHOICES = {"krushkal": "krushkal", "lv": "las_vergnas", "br": "bollobas_riordan", "tutte": "tutte"}
INV_CHOICES = ["krushkal", "las_vergnas", "bollobas_riordan", "lv", "br"]


class CliError(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def _read(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc}") from exc
    try:
        return formats.read_any(text)
    except formats.FormatError as exc:
        raise CliError(EXIT_INPUT, f"{path}: {exc}") from exc
    except (MatroidError, MapError) as exc:
        raise CliError(EXIT_SEMANTIC, f"{path}: {exc}") from exc


def _read_map(path: str) -> formats.NamedMap:
    obj = _read(path)
    if not isinstance(obj, formats.NamedMap):
        raise CliError(EXIT_SEMANTIC, f"{path} holds matroids, not a ribbon graph")
    return obj


def _cellular(nm: formats.NamedMap, what: str) -> RibbonGraph:
    g = nm.graph
    if isinstance(g, EmbeddedGraph):
        if not g.cellular:
            raise CliError(EXIT_SEMANTIC, f"{what} needs a cellular embedding; recap the graph first")
        return g.carrier
    return g


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


# -- compute / info ----------------------------------------------------------


def cmd_compute(args) -> int:
    nm = _read_map(args.file)
    kind = POLY_CHOICES[args.poly]
    if kind == "krushkal":
        p = polys.krushkal(nm.graph)
    elif kind == "tutte":
        p = polys.tutte_polynomial(nm.graph)
    else:
        G = _cellular(nm, args.poly)
        p = polys.las_vergnas(G) if kind == "las_vergnas" else polys.bollobas_riordan(G)
    _emit(args, format_poly(p), {"poly": kind, "value": to_json(p)})
    return EXIT_OK


def cmd_info(args) -> int:
    nm = _read_map(args.file)
    G = nm.carrier
    v, e, f, c = rgraph.counts(G)
    data = {"vertices": v, "edges": e, "faces": f, "components": c, "genus": rgraph.genus(G)}
    if isinstance(nm.graph, EmbeddedGraph):
        data["marked"] = [nm.names[i] for i in rgraph.edges_of(nm.graph.marked)]
        data["cellular"] = nm.graph.cellular
    text = " ".join(f"{k}={v}" for k, v in data.items() if k != "marked")
    _emit(args, text, data)
    return EXIT_OK


def cmd_table(args) -> int:
    """Per-subset parameters of a cellular map."""
    nm = _read_map(args.file)
    G = _cellular(nm, "table")
    E = EmbeddedGraph.cellular_from(G)
    P = polys.graph_perspective(G)
    rows = []
    for H in range(1 << G.num_edges):
        R = rgraph.restrict(G, H)
        v, e, bc, c = rgraph.counts(R)
        rows.append({
            "H": [nm.names[i] for i in rgraph.edges_of(H)],
            **embed.parameters(E, H),
            "r_M": P.M.ranks[H],
            "r_Mp": P.Mp.ranks[H],
            "n_M": P.M.nullity(H),
            "n": e - v + c,
            "bc": bc,
        })
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        cols = ["c", "k", "s", "s_perp", "r_M", "r_Mp", "n_M", "n", "bc"]
        print("H\t" + "\t".join(cols))
        for row in rows:
            print("{" + ",".join(row["H"]) + "}\t" + "\t".join(str(row[c]) for c in cols))
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _verify_one(G: RibbonGraph) -> dict:
    return {name: bool(v) for name, v in polys.verify_all(G).items()}


def _sweep(max_edges: int, workers: int) -> list[tuple[RibbonGraph, dict]]:
    pool = all_maps(max_edges)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_verify_one, pool, chunksize=max(1, len(pool) // (4 * workers))))
    else:
        results = [_verify_one(G) for G in pool]
    return list(zip(pool, results))


def _verify_matroids(args, blocks) -> int:
    if len(blocks) == 1:
        M = blocks[0]
        data = {"kind": "matroid", "n": M.n, "rank": M.rank(), "axioms": True,
                "tutte": format_poly(tutte(M))}
        _emit(args, f"matroid n={M.n} rank={M.rank()}: axioms hold", data)
        return EXIT_OK
    if len(blocks) != 2:
        raise CliError(EXIT_SEMANTIC, "expected one matroid or a perspective (two blocks)")
    try:
        P = make_perspective(*blocks)
    except MatroidError as exc:
        raise CliError(EXIT_SEMANTIC, f"NotAPerspective: {exc}") from exc
    verdict = verify_tutte_recovery(P)
    data = {"kind": "perspective", "n": P.n, "tutte_recovery": verdict.ok, "detail": verdict.detail}
    _emit(args, f"perspective n={P.n}: tutte_recovery {'pass' if verdict else 'FAIL'}", data)
    return EXIT_OK if verdict else EXIT_VIOLATION


def cmd_verify(args) -> int:
    if args.sweep is not None:
        rows = _sweep(args.sweep, args.workers)
        names = list(polys.VERIFIERS)
        totals = {n: sum(r[n] for _, r in rows) for n in names}
        ok = all(all(r.values()) for _, r in rows)
        data = {
            "max_edges": args.sweep,
            "maps_checked": len(rows),
            "totals": totals,
            "all_pass": ok,
            "results": [
                {"sigma": list(G.sigma), "isolated": G.isolated, "genus": rgraph.genus(G), "identities": r}
                for G, r in rows
            ],
        }
        lines = [f"checked {len(rows)} connected maps with <= {args.sweep} edges"]
        lines += [f"{n}: {totals[n]}/{len(rows)}" for n in names]
        lines.append("all identities hold" if ok else "IDENTITY VIOLATION")
        _emit(args, "\n".join(lines), data)
        return EXIT_OK if ok else EXIT_VIOLATION
    if args.file is None:
        raise CliError(EXIT_INPUT, "verify needs a file or --sweep")
    obj = _read(args.file)
    if isinstance(obj, list):
        return _verify_matroids(args, obj)
    G = _cellular(obj, "verify")
    try:
        verdicts = polys.verify_all(G)
    except MatroidError as exc:
        raise CliError(EXIT_SEMANTIC, str(exc)) from exc
    ok = all(verdicts.values())
    data = {"identities": {n: {"ok": v.ok, "detail": v.detail} for n, v in verdicts.items()}, "all_pass": ok}
    text = "\n".join(f"{n}: {'pass' if v else 'FAIL ' + v.detail}" for n, v in verdicts.items())
    _emit(args, text, data)
    return EXIT_OK if ok else EXIT_VIOLATION


# -- edit ---------------------------------------------------------------------


def cmd_edit(args) -> int:
    nm = _read_map(args.file)

    def index(name):
        try:
            return nm.edge_index(name)
        except KeyError as exc:
            raise CliError(EXIT_SEMANTIC, str(exc.args[0])) from exc

    if args.delete_embedded is not None:
        E = nm.graph if isinstance(nm.graph, EmbeddedGraph) else EmbeddedGraph.cellular_from(nm.graph)
        out = formats.NamedMap(embed.delete_embedded(E, index(args.delete_embedded)), nm.names)
    elif args.recap:
        if not isinstance(nm.graph, EmbeddedGraph):
            out = nm
        else:
            keep = rgraph.edges_of(nm.graph.marked)
            out = formats.NamedMap(embed.recap(nm.graph).carrier, tuple(nm.names[i] for i in keep))
    else:
        G = _cellular(nm, "ribbon edits")
        name = args.delete_ribbon if args.delete_ribbon is not None else args.contract
        e = index(name)
        H = rgraph.delete_ribbon(G, e) if args.delete_ribbon is not None else rgraph.contract(G, e)
        out = formats.NamedMap(H, nm.names[:e] + nm.names[e + 1:])
    text = json.dumps(formats.map_to_json(out), indent=2) + "\n" if args.json else formats.format_rg(out)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- search -------------------------------------------------------------------


def _inv_name(name: str | None) -> str | None:
    return {"lv": "las_vergnas", "br": "bollobas_riordan", "none": None}.get(name, name)


def cmd_search(args) -> int:
    pool = all_maps(
        args.edges,
        min_edges=args.min_edges if args.min_edges is not None else 0,
        connected=not args.disconnected,
        one_vertex=args.one_vertex,
        one_face=args.one_face,
        max_vertices=args.max_vertices,
    )
    found = search_collisions(pool, _inv_name(args.equal), _inv_name(args.distinct), workers=args.workers)
    data = {"pool_size": len(pool), "equal": _inv_name(args.equal), "distinct": _inv_name(args.distinct),
            "witnesses": [w.to_json() for w in found]}
    lines = [f"pool of {len(pool)} maps, {len(found)} witness pairs"]
    for w in found:
        extra = f"  [{w.distinct_values[0]} | {w.distinct_values[1]}]" if w.distinct_values else ""
        lines.append(f"{w.first!r} ~ {w.second!r}: {w.equal_value}{extra}")
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ribbonpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = common(sub.add_parser("compute", help="print a polynomial invariant"))
    p.add_argument("file")
    p.add_argument("--poly", choices=sorted(POLY_CHOICES), required=True)
    p.set_defaults(func=cmd_compute)

    p = common(sub.add_parser("info", help="vertex/edge/face counts and genus"))
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = common(sub.add_parser("table", help="per-subset parameters"))
    p.add_argument("file")
    p.set_defaults(func=cmd_table)

    p = common(sub.add_parser("verify", help="check the polynomial identities"))
    p.add_argument("file", nargs="?")
    p.add_argument("--sweep", type=int, metavar="MAX_EDGES")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("edit", help="delete or contract an edge"))
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--delete-embedded", metavar="EDGE", help="unmark, keeping the surface")
    group.add_argument("--delete-ribbon", metavar="EDGE", help="delete from the ribbon graph")
    group.add_argument("--contract", metavar="EDGE")
    group.add_argument("--recap", action="store_true", help="cap the ribbon neighbourhood of the marked edges")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_edit)

    p = common(sub.add_parser("search", help="look for invariant collisions"))
    p.add_argument("--edges", type=int, required=True, help="maximum edge count")
    p.add_argument("--min-edges", type=int)
    p.add_argument("--one-vertex", action="store_true")
    p.add_argument("--one-face", action="store_true")
    p.add_argument("--disconnected", action="store_true", help="allow disconnected maps")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--equal", choices=INV_CHOICES, required=True)
    p.add_argument("--distinct", choices=INV_CHOICES + ["none"], default="none")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"ribbonpoly: {exc}", file=sys.stderr)
        return exc.code
    except (MapError, MatroidError) as exc:
        print(f"ribbonpoly: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (formats.FormatError, LaurentError) as exc:
        print(f"ribbonpoly: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"ribbonpoly: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
