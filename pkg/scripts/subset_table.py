"""Print the per-subset parameter table and the three polynomials for a map file."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from ribbonpoly.embed import EmbeddedGraph, parameters
from ribbonpoly.formats import read_any
from ribbonpoly.laurent import format_poly
from ribbonpoly.polys import bollobas_riordan, graph_perspective, krushkal, las_vergnas
from ribbonpoly.rgraph import boundary_components, counts, edges_of, restrict

DEFAULT = Path(__file__).resolve().parent.parent / "data" / "theta_torus.rg"


@dataclass
class TableConfig:
    path: Path = DEFAULT


def run(cfg: TableConfig) -> str:
    nm = read_any(cfg.path.read_text())
    G = nm.carrier
    E = EmbeddedGraph.cellular_from(G)
    P = graph_perspective(G)
    cols = ["c", "k", "s", "s_perp", "r_M", "r_Mp", "n_M", "n", "bc"]
    lines = ["H".ljust(10) + "".join(c.rjust(7) for c in cols)]
    for H in range(1 << G.num_edges):
        v, e, _, c = counts(restrict(G, H))
        row = {**parameters(E, H), "r_M": P.M.rank(H), "r_Mp": P.Mp.rank(H),
               "n_M": P.M.nullity(H), "n": e - v + c, "bc": boundary_components(G, H)}
        name = "{" + ",".join(nm.names[i] for i in edges_of(H)) + "}"
        lines.append(name.ljust(10) + "".join(str(row[c]).rjust(7) for c in cols))
    lines.append(f"P  = {format_poly(krushkal(G))}")
    lines.append(f"LV = {format_poly(las_vergnas(G))}")
    lines.append(f"BR = {format_poly(bollobas_riordan(G))}")
    return "\n".join(lines)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("path", nargs="?", type=Path, default=DEFAULT)
    print(run(TableConfig(ap.parse_args().path)))
