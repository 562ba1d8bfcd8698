"""Search small maps for pairs that one invariant cannot tell apart and another can."""

import argparse
import json
from collections import Counter
from dataclasses import asdict, dataclass

from ribbonpoly.enumeration import all_maps, search_collisions


@dataclass
class SearchConfig:
    max_edges: int = 4
    min_edges: int = 0
    one_vertex: bool = False
    one_face: bool = False
    connected: bool = True
    max_vertices: int | None = None
    equal: str = "las_vergnas"
    distinct: str | None = "krushkal"
    top: int = 10


def run(cfg: SearchConfig) -> dict:
    pool = all_maps(
        cfg.max_edges,
        min_edges=cfg.min_edges,
        connected=cfg.connected,
        one_vertex=cfg.one_vertex,
        one_face=cfg.one_face,
        max_vertices=cfg.max_vertices,
    )
    hits = search_collisions(pool, cfg.equal, cfg.distinct)
    shared = Counter(w.equal_value for w in hits)
    return {
        "config": asdict(cfg),
        "pool": len(pool),
        "pairs": len(hits),
        "most_shared": shared.most_common(cfg.top),
        "examples": [w.to_json() for w in hits[: cfg.top]],
    }


PRESETS = {
    # LV cannot separate two one-vertex one-face maps that Krushkal separates
    "lv-vs-krushkal": SearchConfig(4, 4, True, True),
    # Krushkal collisions among small, possibly disconnected maps
    "krushkal": SearchConfig(4, connected=False, max_vertices=3, equal="krushkal", distinct=None),
}


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("preset", choices=sorted(PRESETS))
    ap.add_argument("--top", type=int, default=10)
    args = ap.parse_args()
    cfg = PRESETS[args.preset]
    cfg.top = args.top
    print(json.dumps(run(cfg), indent=2))
