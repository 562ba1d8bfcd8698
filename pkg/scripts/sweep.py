"""Check every identity on all connected maps up to a given size and tabulate by genus."""

import argparse
import json
import time
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass

from ribbonpoly.enumeration import all_maps
from ribbonpoly.polys import VERIFIERS
from ribbonpoly.rgraph import genus


@dataclass
class SweepConfig:
    max_edges: int = 4
    min_edges: int = 0


def run(cfg: SweepConfig) -> dict:
    start = time.perf_counter()
    pool = all_maps(cfg.max_edges, min_edges=cfg.min_edges)
    by_genus = Counter()
    passed = defaultdict(int)
    failures = []
    for G in pool:
        by_genus[genus(G)] += 1
        for name, check in VERIFIERS.items():
            verdict = check(G)
            if verdict:
                passed[name] += 1
            else:
                failures.append({"sigma": list(G.sigma), "identity": name, "detail": verdict.detail})
    return {
        "config": asdict(cfg),
        "maps": len(pool),
        "by_genus": dict(sorted(by_genus.items())),
        "passed": dict(passed),
        "failures": failures,
        "seconds": round(time.perf_counter() - start, 2),
    }


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-edges", type=int, default=SweepConfig.max_edges)
    ap.add_argument("--min-edges", type=int, default=SweepConfig.min_edges)
    args = ap.parse_args()
    print(json.dumps(run(SweepConfig(args.max_edges, args.min_edges)), indent=2))
