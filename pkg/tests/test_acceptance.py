"""Acceptance criteria, one test each, with a time limit per criterion.

Run under pytest (a summary line per criterion is printed at the end) or
directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import torus_bouquet, theta_torus  # noqa: E402
from frozen import (  # noqa: E402
    BOUQUET_BR,
    BOUQUET_KRUSHKAL,
    BOUQUET_LV,
    DELETION_PATTERN,
    NOTE_KRUSHKAL_PAIR,
    NOTE_LV,
    NOTE_SHARED_KRUSHKAL,
    SUBSETS,
    THETA_BR,
    THETA_DELETED_EMBEDDED,
    THETA_DELETED_SPHERE_BR,
    THETA_DELETED_SPHERE_KRUSHKAL,
    THETA_DELETED_SPHERE_LV,
    THETA_KRUSHKAL,
    THETA_LV,
    THETA_TABLE,
)
from ribbonpoly.embed import EmbeddedGraph, delete_embedded, parameters  # noqa: E402
from ribbonpoly.enumeration import all_maps, search_collisions, search_krushkal_equal  # noqa: E402
from ribbonpoly.laurent import (  # noqa: E402
    BR_VARS,
    KRUSHKAL_VARS,
    LV_VARS,
    LaurentPoly,
    coefficient_sum,
    evaluate,
    format_poly,
    parse,
    substitute,
)
from ribbonpoly.matroid import (  # noqa: E402
    bases,
    bond_matroid,
    check_axioms,
    cycle_matroid,
    dual_matroid,
    perspective_violation,
)
from ribbonpoly.polys import (  # noqa: E402
    VERIFIERS,
    bollobas_riordan,
    deletion_contraction_report,
    graph_perspective,
    krushkal,
    las_vergnas,
    tutte_polynomial,
)
from ribbonpoly.rgraph import (  # noqa: E402
    boundary_components,
    counts,
    dual,
    isomorphic,
    restrict,
)

ROOT = Path(__file__).resolve().parent.parent
SWEEP_EDGES = 4
SWEEP_SIZE = 135
RESULTS: dict[str, tuple[bool, float, float, str]] = {}


def same(got: LaurentPoly, expected: str, vars) -> bool:
    return format_poly(got) == format_poly(parse(expected, vars))


def check_1():
    got = format_poly(las_vergnas(torus_bouquet()))
    assert got == format_poly(parse(BOUQUET_LV, LV_VARS)), got
    return f"LV = {got}"


def check_2():
    got = krushkal(torus_bouquet())
    assert same(got, BOUQUET_KRUSHKAL, KRUSHKAL_VARS), got
    return f"P = {format_poly(got)}"


def check_3():
    G = theta_torus()
    E = EmbeddedGraph.cellular_from(G)
    P = graph_perspective(G)
    for col, H in enumerate(SUBSETS):
        v, e, _, c = counts(restrict(G, H))
        row = {
            **parameters(E, H),
            "r_M": P.M.rank(H),
            "r_Mp": P.Mp.rank(H),
            "n_M": P.M.nullity(H),
            "n": e - v + c,
            "bc": boundary_components(G, H),
        }
        for key, values in THETA_TABLE.items():
            assert row[key] == values[col], (key, H, row[key], values[col])
    assert same(krushkal(G), THETA_KRUSHKAL, KRUSHKAL_VARS)
    assert same(las_vergnas(G), THETA_LV, LV_VARS)
    assert same(bollobas_riordan(G), THETA_BR, BR_VARS)
    return f"8 subsets x {len(THETA_TABLE)} rows and three totals"


def check_4():
    rep = deletion_contraction_report(theta_torus(), 2)
    p = rep.polys
    expected = [
        ("P_contract", BOUQUET_KRUSHKAL, KRUSHKAL_VARS),
        ("BR_contract", BOUQUET_BR, BR_VARS),
        ("P_delete_same_surface", THETA_DELETED_EMBEDDED, KRUSHKAL_VARS),
        ("P_delete_recapped", THETA_DELETED_SPHERE_KRUSHKAL, KRUSHKAL_VARS),
        ("LV_delete_recapped", THETA_DELETED_SPHERE_LV, LV_VARS),
        ("BR_delete", THETA_DELETED_SPHERE_BR, BR_VARS),
    ]
    for key, text, vars in expected:
        assert same(parse(p[key], vars), text, vars), (key, p[key])
    assert rep.pattern() == DELETION_PATTERN, rep.pattern()
    return "pattern " + "/".join("hold" if b else "fail" for b in rep.pattern())


def _sweep(names):
    pool = all_maps(SWEEP_EDGES)
    assert len(pool) == SWEEP_SIZE, len(pool)
    failures = [(G, n, VERIFIERS[n](G).detail) for G in pool for n in names if not VERIFIERS[n](G)]
    assert not failures, failures[:3]
    return len(pool)


def check_5():
    return f"main theorem holds on all {_sweep(['main_theorem'])} maps"


def check_6():
    names = [n for n in VERIFIERS if n != "main_theorem"]
    return f"{len(names)} identity families hold on all {_sweep(names)} maps"


def check_7():
    checked = pairs = 0
    for G in all_maps(SWEEP_EDGES):
        Mp = cycle_matroid(G)
        M = bond_matroid(dual(G))
        for N in (Mp, M, dual_matroid(Mp), cycle_matroid(dual(G))):
            assert check_axioms(N) is None, (G, check_axioms(N))
            assert sorted(bases(dual_matroid(N))) == sorted(N.full ^ B for B in bases(N)), G
            checked += 1
        assert perspective_violation(M, Mp) is None, G
        pairs += 3 ** M.n
    return f"{checked} matroids, {pairs} nested pairs"


def check_8a():
    pool = all_maps(4, min_edges=4, one_vertex=True, one_face=True)
    target = {format_poly(parse(t, KRUSHKAL_VARS)) for t in NOTE_KRUSHKAL_PAIR}
    lv = format_poly(parse(NOTE_LV, LV_VARS))
    for w in search_collisions(pool, "las_vergnas", "krushkal"):
        if w.equal_value == lv and set(w.distinct_values) == target:
            assert not isomorphic(w.first, w.second)
            return f"pair found in pool of {len(pool)}: LV = {lv}"
    raise AssertionError("no pair with the stated LV and Krushkal values")


def check_8b():
    pool = all_maps(4, connected=False, max_vertices=3)
    target = format_poly(parse(NOTE_SHARED_KRUSHKAL, KRUSHKAL_VARS))
    hits = [w for w in search_krushkal_equal(pool) if w.equal_value == target]
    assert hits, (
        f"no pair shares {target} among {len(pool)} maps with <= 4 edges and <= 3 vertices "
        "(the X*B^2 term cannot occur with 4 edges)"
    )
    return f"pair found sharing {target}"


def _laurent_instance(rng: random.Random):
    def poly():
        terms = {}
        for _ in range(rng.randint(0, 4)):
            exps = tuple(rng.randint(-2, 2) for _ in LV_VARS)
            terms[exps] = terms.get(exps, 0) + rng.randint(-3, 3)
        return LaurentPoly(LV_VARS, terms)

    return poly(), poly(), poly()


UNIT_SUBST = {"x": parse("-y*z", LV_VARS), "y": parse("x*z^-1", LV_VARS), "z": parse("z^2", LV_VARS)}


def _cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "ribbonpoly", *args], capture_output=True, check=True, cwd=ROOT
    ).stdout


def check_9():
    rng = random.Random(90210)
    for _ in range(10_000):
        p, q, r = _laurent_instance(rng)
        assert p + q == q + p and p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert substitute(p * q, UNIT_SUBST, LV_VARS) == (
            substitute(p, UNIT_SUBST, LV_VARS) * substitute(q, UNIT_SUBST, LV_VARS)
        )
    expansions = 0
    for G in all_maps(SWEEP_EDGES):
        total = 1 << G.num_edges
        assert coefficient_sum(krushkal(G)) == total
        assert evaluate(bollobas_riordan(G), {"X": 2, "Y": 1, "Z": 1}) == total
        assert evaluate(las_vergnas(G), {"x": 2, "y": 2, "z": 1}) == total
        assert evaluate(tutte_polynomial(G), {"x": 2, "y": 2}) == total
        expansions += 4
        E = EmbeddedGraph.cellular_from(G)
        for e in range(G.num_edges):
            assert coefficient_sum(krushkal(delete_embedded(E, e))) == total // 2
            expansions += 1
    commands = [
        ["verify", "--sweep", str(SWEEP_EDGES), "--json"],
        ["search", "--edges", "4", "--disconnected", "--max-vertices", "3", "--equal", "krushkal", "--json"],
        ["compute", "data/theta_torus.rg", "--poly", "lv"],
    ]
    for cmd in commands:
        outputs = {_cli(*cmd, *(["--workers", str(w)] if cmd[0] != "compute" else []))
                   for w in (1, 4) for _ in range(3)}
        assert len(outputs) == 1, cmd
    return f"10^4 Laurent instances, {expansions} expansions, {len(commands)} commands byte-identical"


CRITERIA = [
    ("1", "torus bouquet Las Vergnas", check_1, 1.0),
    ("2", "torus bouquet Krushkal", check_2, 1.0),
    ("3", "theta graph table and totals", check_3, 1.0),
    ("4", "edit semantics and relation pattern", check_4, 1.0),
    ("5", "main theorem sweep", check_5, 60.0),
    ("6", "remaining identities sweep", check_6, 120.0),
    ("7", "matroid axioms and perspectives", check_7, 60.0),
    ("8a", "LV-equal, Krushkal-distinct pair", check_8a, 120.0),
    ("8b", "Krushkal-equal pair with the stated value", check_8b, 120.0),
    ("9", "property suites and determinism", check_9, float("inf")),
]


def run_criterion(cid, title, fn, limit):
    start = time.perf_counter()
    try:
        detail, ok = fn(), True
    except AssertionError as exc:
        detail, ok = (str(exc) or "assertion failed").splitlines()[0], False
    elapsed = time.perf_counter() - start
    if ok and elapsed >= limit:
        ok, detail = False, f"took {elapsed:.2f}s, limit {limit:.0f}s"
    RESULTS[cid] = (ok, elapsed, limit, f"{title}: {detail}")
    return ok, detail


def summary_lines():
    lines = []
    for cid, *_ in CRITERIA:
        if cid in RESULTS:
            ok, elapsed, limit, text = RESULTS[cid]
            lines.append(f"criterion {cid:>2} {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {text}")
    return lines


@pytest.mark.parametrize("cid, title, fn, limit", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(cid, title, fn, limit):
    ok, detail = run_criterion(cid, title, fn, limit)
    assert ok, detail


if __name__ == "__main__":
    for c in CRITERIA:
        run_criterion(*c)
    print("\n".join(summary_lines()))
    sys.exit(0 if all(r[0] for r in RESULTS.values()) else 1)
