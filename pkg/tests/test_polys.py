import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frozen import (
    BOUQUET_BR,
    BOUQUET_KRUSHKAL,
    BOUQUET_LV,
    DELETION_PATTERN,
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
from oracles import subset_tutte
from ribbonpoly.embed import EmbeddedGraph
from ribbonpoly.laurent import (
    BR_VARS,
    KRUSHKAL_VARS,
    LV_VARS,
    coefficient_sum,
    evaluate,
    format_poly,
    parse,
)
from ribbonpoly.polys import (
    VERIFIERS,
    bollobas_riordan,
    br_from_krushkal,
    deletion_contraction_report,
    krushkal,
    las_vergnas,
    lv_from_krushkal,
    tutte_polynomial,
    verify_all,
)
from ribbonpoly.rgraph import (
    RibbonGraph,
    boundary_components,
    counts,
    delete_ribbon,
    disjoint_union,
    from_cycles,
    genus,
    restrict,
    underlying_graph,
)


def K(text):
    return parse(text, KRUSHKAL_VARS)


def L(text):
    return parse(text, LV_VARS)


def R(text):
    return parse(text, BR_VARS)


def random_maps(seed, count, max_edges=6):
    rng = random.Random(seed)
    for _ in range(count):
        m = rng.randint(0, max_edges)
        sigma = list(range(2 * m))
        rng.shuffle(sigma)
        yield RibbonGraph(tuple(sigma), rng.choice([0, 0, 0, 1]))


class TestBouquet:
    def test_las_vergnas(self, bouquet):
        assert format_poly(las_vergnas(bouquet)) == "z^2+2*z+1"
        assert las_vergnas(bouquet) == L(BOUQUET_LV)

    def test_krushkal(self, bouquet):
        assert format_poly(krushkal(bouquet)) == "A+B+2"
        assert krushkal(bouquet) == K(BOUQUET_KRUSHKAL)

    def test_bollobas_riordan(self, bouquet):
        assert bollobas_riordan(bouquet) == R(BOUQUET_BR)


class TestTheta:
    def test_totals(self, theta):
        assert krushkal(theta) == K(THETA_KRUSHKAL)
        assert las_vergnas(theta) == L(THETA_LV)
        assert bollobas_riordan(theta) == R(THETA_BR)

    def test_canonical_strings(self, theta):
        assert format_poly(krushkal(theta)) == "X*B+A+3*B+3"
        assert format_poly(las_vergnas(theta)) == "x*z^2+2*z^2+3*z+1"
        assert format_poly(bollobas_riordan(theta)) == "Y^2*Z^2+X+3*Y+2"

    @pytest.mark.parametrize("col, H", list(enumerate(SUBSETS)))
    def test_ribbon_columns(self, theta, col, H):
        sub = restrict(theta, H)
        v, e, f, c = counts(sub)
        assert c == THETA_TABLE["c"][col]
        assert e - v + c == THETA_TABLE["n"][col]
        assert boundary_components(theta, H) == THETA_TABLE["bc"][col]

    def test_edits(self, theta):
        rep = deletion_contraction_report(theta, 2)
        assert rep.pattern() == DELETION_PATTERN
        assert rep.ordinary
        p = rep.polys
        assert K(p["P_contract"]) == K(BOUQUET_KRUSHKAL)
        assert R(p["BR_contract"]) == R(BOUQUET_BR)
        assert L(p["LV_contract"]) == L(BOUQUET_LV)
        assert K(p["P_delete_same_surface"]) == K(THETA_DELETED_EMBEDDED)
        assert K(p["P_delete_recapped"]) == K(THETA_DELETED_SPHERE_KRUSHKAL)
        assert L(p["LV_delete_recapped"]) == L(THETA_DELETED_SPHERE_LV)
        assert R(p["BR_delete"]) == R(THETA_DELETED_SPHERE_BR)

    def test_every_edge_same_pattern(self, theta):
        for e in range(3):
            assert deletion_contraction_report(theta, e).pattern() == DELETION_PATTERN


class TestIdentitiesOnExamples:
    @pytest.mark.parametrize("name", list(VERIFIERS))
    def test_bouquet(self, bouquet, name):
        assert VERIFIERS[name](bouquet)

    @pytest.mark.parametrize("name", list(VERIFIERS))
    def test_theta(self, theta, name):
        assert VERIFIERS[name](theta)

    def test_lv_route(self, theta):
        assert lv_from_krushkal(theta) == las_vergnas(theta)
        assert br_from_krushkal(theta) == bollobas_riordan(theta)

    def test_disconnected_and_isolated(self, bouquet, theta):
        G = disjoint_union(bouquet, disjoint_union(theta, RibbonGraph((), 2)))
        assert all(verify_all(G).values())
        assert krushkal(G) == krushkal(bouquet) * krushkal(theta)


def test_sphere_has_no_z_in_lv():
    planar = from_cycles([[0, 2], [1, 4, 3], [5]])
    assert genus(planar) == 0
    lv = las_vergnas(planar)
    assert all(exps[2] == 0 for exps, _ in lv.terms())


def test_random_maps_satisfy_all_identities():
    for G in random_maps(2024, 1000):
        verdicts = verify_all(G)
        bad = {k: v.detail for k, v in verdicts.items() if not v}
        assert not bad, (G, bad)


def test_coefficient_sums_are_subset_counts():
    for G in random_maps(5, 200):
        total = 1 << G.num_edges
        assert coefficient_sum(krushkal(G)) == total
        # the BR expansion is in X - 1, so evaluate at X = 2
        assert evaluate(bollobas_riordan(G), {"X": 2, "Y": 1, "Z": 1}) == total
        assert evaluate(las_vergnas(G), {"x": 2, "y": 2, "z": 1}) == total


def test_br_at_z_one_is_tutte_like():
    for G in random_maps(11, 100, max_edges=5):
        nv, edges = underlying_graph(G)
        got = evaluate(bollobas_riordan(G), {"X": 3, "Y": 2, "Z": 1})
        # BR(X, Y, 1) = T(X, Y + 1)
        assert got == subset_tutte(nv, edges, 3, 3)


def test_embedded_tutte_uses_marked_edges(theta):
    E = EmbeddedGraph(theta, 0b011)
    assert tutte_polynomial(E) == tutte_polynomial(delete_ribbon(theta, 2))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 5).flatmap(lambda m: st.permutations(range(2 * m))))
def test_br_z_exponents_are_even(sigma):
    G = RibbonGraph(tuple(sigma))
    br = bollobas_riordan(G)
    g = genus(G)
    for exps, _ in br.terms():
        assert exps[2] % 2 == 0 and exps[2] <= 2 * g
