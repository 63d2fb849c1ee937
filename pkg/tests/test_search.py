import json
from itertools import permutations

import networkx as nx
import pytest

from oracles import all_signings, brute_params, connected_regular_nx, dedupe_nx, net_regular, nx_signed_isomorphic, to_nx
from sgsr.canon import canonical_form
from sgsr.catalog import k6_negative_hexagon
from sgsr.feasibility import net_constraint_residual
from sgsr.generate import ParityError, gen_regular
from sgsr.graph import complete_graph, from_edge_list, is_connected, regularity, subgraph_neg
from sgsr.search import (
    Budget,
    BudgetExceeded,
    build_constrained,
    classify,
    classify_range,
    enumerate_negative_subgraphs,
    k_factors,
    negative_regularity,
    parametric_notes,
    signing_by_subgraph,
    srsg_signings,
    survivor_forms,
)
from sgsr.srsg import ClassLabel, PreconditionError, SrsgParams, check_srsg, classify_class, lemma2_check, negation_param_swap


def _k55():
    return from_edge_list(10, [(i, j, 1) for i in range(5) for j in range(5, 10)])


@pytest.mark.parametrize("r, rho, k", [(5, 3, 1), (5, 1, 2), (4, 4, 0), (5, -1, 3)])
def test_negative_regularity(r, rho, k):
    assert negative_regularity(r, rho) == k


@pytest.mark.parametrize("r, rho", [(5, 2), (5, 7), (3, -5)])
def test_negative_regularity_parity(r, rho):
    with pytest.raises(ParityError):
        negative_regularity(r, rho)


def test_negative_subgraph_orbits():
    k6 = complete_graph(6)
    assert len(enumerate_negative_subgraphs(k6, 1)) == 1
    two = enumerate_negative_subgraphs(k6, 2)
    assert len(two) == 2
    shapes = sorted(sorted(len(c) for c in nx.connected_components(to_nx(6, s.edges()))) for s in two)
    assert shapes == [[3, 3], [6]]
    assert len(enumerate_negative_subgraphs(_k55(), 1)) == 1
    assert enumerate_negative_subgraphs(complete_graph(5), 1) == []


def test_k6_matching_orbit_expands_to_all_matchings():
    (rep,) = enumerate_negative_subgraphs(complete_graph(6), 1)
    images = set()
    for perm in permutations(range(6)):
        images.add(tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v, _ in rep.edges())))
    assert len(images) == 15
    assert len(set(k_factors(complete_graph(6).adj, 1))) == 15


def test_k6_two_factor_signings():
    survivors = []
    for sub in enumerate_negative_subgraphs(complete_graph(6), 2):
        g = signing_by_subgraph(complete_graph(6), sub)
        try:
            survivors.append(check_srsg(g))
        except Exception:
            assert canonical_form(g) == canonical_form(k6_negative_hexagon())
    assert survivors == [SrsgParams(6, 5, -4, 4, None)]


def _brute_survivors(n, r, rho):
    found = []
    for h in connected_regular_nx(n, r):
        for edges in all_signings(h):
            if net_regular(n, edges) == rho and brute_params(n, edges) is not None:
                found.append(to_nx(n, edges))
    return dedupe_nx(found)


SMALL = [(n, r, rho) for n in range(2, 7) for r in range(1, n) if n * r % 2 == 0
         for rho in range(-r, r + 1, 2)]


@pytest.mark.parametrize("n, r, rho", SMALL)
@pytest.mark.parametrize("method", ["pruned", "orbits"])
def test_classify_matches_brute_force(n, r, rho, method):
    expected = _brute_survivors(n, r, rho)
    rep = classify(n, r, rho, method=method)
    assert len(rep.survivors) == len(expected)
    for s in rep.survivors:
        got = to_nx(n, s.graph.edges())
        assert sum(nx_signed_isomorphic(got, e) for e in expected) == 1


@pytest.mark.parametrize("rho", [3, 1])
def test_constrained_agrees_with_full(rho):
    full = classify_range(5, rho, 10)
    cons = classify_range(5, rho, 10, constrained=True)
    assert survivor_forms(full.reports) == survivor_forms(cons.reports)


def test_net_degree_three_up_to_ten():
    res = classify_range(5, 3, 10)
    assert sorted(str(s.params) for s in res.survivors) == sorted(
        ["(6,5,0,4,null)", "(8,5,-2,4,4)", "(10,5,-2,4,2)", "(10,5,0,0,1)", "(10,5,3,0,-2)"]
    )
    assert [rep.underlying_count for rep in res.reports] == [1, 3, 60]


def test_survivor_invariants():
    for rho in (3, 1):
        for s in classify_range(5, rho, 10).survivors:
            g = s.graph
            assert is_connected(g) and regularity(g) == (5, rho)
            assert check_srsg(g) == s.params
            assert negation_param_swap(g)
            p = s.params
            assert net_constraint_residual(p.n, p.r, rho, p.a, p.b, p.c) == 0
            try:
                assert lemma2_check(g)[0]
            except PreconditionError:
                assert g.is_complete() or s.label not in (ClassLabel.C1, ClassLabel.C4, ClassLabel.C5)


def test_census_source_matches_generated(census_dir):
    a = classify(10, 5, 3)
    b = classify(10, 5, 3, source="census", census_dir=census_dir)
    assert b.source == "census"
    assert json.dumps(a.to_json()["survivors"]) == json.dumps(b.to_json()["survivors"])


def test_census_env(census_dir, monkeypatch):
    monkeypatch.setenv("SGSR_CENSUS_DIR", str(census_dir))
    assert len(classify(8, 5, 3, source="census").survivors) == 1
    monkeypatch.delenv("SGSR_CENSUS_DIR")
    with pytest.raises(FileNotFoundError):
        classify(8, 5, 3, source="census")


def test_jobs_do_not_change_output():
    one = classify(10, 5, 3, jobs=1).to_json()
    two = classify(10, 5, 3, jobs=2).to_json()
    assert json.dumps(one, sort_keys=True) == json.dumps(two, sort_keys=True)


def test_budget_gives_incomplete_report():
    with pytest.raises(BudgetExceeded) as info:
        classify(10, 5, 3, budget=Budget(max_nodes=500))
    assert not info.value.report.complete
    with pytest.raises(BudgetExceeded) as info:
        classify(10, 5, 3, constrained=True, budget=Budget(max_nodes=10))
    assert not info.value.report.complete
    assert classify(8, 5, 3, budget=Budget(max_nodes=10**7)).complete


def test_n14_targeted():
    rep = classify(14, 5, 3, constrained=True, targets=[(-2, 4, 1)])
    assert rep.survivors == [] and rep.complete


def test_constrained_builder_finds_s12():
    graphs = list(build_constrained(12, 5, 1, (2, 1, -2)))
    assert graphs
    forms = {canonical_form(g) for g in graphs}
    assert len(forms) == 1


def test_srsg_signings_with_target():
    k6 = complete_graph(6)
    assert list(srsg_signings(k6, 2, target=(-4, 4, None)))
    assert not list(srsg_signings(k6, 2, target=(-4, 3, None)))


def test_homogeneous_net_five_at_ten():
    # the only all-positive 5-regular graph of order 10 with constant A^2 classes
    expected = [g for g in gen_regular(10, 5) if brute_params(10, g.edges()) is not None]
    rep = classify(10, 5, 5)
    assert len(rep.survivors) == len(expected) == 1
    (s,) = rep.survivors
    assert s.params == SrsgParams(10, 5, 0, None, 5)
    assert s.label == ClassLabel.HOMOGENEOUS
    assert nx.is_isomorphic(to_nx(10, s.graph.edges()), nx.complete_bipartite_graph(5, 5))
    assert subgraph_neg(s.graph).num_edges == 0


def test_parametric_notes():
    notes = parametric_notes(5, 3, 12)
    assert any("(n,5,1,0,0)" in n and "n=12" in n for n in notes)
    assert classify_class(SrsgParams(20, 5, 1, 0, 0)) == ClassLabel.C4


def test_odd_product_orders_are_empty():
    rep = classify(7, 5, 3)
    assert rep.underlying_count == 0 and rep.survivors == []
