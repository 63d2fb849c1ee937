from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import sign_matrix, square
from sgsr.catalog import g1, g2, s12_1
from sgsr.graph import (
    DuplicateEdgeError,
    SelfLoopError,
    SignError,
    SignedGraph,
    VertexRangeError,
    complete_graph,
    degrees,
    from_edge_list,
    from_matrix,
    is_balanced,
    is_connected,
    negate,
    regularity,
    subgraph_neg,
    subgraph_pos,
    switch,
    two_walk_counts,
    underlying,
    unbalanced_triangles,
)


@st.composite
def signed_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    signs = draw(st.lists(st.sampled_from((0, 1, -1)), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [(u, v, s) for (u, v), s in zip(pairs, signs) if s])


def test_k2():
    g = from_edge_list(2, [(0, 1, 1)])
    assert g.edges() == [(0, 1, 1)]
    assert g.sign(1, 0) == 1


@pytest.mark.parametrize(
    "edges, err",
    [
        ([(0, 1, 1), (0, 1, -1)], DuplicateEdgeError),
        ([(1, 0, 1), (0, 1, 1)], DuplicateEdgeError),
        ([(2, 2, 1)], SelfLoopError),
        ([(0, 3, 1)], VertexRangeError),
        ([(0, 1, 2)], SignError),
    ],
)
def test_edge_list_errors(edges, err):
    with pytest.raises(err):
        from_edge_list(3, edges)


def test_degrees_k6_and_g1():
    assert set(degrees(complete_graph(6))) == {(5, 5, 0)}
    ds = degrees(g1())
    assert all((d.d, d.dpos, d.dneg, d.net) == (5, 4, 1, 3) for d in ds)
    assert regularity(g1()) == (5, 3)


def test_pentagon_one_negative_edge():
    g = from_edge_list(5, [(0, 1, -1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 1)])
    assert [d.net for d in degrees(g)] == [0, 0, 2, 2, 2]
    assert regularity(g) == (2, None)


def test_negative_part_of_g2_is_two_triangles():
    neg = subgraph_neg(g2())
    assert neg.n == 6
    assert neg.edges() == [(0, 1, 1), (0, 2, 1), (1, 2, 1), (3, 4, 1), (3, 5, 1), (4, 5, 1)]
    assert not is_connected(neg)


def test_two_walks_in_g2_negative_edge():
    w = two_walk_counts(g2(), 0, 1)
    assert (w.pos, w.neg, w.value) == (4, 0, 4)


def test_two_walks_s12_nonadjacent_pair():
    w = two_walk_counts(s12_1(), 1, 6)
    assert (w.pos, w.neg, w.value) == (0, 2, -2)


@settings(max_examples=60, deadline=None)
@given(signed_graphs())
def test_two_walks_match_matrix_square(g):
    sq = square(sign_matrix(g.n, g.edges()))
    und = underlying(g)
    for u in range(g.n):
        for v in range(g.n):
            w = two_walk_counts(g, u, v)
            assert w.pos - w.neg == sq[u][v]
            if u == v:
                assert (w.pos, w.neg) == (und.adj[u].bit_count(), 0)
            else:
                assert w.pos + w.neg == (und.adj[u] & und.adj[v]).bit_count()


@settings(max_examples=80, deadline=None)
@given(signed_graphs(), st.data())
def test_negate_and_switch(g, data):
    subset = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert negate(negate(g)) == g
    assert switch(g, ()) == g
    assert switch(g, range(g.n)) == g
    h = switch(g, subset)
    assert switch(h, subset) == g
    assert underlying(h) == underlying(g)
    assert [d.d for d in degrees(h)] == [d.d for d in degrees(g)]
    assert is_balanced(h) == is_balanced(g)
    for u, v, s in g.edges():
        crossing = (u in subset) != (v in subset)
        assert h.sign(u, v) == (-s if crossing else s)
    assert subgraph_pos(g).num_edges + subgraph_neg(g).num_edges == g.num_edges


def test_switching_changes_net_degree():
    g = complete_graph(4)
    h = switch(g, {0})
    assert degrees(g)[0].net == 3
    assert degrees(h)[0].net == -3


@settings(max_examples=80, deadline=None)
@given(signed_graphs(max_n=7))
def test_balance_matches_switching_definition(g):
    reachable = any(
        switch(g, {v for v in range(g.n) if mask >> v & 1}).neg == (0,) * g.n for mask in range(1 << g.n)
    )
    assert is_balanced(g) == reachable


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.data())
def test_balance_on_complete_graphs_is_triangle_test(n, data):
    # complete graphs are chordal, so balance reduces to triangles
    pairs = list(combinations(range(n), 2))
    signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=len(pairs), max_size=len(pairs)))
    g = from_edge_list(n, [(u, v, s) for (u, v), s in zip(pairs, signs)])
    assert is_balanced(g) == (not unbalanced_triangles(g))


def test_triangle_with_one_negative_edge():
    g = from_edge_list(3, [(0, 1, -1), (1, 2, 1), (0, 2, 1)])
    assert not is_balanced(g)
    assert unbalanced_triangles(g) == [(0, 1, 2)]
    assert is_balanced(complete_graph(5))
    assert unbalanced_triangles(complete_graph(5)) == []


@settings(max_examples=50, deadline=None)
@given(signed_graphs())
def test_matrix_round_trip(g):
    m = g.matrix()
    assert all(m[u][v] == m[v][u] for u in range(g.n) for v in range(g.n))
    assert all(m[u][u] == 0 for u in range(g.n))
    assert from_matrix(m) == g


def test_relabel_permutes_signs():
    g = from_edge_list(3, [(0, 1, -1), (1, 2, 1)])
    h = g.relabel([2, 0, 1])
    assert h.sign(2, 0) == -1 and h.sign(0, 1) == 1 and h.sign(2, 1) == 0


def test_frozen():
    g = complete_graph(3)
    with pytest.raises(AttributeError):
        g.n = 4  # type: ignore[misc]
    assert isinstance(g, SignedGraph)
