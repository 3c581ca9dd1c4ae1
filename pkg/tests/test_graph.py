from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modsum.errors import BudgetExceeded, InvalidInput
from modsum.graph import (
    Graph,
    canonical_form,
    complete,
    complete_bipartite,
    covering_number,
    cycle,
    enumerate_graphs,
    generate_family,
    graph_from_mask,
    helm,
    independence_number,
    is_bipartite,
    ladder,
    path,
    petersen,
    star,
    wheel,
)


@st.composite
def graphs(draw, max_m=8):
    m = draw(st.integers(1, max_m))
    pairs = list(combinations(range(m), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return graph_from_mask(m, mask)


def test_normalisation_and_errors():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))
    with pytest.raises(InvalidInput):
        Graph(2, [(0, 0)])
    with pytest.raises(InvalidInput):
        Graph(2, [(0, 2)])


@pytest.mark.parametrize(
    "g, vertices, edges",
    [
        (path(5), 5, 4),
        (cycle(6), 6, 6),
        (wheel(3), 4, 6),
        (wheel(6), 7, 12),
        (helm(3), 7, 9),
        (helm(5), 11, 15),
        (ladder(2), 4, 4),
        (ladder(5), 10, 13),
        (complete(6), 6, 15),
        (star(4), 5, 4),
        (complete_bipartite(2, 3), 5, 6),
        (petersen(), 10, 15),
    ],
)
def test_family_sizes(g, vertices, edges):
    assert (g.vertex_count, len(g.edges)) == (vertices, edges)


def test_petersen_is_cubic_with_girth_five():
    g = petersen()
    assert all(g.degree(v) == 3 for v in range(10))
    # no triangles and no 4-cycles
    for a, b, c in combinations(range(10), 3):
        assert not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c))
    for quad in permutations(range(10), 4):
        if quad[0] == min(quad):
            assert not all(g.has_edge(quad[i], quad[(i + 1) % 4]) for i in range(4))


def test_generate_family_errors():
    with pytest.raises(InvalidInput):
        generate_family("cycle", 2)
    with pytest.raises(InvalidInput):
        generate_family("ladder", 1)
    with pytest.raises(InvalidInput):
        generate_family("hypercube", 3)
    with pytest.raises(InvalidInput):
        generate_family("complete_bipartite", 2)
    assert generate_family("petersen") == petersen()


def test_bipartite_examples():
    assert is_bipartite(cycle(4)) == (frozenset({0, 2}), frozenset({1, 3}))
    assert is_bipartite(cycle(5)) is None
    assert is_bipartite(path(5)) == (frozenset({0, 2, 4}), frozenset({1, 3}))


def _has_odd_cycle(g):
    # odd closed walk through any vertex, via parity reachability
    for s in range(g.vertex_count):
        seen = {(s, 0)}
        stack = [(s, 0)]
        while stack:
            v, p = stack.pop()
            for w in g.neighbors(v):
                state = (w, p ^ 1)
                if state == (s, 1):
                    return True
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
    return False


def test_bipartite_iff_no_odd_cycle():
    for m in range(1, 7):
        for g in enumerate_graphs(m):
            parts = is_bipartite(g)
            assert (parts is not None) == (not _has_odd_cycle(g))
            if parts is not None:
                side0, side1 = parts
                assert side0 | side1 == set(range(m)) and not side0 & side1
                assert all((u in side0) != (v in side0) for u, v in g.edges)


def test_alpha_beta_examples():
    assert covering_number(path(5))[0] == 2
    assert covering_number(helm(3))[0] == 3
    assert covering_number(complete(4))[0] == 3
    assert independence_number(cycle(5))[0] == 2
    assert independence_number(helm(3))[0] == 4
    assert independence_number(complete(6))[0] == 1


def _brute_alpha(g):
    for k in range(g.vertex_count + 1):
        for c in combinations(range(g.vertex_count), k):
            if all(u in c or v in c for u, v in g.edges):
                return k, c


@given(graphs())
def test_gallai_and_witnesses(g):
    alpha, cover = covering_number(g)
    beta, indep = independence_number(g)
    assert alpha + beta == g.vertex_count
    assert (alpha, cover) == _brute_alpha(g)
    assert len(indep) == beta
    assert not any(g.has_edge(u, v) for u, v in combinations(indep, 2))


def test_enumeration_counts():
    assert len(list(enumerate_graphs(3))) == 8
    assert len(list(enumerate_graphs(3, require_no_isolated=True))) == 4
    assert len(list(enumerate_graphs(4))) == 64
    masks = [g.edge_mask() for g in enumerate_graphs(4)]
    assert masks == sorted(masks) == list(range(64))
    with pytest.raises(BudgetExceeded):
        next(enumerate_graphs(8))


@given(graphs(max_m=6), st.randoms())
def test_canonical_form_is_isomorphism_invariant(g, rnd):
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    mask, p = canonical_form(g)
    assert canonical_form(g.relabel(perm))[0] == mask
    assert g.relabel(p).edge_mask() == mask


def test_components():
    g = Graph(5, [(0, 1), (3, 4)])
    assert g.components() == [(0, 1), (2,), (3, 4)]
    assert g.has_isolated_vertices() and not g.is_connected()
