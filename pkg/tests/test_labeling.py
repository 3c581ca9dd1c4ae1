from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modsum.errors import InvalidInput, InvalidLabeling
from modsum.graph import Graph, cycle, path, star
from modsum.labeling import (
    Labeling,
    classify,
    covered_by_sums,
    edge_is_exquisite,
    edge_is_strong,
    edge_is_weak,
    edge_is_weak_singleton,
    edge_strong_by_differences,
    exquisite_by_sums,
    induced_edge_label,
    is_indexer,
    is_injective_labeling,
)
from modsum.zn import ZnSet, all_subsets, make_set


def lab(g, n, *labels):
    return Labeling.from_lists(g, n, labels)


@st.composite
def labelings(draw, max_m=6, max_n=6):
    m = draw(st.integers(2, max_m))
    n = draw(st.integers(1, max_n))
    edges = draw(st.sets(st.tuples(st.integers(0, m - 1), st.integers(0, m - 1)).filter(lambda e: e[0] != e[1])))
    masks = [draw(st.integers(1, (1 << n) - 1)) for _ in range(m)]
    return Labeling.from_masks(Graph(m, edges), n, masks)


def test_induced_edge_label():
    p2 = path(2)
    assert induced_edge_label(lab(p2, 4, [0, 1], [0, 2]), 0, 1).is_full
    assert induced_edge_label(lab(p2, 6, [1], [2]), 0, 1).members == (3,)
    assert induced_edge_label(lab(p2, 5, range(5), [3]), 0, 1).is_full
    with pytest.raises(InvalidInput):
        induced_edge_label(lab(path(3), 4, [0], [1], [2]), 0, 2)


def test_labeling_validation():
    with pytest.raises(InvalidLabeling):
        lab(path(2), 2, [0])
    with pytest.raises(InvalidLabeling):
        lab(path(2), 2, [0], [])
    with pytest.raises(InvalidLabeling):
        Labeling(path(2), 3, (make_set(3, [0]), make_set(4, [1])))


def test_injectivity_and_indexer():
    assert is_injective_labeling(lab(path(2), 2, [0], [1])) == (True, None)
    assert is_injective_labeling(lab(path(2), 2, [0], [0])) == (False, (0, 1))
    assert is_indexer(lab(path(3), 4, [0], [1], [2]))[0]
    assert is_indexer(lab(cycle(3), 3, [0], [1], [2]))[0]
    ok, clash = is_indexer(lab(star(2), 4, [0, 2], [1], [3]))
    assert not ok and clash == ((0, 1), (0, 2))
    with pytest.raises(InvalidLabeling):
        is_indexer(lab(path(2), 2, [0], [0]))


def test_classify_examples():
    k13 = lab(star(3), 4, range(4), [0], [1], [2])
    r = classify(k13)
    assert r.maximal and r.exquisite and r.weak and r.weak_paper_form

    r = classify(lab(path(2), 4, [0, 1], [0, 3]))
    assert not r.strong and r.strong_paper_criterion
    assert r.witnesses["strong"] == (0, 1)

    r = classify(lab(cycle(4), 4, [0, 2], [1, 3], [0], [1]))
    assert r.weak and not r.weak_paper_form
    assert r.witnesses["weak_paper_form"] == (0, 1)


def test_classify_report_fields():
    r = classify(lab(path(3), 4, [0], [1, 2], [0, 3]))
    assert r.vertex_uniform_l is None and r.edge_uniform_k is None
    assert r.monocardinal_vertices == {0}
    assert r.monocardinal_edges == frozenset()
    j = r.to_json()
    flagged = {k for k, v in j.items() if v is False or (k.endswith(("_k", "_l")) and v is None)}
    assert set(j["witnesses"]) == flagged
    with pytest.raises(InvalidLabeling):
        classify(lab(path(2), 2, [1], [1]))


def test_edge_predicates_exhaustive():
    for n in range(1, 7):
        subsets = list(all_subsets(n))
        for a, b in product(subsets, subsets):
            # a singleton end translates the other label
            if edge_is_weak_singleton(a, b):
                assert edge_is_weak(a, b)
            assert edge_is_strong(a, b) == edge_strong_by_differences(a, b)
            s = a + b
            if s.is_full:
                assert edge_is_exquisite(a, b)
            if 0 in a and 0 in b:
                assert edge_is_exquisite(a, b)
            assert edge_is_exquisite(a, b) == (covered_by_sums(a, b) and covered_by_sums(b, a))


def test_distinct_summand_reading_differs():
    z = make_set(1, [0])
    assert z.issubset(z + z)
    assert not covered_by_sums(z, z, distinct=True)


@given(labelings())
def test_classifier_implications_random(lb):
    if not is_injective_labeling(lb)[0]:
        return
    r = classify(lb)
    assert not r.weak_paper_form or r.weak
    assert not r.maximal or r.exquisite
    if all(0 in s for s in lb.labels):
        assert r.exquisite
    assert r.exquisite == exquisite_by_sums(lb)
    if r.strong:
        assert all(len(lb.edge_label(u, v)) == len(lb.labels[u]) * len(lb.labels[v]) for u, v in lb.graph.edges)


@given(labelings(), st.randoms())
def test_relabel_preserves_classification(lb, rnd):
    if not is_injective_labeling(lb)[0]:
        return
    perm = list(range(lb.graph.vertex_count))
    rnd.shuffle(perm)
    a, b = classify(lb), classify(lb.relabel(perm))
    for key in ("weak", "weak_paper_form", "strong", "maximal", "exquisite", "is_indexer", "edge_uniform_k"):
        assert getattr(a, key) == getattr(b, key)


def test_labeling_holds_znsets():
    lb = lab(path(2), 3, [2, 0], [1])
    assert lb.labels[0] == ZnSet(3, 0b101)
