import pytest
from hypothesis import given
from hypothesis import strategies as st

from modsum.errors import InvalidInput
from modsum.graph import complete, cycle, enumerate_graphs, helm, path, petersen, star
from modsum.labeling import is_injective_labeling
from modsum.search import (
    Budget,
    Kind,
    PropertySpec,
    Status,
    exists_labeling,
    min_modulus,
    satisfies,
    sigma_formula,
    vertex_order,
    weak_number_formula,
    weak_uniform_min_formula,
)

ALL_SPECS = [
    PropertySpec(Kind.PLAIN),
    PropertySpec(Kind.INDEXER),
    PropertySpec(Kind.WEAK),
    PropertySpec(Kind.WEAK_LITERAL),
    PropertySpec(Kind.WEAK_LITERAL, 2),
    PropertySpec(Kind.WEAK_K_UNIFORM, 1),
    PropertySpec(Kind.WEAK_K_UNIFORM, 2),
    PropertySpec(Kind.STRONG),
    PropertySpec(Kind.STRONG_K_UNIFORM, 2),
    PropertySpec(Kind.MAXIMAL),
    PropertySpec(Kind.EXQUISITE),
    PropertySpec(Kind.WEAK, forbid_monocardinal_edges=True),
]


def test_spec_validation():
    with pytest.raises(InvalidInput):
        PropertySpec(Kind.WEAK_K_UNIFORM)
    with pytest.raises(InvalidInput):
        PropertySpec(Kind.PLAIN, 2)
    with pytest.raises(InvalidInput):
        PropertySpec(Kind.STRONG_K_UNIFORM, 0)
    assert PropertySpec.parse("weak_k_uniform", 2) == PropertySpec(Kind.WEAK_K_UNIFORM, 2)
    with pytest.raises(InvalidInput):
        PropertySpec.parse("bogus")


def test_exists_examples():
    assert exists_labeling(path(4), 2, PropertySpec(Kind.PLAIN)).status is Status.EXHAUSTED
    with pytest.raises(InvalidInput):
        exists_labeling(path(2), 0, PropertySpec(Kind.PLAIN))


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_pruned_search_matches_brute_force(spec):
    # agreement of status and of the least witness, m <= 4, n <= 3
    for m in range(2, 5):
        for g in enumerate_graphs(m, require_no_isolated=True):
            for n in range(1, 4):
                fast = exists_labeling(g, n, spec)
                slow = exists_labeling(g, n, spec, prune=False)
                assert fast.status == slow.status, (g, n)
                if fast.status is Status.FOUND and spec.kind is not Kind.WEAK:
                    assert fast.witness == slow.witness


def test_weak_witness_is_least_within_cover_restricted_space():
    # the restricted space can drop the global least witness but never existence
    for m in range(2, 5):
        for g in enumerate_graphs(m, require_no_isolated=True):
            for n in range(1, 4):
                out = exists_labeling(g, n, PropertySpec(Kind.WEAK))
                if out.status is Status.FOUND:
                    assert satisfies(out.witness, PropertySpec(Kind.WEAK))


def test_min_modulus_examples():
    r = min_modulus(cycle(4), PropertySpec(Kind.WEAK))
    assert (r.value, r.exact) == (3, True)
    assert [o.status for _, o in r.per_n[:-1]] == [Status.EXHAUSTED, Status.EXHAUSTED]
    r = min_modulus(cycle(3), PropertySpec(Kind.WEAK))
    assert (r.value, r.exact) == (2, True)
    assert r.witness.labels[0].modulus == 2
    r = min_modulus(petersen(), PropertySpec(Kind.PLAIN))
    assert r.value == 4 and r.exact
    with pytest.raises(InvalidInput):
        min_modulus(path(2), PropertySpec(Kind.PLAIN), n_max=0)


def test_budget_exceeded():
    out = exists_labeling(complete(6), 4, PropertySpec(Kind.STRONG), Budget(nodes=5))
    assert out.status is Status.BUDGET_EXCEEDED and out.witness is None
    r = min_modulus(complete(6), PropertySpec(Kind.STRONG), n_max=4, budget=Budget(nodes=5))
    assert r.value is None and not r.exact


def test_formulas():
    assert [sigma_formula(m) for m in (1, 8, 10)] == [1, 4, 4]
    with pytest.raises(InvalidInput):
        sigma_formula(0)
    assert weak_number_formula(cycle(4)) == 3
    assert weak_number_formula(complete(4)) == 3
    assert weak_number_formula(helm(3)) == 3
    assert weak_uniform_min_formula(cycle(4), 2) == 3
    assert weak_uniform_min_formula(star(3), 2) == 3
    assert weak_uniform_min_formula(path(2), 1) == 1


def test_vertex_order():
    assert vertex_order(star(3)) == [0, 1, 2, 3]
    assert vertex_order(path(4)) == [1, 2, 0, 3]


@given(st.integers(1, 9))
def test_plain_is_monotone_and_matches_sigma(m):
    g = path(m)
    n0 = sigma_formula(m)
    r = min_modulus(g, PropertySpec(Kind.PLAIN))
    assert r.value == n0 and r.exact
    for n in range(n0, n0 + 2):
        assert exists_labeling(g, n, PropertySpec(Kind.PLAIN)).status is Status.FOUND


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_witnesses_reverify_and_are_deterministic(spec):
    g = cycle(5)
    for n in range(1, 6):
        a = exists_labeling(g, n, spec)
        b = exists_labeling(g, n, spec)
        assert a.status == b.status and a.witness == b.witness
        if a.status is Status.FOUND:
            assert is_injective_labeling(a.witness)[0] and satisfies(a.witness, spec)
