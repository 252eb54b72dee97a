import random

import pytest
from hypothesis import given, settings, strategies as st

from minorkit.graph import (
    Graph,
    GraphError,
    GuardError,
    apply_edits,
    complete,
    complete_bipartite,
    cycle,
    induced_subgraph,
    is_isomorphic,
    path,
    petersen,
    random_graph,
)
from minorkit.minors import (
    BranchSets,
    find_minor_model,
    has_minor,
    has_minor_oracle,
    minimize_minor_witness,
    model_to_edit_sequence,
    verify_model,
)

import oracles
from strategies import graphs

SMALL_PATTERNS = [complete(2), complete(3), cycle(4), path(3), complete_bipartite(1, 3), complete(4)]


def test_petersen_has_k5_model():
    m = find_minor_model(petersen(), complete(5))
    assert m is not None and verify_model(m)
    assert all(len(s) == 2 for s in m.sets)


def test_petersen_minus_vertex_has_no_k5():
    g = induced_subgraph(petersen(), range(1, 10))
    assert find_minor_model(g, complete(5)) is None
    assert not has_minor_oracle(g, complete(5))


def test_cycle_contains_triangle_minor():
    m = find_minor_model(cycle(4), complete(3))
    assert oracles.model_ok(m.host, m.pattern, m.sets)


def test_tree_has_no_cycle_minor():
    assert not has_minor(path(6), complete(3))


def test_verify_model_rejects_bad_models():
    g, h = cycle(4), complete(3)
    assert not verify_model(BranchSets(g, h, (frozenset({0}), frozenset({2}), frozenset({1, 3}))))
    assert not verify_model(BranchSets(g, h, (frozenset({0}), frozenset({0}), frozenset({1, 3}))))
    assert not verify_model(BranchSets(g, h, (frozenset(), frozenset({1}), frozenset({2, 3}))))
    with pytest.raises(GraphError):
        verify_model(BranchSets(g, h, (frozenset({9}), frozenset({1}), frozenset({2}))))


@given(graphs(max_n=7), st.sampled_from(SMALL_PATTERNS))
def test_search_matches_oracle(g, h):
    m = find_minor_model(g, h)
    assert (m is not None) == has_minor_oracle(g, h)
    if m is not None:
        assert verify_model(m)
        assert oracles.model_ok(g, h, m.sets)


@given(graphs(max_n=7), st.sampled_from(SMALL_PATTERNS))
def test_edit_sequence_reaches_pattern(g, h):
    m = find_minor_model(g, h)
    if m is not None:
        assert oracles.isomorphic(apply_edits(g, model_to_edit_sequence(m)), h)


def test_edit_sequence_petersen():
    m = find_minor_model(petersen(), complete(5))
    steps = model_to_edit_sequence(m)
    assert [s.kind for s in steps] == ["contract"] * 5
    assert is_isomorphic(apply_edits(petersen(), steps), complete(5))


@given(graphs(max_n=6), graphs(max_n=4))
def test_minor_monotone_under_edge_addition(g, h):
    if has_minor(g, h):
        bigger = Graph(g.n, list(g.edges) + [(a, b) for a in range(g.n) for b in range(a + 1, g.n)][:3])
        assert has_minor(bigger, h)


def test_oracle_guard():
    with pytest.raises(GuardError):
        has_minor_oracle(Graph(11), complete(2))


@settings(max_examples=25)
@given(graphs(min_n=3, max_n=7), st.sampled_from([complete(3), cycle(4), complete(4), complete_bipartite(1, 3)]))
def test_minimal_witness_structure(g, h):
    w = minimize_minor_witness(g, h)
    if w is None:
        assert not has_minor_oracle(g, h)
        return
    assert all(oracles.witness_clauses(w).values()), oracles.witness_clauses(w)
    sub, _ = w.as_graph()
    for e in sub.sorted_edges():
        assert not has_minor_oracle(Graph(sub.n, sub.edges - {e}), h)


def test_minimize_petersen_keeps_every_edge():
    w = minimize_minor_witness(petersen(), complete(5))
    assert len(w.edges) == 15 and len(w.vertices) == 10
    assert all(oracles.witness_clauses(w).values())


def test_minimize_rejects_foreign_model():
    m = find_minor_model(cycle(5), complete(3))
    with pytest.raises(GraphError):
        minimize_minor_witness(cycle(6), complete(3), m)


def test_minimize_returns_none_without_minor():
    assert minimize_minor_witness(path(5), complete(3)) is None


def test_random_hosts_agree_with_oracle():
    rng = random.Random(7)
    for _ in range(40):
        g = random_graph(rng.randint(5, 8), 0.4, rng)
        h = rng.choice(SMALL_PATTERNS + [complete(5), complete_bipartite(2, 3)])
        assert has_minor(g, h) == has_minor_oracle(g, h)
