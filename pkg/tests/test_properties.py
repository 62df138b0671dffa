"""Property-based checks tying the vectorized paths to brute-force oracles."""

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homophily_gap.experiments import histogram, predicted_gap
from homophily_gap.generate import derived_rng, stub_counts
from homophily_gap.graph import BLUE, RED, build_graph
from homophily_gap.metrics import (
    EXACT,
    balance_check,
    first_order_homophily,
    friendship_paradox_stats,
    gap_report,
    second_order_list,
    verify_gap_theorem,
)
from homophily_gap.prune import prune_bichromatic
from tests import oracles

LABELS = {"red": RED, "blue": BLUE}


@st.composite
def typed_graphs(draw, min_nodes=2, max_nodes=14):
    n = draw(st.integers(min_nodes, max_nodes))
    colors = draw(st.lists(st.sampled_from([RED, BLUE]), min_size=n, max_size=n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [(f"n{a}", f"n{b}") for (a, b), keep in zip(pairs, mask) if keep]
    if not edges:
        edges = [(f"n{pairs[0][0]}", f"n{pairs[0][1]}")]
    attributes = {f"n{i}": ("red" if c is RED else "blue") for i, c in enumerate(colors)}
    graph, _ = build_graph(edges, attributes, LABELS)
    return graph


@settings(max_examples=80, deadline=None)
@given(typed_graphs())
def test_list_means_match_pooled_oracle(graph):
    profile = first_order_homophily(graph)
    report = gap_report(graph, profile, backend=EXACT, singular_policy="relaxed")
    for color, side in ((RED, report.red), (BLUE, report.blue)):
        same = oracles.concatenated_list_mean(graph, color, color)
        other = oracles.concatenated_list_mean(graph, color.other, color)
        if same is None:
            assert not side.mu_list_same.is_defined
        else:
            assert side.mu_list_same.value == same
        if other is None:
            assert not side.mu_list_other.is_defined
        else:
            assert side.mu_list_other.value == other


@settings(max_examples=80, deadline=None)
@given(typed_graphs())
def test_pooled_list_equals_second_order_concatenation(graph):
    # the closed form must agree with literally pooling neighbor h values
    profile = first_order_homophily(graph)
    report = gap_report(graph, profile, backend=EXACT, singular_policy="relaxed")
    for color, side in ((RED, report.red), (BLUE, report.blue)):
        _, pooled = second_order_list(graph, profile, color, color)
        if pooled:
            assert side.mu_list_same.value == sum(pooled, Fraction(0)) / len(pooled)


@settings(max_examples=80, deadline=None)
@given(typed_graphs())
def test_gap_sign_matches_pairwise_oracle(graph):
    profile = first_order_homophily(graph)
    report = gap_report(graph, profile, backend=EXACT, singular_policy="relaxed")
    for color, side in ((RED, report.red), (BLUE, report.blue)):
        if not side.gap_list.is_defined:
            continue
        term_sum = oracles.pairwise_term_sum(graph, color)
        gap = side.gap_list.value
        assert (gap > 0) == (term_sum > 0)
        assert (gap == 0) == (term_sum == 0)
        assert (gap < 0) == (term_sum < 0)


@settings(max_examples=100, deadline=None)
@given(typed_graphs())
def test_balance_identity_always_holds(graph):
    check = balance_check(graph)
    assert check.holds
    assert check.cross_edges == oracles.cross_edge_count(graph)


@settings(max_examples=100, deadline=None)
@given(typed_graphs())
def test_gap_theorem_on_random_graphs(graph):
    # raises TheoremViolationError on any counterexample
    verify_gap_theorem(graph)


@settings(max_examples=80, deadline=None)
@given(typed_graphs())
def test_friendship_paradox_inequality(graph):
    stats = friendship_paradox_stats(graph)
    if not stats.mean_neighbor_degree_list.is_defined:
        return
    degrees = [graph.degree(i) for i in range(graph.n)]
    assert stats.mean_neighbor_degree_list.value >= stats.mean_degree.value
    strict = len(set(degrees)) > 1
    assert (stats.mean_neighbor_degree_list.value > stats.mean_degree.value) == strict


@settings(max_examples=60, deadline=None)
@given(typed_graphs(max_nodes=10))
def test_prune_idempotent_and_maximal(graph):
    required = frozenset({RED, BLUE})
    result = prune_bichromatic(graph, required)
    again = prune_bichromatic(result.graph, required)
    assert again.graph == result.graph
    assert again.passes == 1 or result.graph.n == 0
    expected = {graph.node_ids[i] for i in oracles.max_compliant_subset(graph, required)}
    assert set(result.graph.node_ids) == expected


@settings(max_examples=60, deadline=None)
@given(typed_graphs())
def test_singular_means_match_oracle(graph):
    profile = first_order_homophily(graph)
    report = gap_report(graph, profile, backend=EXACT, singular_policy="relaxed")
    for color, side in ((RED, report.red), (BLUE, report.blue)):
        value, skipped = oracles.singular_mean(graph, color, color)
        if value is None:
            assert not side.mu_sing_same.is_defined
        else:
            assert side.mu_sing_same.value == value
            assert side.sing_same_skipped == skipped


@settings(max_examples=100, deadline=None)
@given(
    degree=st.integers(1, 12),
    values=st.lists(st.floats(0, 1, allow_nan=False), min_size=1, max_size=20),
    seed=st.integers(0, 2**20),
)
def test_stub_counts_invariants(degree, values, seed):
    h = np.asarray(values, dtype=np.float64)
    plan = stub_counts(h, degree, derived_rng(seed))
    same = plan.same
    assert same.shape == h.shape
    assert int(same.sum()) % 2 == 0
    assert np.all(same >= 0) and np.all(same <= degree)
    assert np.all(plan.cross == degree - same)


@settings(max_examples=100, deadline=None)
@given(
    values=st.lists(st.floats(0, 1, allow_nan=False), min_size=1, max_size=50),
    bins=st.integers(1, 20),
)
def test_histogram_conserves_mass(values, bins):
    _, counts = histogram(values, bins)
    assert int(counts.sum()) == len(values)
    assert len(counts) == bins


@settings(max_examples=100, deadline=None)
@given(
    lam=st.floats(0.01, 0.99, allow_nan=False),
    # sigma**2 underflows to zero below ~1e-154, so stay clear of subnormals
    sigma=st.one_of(st.just(0.0), st.floats(1e-6, 0.5, allow_nan=False)),
)
def test_predicted_gap_symmetry_and_sign(lam, sigma):
    a = predicted_gap(lam, sigma)
    b = predicted_gap(1.0 - lam, sigma)
    assert a == pytest.approx(b, rel=1e-9, abs=1e-15)
    assert a >= 0
    assert (a == 0) == (sigma == 0)
