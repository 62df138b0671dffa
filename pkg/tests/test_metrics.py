"""Homophily statistics against hand-computed and brute-force values."""

import math
from fractions import Fraction

import numpy as np
import pytest

from homophily_gap.graph import BLUE, RED, count_edges_between
from homophily_gap.metrics import (
    EXACT,
    FLOAT,
    StatValue,
    balance_check,
    first_order_homophily,
    friendship_paradox_stats,
    gap_report,
    pearson,
    second_order_list,
    second_order_singular,
    second_vs_first,
    verify_gap_theorem,
)
from tests.conftest import graph_from_edges
from tests import oracles

F = Fraction


@pytest.fixture
def uniform_half_graph():
    """Both colors have every h = 1/2: two homophilous edges, two cross."""
    return graph_from_edges(
        [("r1", "r2"), ("r1", "b1"), ("r2", "b2"), ("b1", "b2")],
        {"r1": RED, "r2": RED, "b1": BLUE, "b2": BLUE},
    )


class TestFirstOrderHomophily:
    def test_diamond_values(self, diamond_graph):
        profile = first_order_homophily(diamond_graph)
        assert profile.h_exact == (F(1, 3), F(1, 2), F(1, 3), F(1, 2))
        assert profile.lambda_exact(RED) == F(5, 12)
        assert profile.lambda_exact(BLUE) == F(5, 12)

    def test_monochromatic_clique(self):
        g = graph_from_edges(
            [("a", "b"), ("b", "c"), ("a", "c")],
            {"a": RED, "b": RED, "c": RED},
        )
        profile = first_order_homophily(g)
        assert profile.h_exact == (F(1), F(1), F(1))
        assert profile.variance_exact(RED) == 0
        assert not profile.has_diversity(RED)
        assert profile.lambda_exact(BLUE) is None
        assert profile.variance_exact(BLUE) is None

    def test_hub_lambda(self, hub_graph):
        profile = first_order_homophily(hub_graph)
        assert profile.lambda_exact(RED) == F(101, 300)
        assert profile.lambda_exact(BLUE) == 0

    def test_isolated_node_excluded(self):
        g = graph_from_edges(
            [("a", "b"), ("c", "u")],
            {"a": RED, "b": RED, "c": RED},
        )
        # c's only edge went to an unlabeled node, leaving it isolated
        profile = first_order_homophily(g)
        i = g.id_to_index["c"]
        assert profile.h_exact[i] is None
        assert math.isnan(profile.h_float[i])
        assert profile.defined_count(RED) == 2
        assert profile.lambda_exact(RED) == 1

    def test_matches_oracle(self, diamond_graph, hub_graph, star_graph):
        for g in (diamond_graph, hub_graph, star_graph):
            profile = first_order_homophily(g)
            for i in range(g.n):
                assert profile.h_exact[i] == oracles.homophily_of(g, i)

    def test_same_counts_are_h_times_d(self, diamond_graph):
        profile = first_order_homophily(diamond_graph)
        # h_i * d_i is the integer count of same-color neighbors
        assert profile.same_counts.tolist() == [1, 1, 1, 1]
        # and twice the monochromatic edge count per color
        red = profile.colors == int(RED)
        assert int(profile.same_counts[red].sum()) == 2 * count_edges_between(
            diamond_graph, RED, RED
        )

    def test_float_summaries(self, diamond_graph):
        profile = first_order_homophily(diamond_graph)
        assert profile.lambda_float(RED) == pytest.approx(5 / 12, abs=1e-15)
        assert profile.sigma_float(RED) == pytest.approx(1 / 12, abs=1e-15)
        assert profile.variance_exact(RED) == F(1, 144)


class TestSecondOrderList:
    def test_diamond_red_seen_by_red(self, diamond_graph):
        profile = first_order_homophily(diamond_graph)
        per_node, pooled = second_order_list(diamond_graph, profile, RED, RED)
        assert per_node == [[F(1, 2)], [F(1, 3)]]
        assert sorted(pooled) == [F(1, 3), F(1, 2)]

    def test_diamond_red_seen_by_blue(self, diamond_graph):
        profile = first_order_homophily(diamond_graph)
        _, pooled = second_order_list(diamond_graph, profile, BLUE, RED)
        assert sorted(pooled) == [F(1, 3), F(1, 3), F(1, 2)]

    def test_empty_per_node_list_allowed(self, star_graph):
        profile = first_order_homophily(star_graph)
        per_node, pooled = second_order_list(star_graph, profile, RED, RED)
        assert per_node == [[]]
        assert pooled == []


class TestSecondOrderSingular:
    def test_diamond_node3_red(self, diamond_graph):
        profile = first_order_homophily(diamond_graph)
        node = diamond_graph.id_to_index["3"]
        assert second_order_singular(diamond_graph, profile, node, RED) == F(5, 12)

    def test_diamond_node2_red(self, diamond_graph):
        profile = first_order_homophily(diamond_graph)
        node = diamond_graph.id_to_index["2"]
        assert second_order_singular(diamond_graph, profile, node, RED) == F(1, 3)

    def test_no_target_neighbors_is_none(self, star_graph):
        profile = first_order_homophily(star_graph)
        leaf = star_graph.id_to_index["l1"]
        assert second_order_singular(star_graph, profile, leaf, BLUE) is None


class TestGapReportExact:
    def test_diamond_red(self, diamond_graph):
        side = gap_report(diamond_graph, backend=EXACT).red
        assert side.mu_list_same.value == F(5, 12)
        assert side.mu_list_other.value == F(7, 18)
        assert side.gap_list.value == F(1, 36)
        assert side.mu_sing_same.value == F(5, 12)
        assert side.mu_sing_other.value == F(3, 8)
        assert side.gap_sing.value == F(1, 24)
        assert side.gap_list.sign() == "positive"

    def test_diamond_blue_mirrors_red(self, diamond_graph):
        report = gap_report(diamond_graph, backend=EXACT)
        blue = report.blue
        assert blue.mu_list_same.value == F(5, 12)
        assert blue.mu_list_other.value == F(7, 18)
        assert blue.gap_list.value == F(1, 36)
        assert blue.gap_sing.value == F(1, 24)

    def test_uniform_homophily_zero_gap(self, uniform_half_graph):
        report = gap_report(uniform_half_graph, backend=EXACT)
        for side in (report.red, report.blue):
            assert side.mu_list_same.value == F(1, 2)
            assert side.mu_list_other.value == F(1, 2)
            assert side.gap_list.value == 0
            assert side.gap_list.sign() == "zero"

    def test_closed_form_equals_pooled_list_mean(self, diamond_graph, hub_graph):
        for g in (diamond_graph, hub_graph):
            profile = first_order_homophily(g)
            report = gap_report(g, profile, backend=EXACT, singular_policy="relaxed")
            for color, side in ((RED, report.red), (BLUE, report.blue)):
                assert side.mu_list_same.value == oracles.concatenated_list_mean(
                    g, color, color
                )
                assert side.mu_list_other.value == oracles.concatenated_list_mean(
                    g, color.other, color
                )

    def test_singular_matches_oracle(self, diamond_graph, hub_graph):
        for g in (diamond_graph, hub_graph):
            report = gap_report(g, backend=EXACT, singular_policy="relaxed")
            for color, side in ((RED, report.red), (BLUE, report.blue)):
                same, _ = oracles.singular_mean(g, color, color)
                other, _ = oracles.singular_mean(g, color.other, color)
                assert side.mu_sing_same.value == same
                assert side.mu_sing_other.value == other

    def test_no_monochromatic_edges_undefined(self, star_graph):
        report = gap_report(star_graph, backend=EXACT, singular_policy="relaxed")
        assert not report.red.mu_list_same.is_defined
        assert report.red.mu_list_same.code == "no-red-red-edges"
        assert not report.red.gap_list.is_defined
        assert report.red.gap_list.code == "undefined-operand"
        # blue nodes all see the hub's h = 0
        assert report.red.mu_sing_other.value == 0

    def test_strict_policy_names_offender(self, star_graph):
        report = gap_report(star_graph, backend=EXACT, singular_policy="strict")
        sv = report.red.mu_sing_same
        assert not sv.is_defined
        assert sv.code == "unpruned-node"
        assert "'c'" in sv.detail and "red" in sv.detail

    def test_relaxed_policy_counts_skips(self, star_graph):
        report = gap_report(star_graph, backend=EXACT, singular_policy="relaxed")
        # the only red node has no red neighbor: skipped, nobody left
        assert report.red.mu_sing_same.code == "no-eligible-nodes"
        assert report.red.sing_same_skipped == 1
        # blue seen by blue: every leaf lacks blue neighbors
        assert report.blue.sing_same_skipped == 3

    def test_bad_backend_rejected(self, diamond_graph):
        with pytest.raises(ValueError, match="backend"):
            gap_report(diamond_graph, backend="decimal")
        with pytest.raises(ValueError, match="policy"):
            gap_report(diamond_graph, singular_policy="loose")


class TestGapReportFloat:
    def test_matches_exact_on_diamond(self, diamond_graph):
        exact = gap_report(diamond_graph, backend=EXACT)
        flt = gap_report(diamond_graph, backend=FLOAT)
        for name in ("mu_list_same", "mu_list_other", "mu_sing_same", "mu_sing_other"):
            e = getattr(exact.red, name).value
            f = getattr(flt.red, name).value
            assert f == pytest.approx(float(e), abs=1e-12)
        assert flt.red.gap_list.value == pytest.approx(1 / 36, abs=1e-12)
        assert flt.backend == FLOAT

    def test_sign_tolerance(self):
        assert StatValue.defined(5e-13).sign(FLOAT) == "zero"
        assert StatValue.defined(5e-13).sign(EXACT) == "positive"
        assert StatValue.defined(-1e-6).sign(FLOAT) == "negative"

    def test_matches_exact_on_hub(self, hub_graph):
        exact = gap_report(hub_graph, backend=EXACT, singular_policy="relaxed")
        flt = gap_report(hub_graph, backend=FLOAT, singular_policy="relaxed")
        assert flt.red.mu_list_same.value == pytest.approx(51 / 200, abs=1e-12)
        assert flt.red.mu_sing_same.value == pytest.approx(float(F(13, 75)), abs=1e-12)
        assert flt.red.gap_list.value == pytest.approx(float(exact.red.gap_list.value), abs=1e-12)


class TestReportSerialization:
    def test_exact_json_fractions(self, diamond_graph):
        data = gap_report(diamond_graph, backend=EXACT).to_json_dict()
        red = data["red"]
        assert red["gap_list"]["exact"] == "1/36"
        assert red["gap_list"]["sign"] == "positive"
        assert red["mu_list_same"]["exact"] == "5/12"
        assert red["mu_list_same"]["value"] == pytest.approx(5 / 12)
        assert red["lambda"]["exact"] == "5/12"
        assert data["backend"] == "exact"

    def test_undefined_json_reason(self, star_graph):
        data = gap_report(star_graph, backend=EXACT, singular_policy="strict").to_json_dict()
        entry = data["red"]["mu_list_same"]
        assert entry == {"status": "undefined", "code": "no-red-red-edges"}
        sing = data["red"]["mu_sing_same"]
        assert sing["status"] == "undefined"
        assert sing["code"] == "unpruned-node"
        assert "detail" in sing

    def test_float_json_has_no_exact_field(self, diamond_graph):
        data = gap_report(diamond_graph, backend=FLOAT).to_json_dict()
        assert "exact" not in data["red"]["gap_list"]
        assert data["red"]["gap_list"]["value"] == pytest.approx(1 / 36)


class TestBalanceCheck:
    def test_diamond(self, diamond_graph):
        result = balance_check(diamond_graph)
        assert (result.lhs, result.rhs, result.cross_edges) == (3, 3, 3)
        assert result.holds

    def test_monochromatic(self):
        g = graph_from_edges([("a", "b")], {"a": RED, "b": RED})
        result = balance_check(g)
        assert (result.lhs, result.rhs) == (0, 0)
        assert result.holds

    def test_star(self, star_graph):
        result = balance_check(star_graph)
        assert result.lhs == result.rhs == result.cross_edges == 3
        assert result.holds

    def test_hub(self, hub_graph):
        result = balance_check(hub_graph)
        assert result.holds
        assert result.cross_edges == oracles.cross_edge_count(hub_graph)


class TestSecondVsFirst:
    def test_diamond_red_list_zero(self, diamond_graph):
        profile = first_order_homophily(diamond_graph)
        diff = second_vs_first(diamond_graph, profile, RED)
        assert diff.list_version.value == 0
        assert diff.list_version.sign() == "zero"

    def test_hub_both_negative(self, hub_graph):
        profile = first_order_homophily(hub_graph)
        diff = second_vs_first(hub_graph, profile, RED)
        assert diff.list_version.value == F(51, 200) - F(101, 300) == F(-49, 600)
        assert diff.singular_version.value == F(13, 75) - F(101, 300) == F(-49, 300)
        assert diff.list_version.sign() == "negative"
        assert diff.singular_version.sign() == "negative"

    def test_undefined_propagates(self, star_graph):
        profile = first_order_homophily(star_graph)
        diff = second_vs_first(star_graph, profile, RED)
        assert not diff.list_version.is_defined
        assert diff.list_version.code == "undefined-operand"


class TestFriendshipParadox:
    def test_star(self, star_graph):
        stats = friendship_paradox_stats(star_graph)
        assert stats.mean_degree.value == F(3, 2)
        assert stats.mean_neighbor_degree_list.value == 2
        assert stats.mean_neighbor_degree_singular.value == F(5, 2)

    def test_diamond(self, diamond_graph):
        stats = friendship_paradox_stats(diamond_graph)
        assert stats.mean_degree.value == F(5, 2)
        assert stats.mean_neighbor_degree_list.value == F(13, 5)
        assert stats.mean_neighbor_degree_list.value > stats.mean_degree.value

    def test_list_mean_matches_pool(self, diamond_graph, hub_graph, star_graph):
        for g in (diamond_graph, hub_graph, star_graph):
            pool = oracles.neighbor_degree_pool(g)
            stats = friendship_paradox_stats(g)
            assert stats.mean_neighbor_degree_list.value == oracles.mean(
                F(d) for d in pool
            )

    def test_regular_graph_equality(self, uniform_half_graph):
        stats = friendship_paradox_stats(uniform_half_graph)
        assert stats.mean_degree.value == 2
        assert stats.mean_neighbor_degree_list.value == 2

    def test_degree_homophily_correlation(self, diamond_graph):
        stats = friendship_paradox_stats(diamond_graph)
        # degrees (3, 2) with h (1/3, 1/2): perfectly anticorrelated
        assert stats.degree_homophily_correlation_red.value == pytest.approx(-1.0)
        assert stats.degree_homophily_correlation_blue.value == pytest.approx(-1.0)

    def test_zero_variance_correlation_undefined(self, uniform_half_graph):
        stats = friendship_paradox_stats(uniform_half_graph)
        assert stats.degree_homophily_correlation_red.code == "zero-variance"

    def test_empty_side_undefined(self):
        g = graph_from_edges([("a", "b")], {"a": RED, "b": RED})
        stats = friendship_paradox_stats(g)
        assert stats.degree_homophily_correlation_blue.code == "too-few-points"


class TestPearson:
    def test_perfect_positive(self):
        assert pearson((1, 2, 3), (2, 4, 6)) == pytest.approx(1.0)

    def test_perfect_negative(self):
        assert pearson((1, 2, 3), (3, 2, 1)) == pytest.approx(-1.0)

    def test_half(self):
        assert pearson((1, 2, 3), (1, 3, 2)) == pytest.approx(0.5)

    def test_mismatched_lengths(self):
        with pytest.raises(ValueError):
            pearson((1, 2), (1, 2, 3))

    def test_too_short(self):
        with pytest.raises(ValueError):
            pearson((1,), (2,))

    def test_zero_variance_none(self):
        assert pearson((1, 1, 1), (1, 2, 3)) is None
        assert pearson((1, 2, 3), (5, 5, 5)) is None

    def test_never_outside_unit_interval(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            xs = rng.normal(size=5)
            r = pearson(xs, 2.0 * xs + 1e-9 * rng.normal(size=5))
            assert -1.0 <= r <= 1.0


class TestVerifyGapTheorem:
    def test_diamond_two_checks(self, diamond_graph):
        assert verify_gap_theorem(diamond_graph) == 2

    def test_uniform_graph_zero_gap_check(self, uniform_half_graph):
        assert verify_gap_theorem(uniform_half_graph) == 2

    def test_hub_checks_red_only(self, hub_graph):
        # blue has zero diversity and no blue-blue edges: nothing to check
        assert verify_gap_theorem(hub_graph) == 1

    def test_pairwise_sum_sign_matches_gap(self, diamond_graph, hub_graph):
        for g in (diamond_graph, hub_graph):
            report = gap_report(g, backend=EXACT, singular_policy="relaxed")
            for color, side in ((RED, report.red), (BLUE, report.blue)):
                pairwise = oracles.pairwise_term_sum(g, color)
                if side.gap_list.is_defined:
                    gap = side.gap_list.value
                    assert (gap > 0) == (pairwise > 0)
                    assert (gap == 0) == (pairwise == 0)
