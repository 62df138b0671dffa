"""Shared fixtures: small graphs with hand-computed homophily statistics."""

import pytest

from homophily_gap.graph import BLUE, RED, build_graph

TWO_COLOR_LABELS = {"red": RED, "blue": BLUE}

# Populated by tests/test_acceptance.py; echoed after the run so the
# per-criterion verdicts survive pytest's output capture.
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def graph_from_edges(edges, colors):
    """Build a graph from integer-free string edges and a color dict."""
    attributes = {node: ("red" if color is RED else "blue") for node, color in colors.items()}
    graph, report = build_graph(edges, attributes, TWO_COLOR_LABELS)
    assert report.is_clean
    return graph


@pytest.fixture
def diamond_graph():
    """Four nodes, five edges; two colors interleaved.

    Nodes 1, 2 red and 3, 4 blue; edges 1-2, 1-3, 1-4, 2-3, 3-4.  Degrees
    (3, 2, 3, 2), red homophilies (1/3, 1/2).  Swapping 1<->3 and 2<->4
    maps the graph onto itself with colors exchanged, so every red-side
    statistic equals its blue-side counterpart.
    """
    return graph_from_edges(
        [("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("3", "4")],
        {"1": RED, "2": RED, "3": BLUE, "4": BLUE},
    )


@pytest.fixture
def hub_graph():
    """A red hub with 198 blue leaves plus two red satellites.

    Hub x has degree 200: red neighbors a and b plus 198 blue leaves.
    Satellites a and b each have one extra blue leaf, so 200 blue nodes in
    total, each with a single red neighbor (blue homophily is 0 everywhere).
    Red homophilies: h_x = 2/200 = 1/100, h_a = h_b = 1/2.
    """
    edges = [("x", "a"), ("x", "b")]
    colors = {"x": RED, "a": RED, "b": RED}
    for i in range(198):
        leaf = f"lx{i}"
        edges.append(("x", leaf))
        colors[leaf] = BLUE
    for sat in ("a", "b"):
        leaf = f"l{sat}"
        edges.append((sat, leaf))
        colors[leaf] = BLUE
    return graph_from_edges(edges, colors)


@pytest.fixture
def chain_graph():
    """Path r2 - r1 - b1 - b2; strict pruning takes three scans to finish.

    r2 has no blue neighbor and b2 no red one, so scan 1 drops both.
    That leaves the cross edge r1 - b1, where r1 now lacks a red neighbor
    and b1 a blue one: scan 2 drops them too.  Scan 3 confirms the empty
    graph is stable.
    """
    return graph_from_edges(
        [("r1", "r2"), ("r1", "b1"), ("b1", "b2")],
        {"r1": RED, "r2": RED, "b1": BLUE, "b2": BLUE},
    )


@pytest.fixture
def star_graph():
    """K_{1,3}: red center, three blue leaves."""
    return graph_from_edges(
        [("c", "l1"), ("c", "l2"), ("c", "l3")],
        {"c": RED, "l1": BLUE, "l2": BLUE, "l3": BLUE},
    )
