"""Iterative pruning to a bichromatic core.

Singular second-order statistics need every observer to actually have a
neighbor of the observed color, so before analysis a graph is repeatedly
scanned and every node lacking a required-color neighbor removed, until a
scan removes nobody.  All currently non-compliant nodes are removed
simultaneously within a scan; this makes the result independent of node
order, and it is the unique maximal subgraph with the property (compliant
node sets are closed under union).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from homophily_gap.graph import NodeColor, TypedGraph, induced_subgraph

__all__ = [
    "PruneResult",
    "RetentionStats",
    "prune_bichromatic",
    "drop_isolated",
    "retention_stats",
]


@dataclass(frozen=True)
class PruneResult:
    """Outcome of pruning: the core graph plus removal accounting.

    ``passes`` counts scans including the final scan that found nothing
    to remove, so an already-compliant graph reports 1.  Homophily must
    be recomputed on ``graph``; values from the unpruned graph are stale.
    """

    graph: TypedGraph
    passes: int
    removed_node_ids: tuple[str, ...]
    retained_fraction: Fraction

    def to_json_dict(self) -> dict:
        return {
            "passes": self.passes,
            "removed_nodes": len(self.removed_node_ids),
            "removed_node_ids": list(self.removed_node_ids),
            "retained_nodes": self.graph.n,
            "retained_fraction": float(self.retained_fraction),
        }


def prune_bichromatic(
    graph: TypedGraph, required: Iterable[NodeColor]
) -> PruneResult:
    """Remove nodes until everyone has a neighbor of each required color.

    ``required`` may be one color or both; it must not be empty.  The
    result can be the empty graph.
    """
    required = frozenset(required)
    if not required:
        raise ValueError("required color set must not be empty")
    n = graph.n
    alive = np.ones(n, dtype=bool)
    src = np.repeat(np.arange(n, dtype=np.int64), graph.degrees)
    dst = graph.indices
    removed: list[str] = []
    passes = 0
    while True:
        passes += 1
        live_edge = alive[src] & alive[dst]
        compliant = alive.copy()
        for color in required:
            endpoint_ok = live_edge & (graph.colors[dst] == int(color))
            has_color = np.zeros(n, dtype=bool)
            has_color[src[endpoint_ok]] = True
            compliant &= has_color
        doomed = alive & ~compliant
        if not doomed.any():
            break
        removed.extend(graph.node_ids[i] for i in np.flatnonzero(doomed).tolist())
        alive &= ~doomed
    pruned = induced_subgraph(graph, np.flatnonzero(alive))
    retained = Fraction(pruned.n, n) if n else Fraction(1)
    return PruneResult(
        graph=pruned,
        passes=passes,
        removed_node_ids=tuple(removed),
        retained_fraction=retained,
    )


def drop_isolated(graph: TypedGraph) -> tuple[TypedGraph, tuple[str, ...]]:
    """Remove degree-0 nodes; sufficient clean-up for list-version statistics."""
    keep = np.flatnonzero(graph.degrees > 0)
    dropped = tuple(graph.node_ids[i] for i in np.flatnonzero(graph.degrees == 0).tolist())
    if not dropped:
        return graph, ()
    return induced_subgraph(graph, keep), dropped


@dataclass(frozen=True)
class RetentionStats:
    labeled_fraction: Fraction
    retained_fraction: Fraction

    def to_json_dict(self) -> dict:
        return {
            "labeled_fraction": float(self.labeled_fraction),
            "retained_fraction": float(self.retained_fraction),
        }


def retention_stats(
    before: TypedGraph, after: PruneResult, unlabeled_dropped: int = 0
) -> RetentionStats:
    """How much of the input survived labeling and pruning.

    ``unlabeled_dropped`` is the count from the build-time validation
    report; ``before`` itself contains only labeled nodes.  Raises on an
    empty ``before`` graph (both ratios would be 0/0).
    """
    labeled = Fraction(before.n, before.n + unlabeled_dropped)
    retained = Fraction(after.graph.n, before.n)
    return RetentionStats(labeled_fraction=labeled, retained_fraction=retained)
