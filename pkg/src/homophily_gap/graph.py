"""Two-colored undirected graphs: construction, validation, and file I/O.

A :class:`TypedGraph` is an immutable simple undirected graph in which every
node carries one of two colors (red or blue).  Graphs are built from raw
edge/attribute inputs by :func:`build_graph`, which enforces simple-graph
semantics: self-loops are removed, duplicate edges collapsed, and nodes
without a color label are dropped together with their incident edges.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "NodeColor",
    "RED",
    "BLUE",
    "GraphInputError",
    "ValidationReport",
    "TypedGraph",
    "build_graph",
    "validate",
    "count_edges_between",
    "induced_subgraph",
    "read_edge_list",
    "read_attributes",
    "write_edge_list",
    "write_attributes",
    "load_graph",
]


class NodeColor(IntEnum):
    """One of the two node types."""

    RED = 0
    BLUE = 1

    @property
    def other(self) -> "NodeColor":
        return NodeColor.BLUE if self is NodeColor.RED else NodeColor.RED

    def __str__(self) -> str:  # "red" / "blue" in messages and JSON
        return self.name.lower()


RED = NodeColor.RED
BLUE = NodeColor.BLUE


class GraphInputError(ValueError):
    """Raw edge/attribute input cannot form a valid two-colored graph."""


@dataclass(frozen=True)
class ValidationReport:
    """Counts of the clean-up actions taken (or violations found) for a graph.

    ``violations`` is empty for a well-formed graph; :func:`validate` fills it
    with human-readable descriptions when an invariant does not hold.
    """

    self_loops_removed: int = 0
    duplicate_edges_collapsed: int = 0
    unlabeled_nodes_dropped: int = 0
    isolated_nodes: int = 0
    violations: tuple[str, ...] = ()

    @property
    def is_clean(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "self_loops_removed": self.self_loops_removed,
            "duplicate_edges_collapsed": self.duplicate_edges_collapsed,
            "unlabeled_nodes_dropped": self.unlabeled_nodes_dropped,
            "isolated_nodes": self.isolated_nodes,
            "violations": list(self.violations),
        }


@dataclass(frozen=True, eq=False)
class TypedGraph:
    """Immutable simple undirected graph with a two-valued color per node.

    Adjacency is stored in compressed sparse rows: the neighbors of node
    ``i`` are ``indices[indptr[i]:indptr[i + 1]]``, sorted ascending.
    Instances are safe for concurrent read access; the backing arrays are
    marked read-only.  Use :func:`build_graph` or the generator module to
    construct one - the constructor itself performs no validation (so that
    :func:`validate` can be exercised on deliberately broken instances).
    """

    node_ids: tuple[str, ...]
    colors: np.ndarray  # uint8, NodeColor values
    indptr: np.ndarray  # int64, length n + 1
    indices: np.ndarray  # int64, concatenated per-node sorted neighbor lists

    def __post_init__(self) -> None:
        for arr in (self.colors, self.indptr, self.indices):
            arr.setflags(write=False)

    # -- basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.node_ids)

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @cached_property
    def id_to_index(self) -> dict[str, int]:
        return {node_id: i for i, node_id in enumerate(self.node_ids)}

    def degree(self, node: int) -> int:
        self._check_index(node)
        return int(self.indptr[node + 1] - self.indptr[node])

    def neighbors(self, node: int) -> np.ndarray:
        """Sorted, duplicate-free neighbor indices of ``node`` (read-only)."""
        self._check_index(node)
        return self.indices[self.indptr[node] : self.indptr[node + 1]]

    def color(self, node: int) -> NodeColor:
        self._check_index(node)
        return NodeColor(int(self.colors[node]))

    def nodes_of(self, color: NodeColor) -> np.ndarray:
        return np.flatnonzero(self.colors == int(color))

    def edges_array(self) -> tuple[np.ndarray, np.ndarray]:
        """All edges as parallel arrays ``(u, v)`` with ``u < v``, each once."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        mask = src < self.indices
        return src[mask], self.indices[mask]

    def edges(self) -> Iterable[tuple[int, int]]:
        u, v = self.edges_array()
        return zip(u.tolist(), v.tolist())

    def _check_index(self, node: int) -> None:
        if not 0 <= node < self.n:
            raise IndexError(f"node index {node} out of range [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TypedGraph):
            return NotImplemented
        return (
            self.node_ids == other.node_ids
            and np.array_equal(self.colors, other.colors)
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    __hash__ = None  # type: ignore[assignment]  # mutable-array payload

    def __repr__(self) -> str:
        reds = int(np.sum(self.colors == int(RED)))
        return (
            f"TypedGraph(n={self.n}, red={reds}, blue={self.n - reds}, "
            f"edges={self.edge_count})"
        )

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_neighbor_lists(
        cls,
        node_ids: Sequence[str],
        colors: Sequence[NodeColor] | np.ndarray,
        neighbor_lists: Sequence[Sequence[int]],
    ) -> "TypedGraph":
        """Assemble a graph from explicit per-node neighbor lists (unchecked)."""
        indptr = np.zeros(len(node_ids) + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(nbrs) for nbrs in neighbor_lists])
        if len(neighbor_lists) > 0:
            flat = np.concatenate(
                [np.asarray(sorted(nbrs), dtype=np.int64) for nbrs in neighbor_lists]
            ) if any(len(n) for n in neighbor_lists) else np.empty(0, dtype=np.int64)
        else:
            flat = np.empty(0, dtype=np.int64)
        return cls(
            node_ids=tuple(node_ids),
            colors=np.asarray([int(c) for c in colors], dtype=np.uint8),
            indptr=indptr,
            indices=flat,
        )

    @classmethod
    def from_edge_arrays(
        cls,
        node_ids: Sequence[str],
        colors: np.ndarray,
        u: np.ndarray,
        v: np.ndarray,
    ) -> "TypedGraph":
        """Assemble a graph from edge endpoint arrays (one entry per edge)."""
        n = len(node_ids)
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        order = np.lexsort((dst, src))
        indices = dst[order].astype(np.int64, copy=False)
        counts = np.bincount(src, minlength=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(counts)
        return cls(
            node_ids=tuple(node_ids),
            colors=np.asarray(colors, dtype=np.uint8),
            indptr=indptr,
            indices=indices,
        )


def build_graph(
    edges: Iterable[tuple[str, str]],
    attributes: Mapping[str, str],
    label_map: Mapping[str, NodeColor],
) -> tuple[TypedGraph, ValidationReport]:
    """Build a validated :class:`TypedGraph` from raw edges and labels.

    Endpoints without a usable label (missing from ``attributes`` or mapped
    to an empty label) are dropped along with their incident edges.
    Self-loops are removed and duplicate edges collapsed; every action is
    counted in the returned :class:`ValidationReport`.  Dense node indices
    are assigned in first-seen order over the edge list, so identical input
    yields an identical graph.

    Raises :class:`GraphInputError` for empty/invalid endpoint ids, for a
    label that is not present in ``label_map``, and when no labeled node
    remains.
    """
    color_of: dict[str, NodeColor] = {}
    for node_id, raw_label in attributes.items():
        if raw_label is None or raw_label == "":
            continue  # unlabeled
        try:
            color_of[node_id] = label_map[raw_label]
        except KeyError:
            raise GraphInputError(
                f"node {node_id!r} has label {raw_label!r} which is not in the "
                f"label map {sorted(label_map)!r}"
            ) from None

    index_of: dict[str, int] = {}
    ids: list[str] = []
    colors: list[NodeColor] = []
    edge_keys: set[tuple[int, int]] = set()
    unlabeled_seen: set[str] = set()
    self_loops = 0
    duplicates = 0

    def intern(node_id: str) -> int:
        idx = index_of.get(node_id)
        if idx is None:
            idx = len(ids)
            index_of[node_id] = idx
            ids.append(node_id)
            colors.append(color_of[node_id])
        return idx

    for a, b in edges:
        if not isinstance(a, str) or not isinstance(b, str) or not a or not b:
            raise GraphInputError(f"edge endpoints must be nonempty strings, got ({a!r}, {b!r})")
        a_labeled = a in color_of
        b_labeled = b in color_of
        if not a_labeled:
            unlabeled_seen.add(a)
        if not b_labeled:
            unlabeled_seen.add(b)
        # Labeled endpoints join the node set even when the edge is dropped.
        ia = intern(a) if a_labeled else None
        ib = intern(b) if b_labeled else None
        if ia is None or ib is None:
            continue
        if ia == ib:
            self_loops += 1
            continue
        key = (ia, ib) if ia < ib else (ib, ia)
        if key in edge_keys:
            duplicates += 1
        else:
            edge_keys.add(key)

    if not ids:
        raise GraphInputError("no labeled nodes found in the edge list")

    neighbor_sets: list[list[int]] = [[] for _ in ids]
    for ia, ib in edge_keys:
        neighbor_sets[ia].append(ib)
        neighbor_sets[ib].append(ia)
    graph = TypedGraph.from_neighbor_lists(ids, colors, neighbor_sets)
    report = ValidationReport(
        self_loops_removed=self_loops,
        duplicate_edges_collapsed=duplicates,
        unlabeled_nodes_dropped=len(unlabeled_seen),
        isolated_nodes=int(np.sum(graph.degrees == 0)),
    )
    return graph, report


def validate(graph: TypedGraph) -> ValidationReport:
    """Re-verify all :class:`TypedGraph` invariants.

    Returns a report whose ``violations`` tuple is empty for a clean graph;
    ``isolated_nodes`` is informational and not a violation.
    """
    violations: list[str] = []
    n = graph.n
    if len(graph.indptr) != n + 1:
        violations.append(f"indptr has length {len(graph.indptr)}, expected {n + 1}")
    elif graph.indptr[0] != 0 or graph.indptr[-1] != len(graph.indices):
        violations.append("indptr does not span the indices array")
    elif np.any(np.diff(graph.indptr) < 0):
        violations.append("indptr is not monotone")
    else:
        if len(graph.colors) != n:
            violations.append(f"{len(graph.colors)} colors for {n} nodes")
        elif not np.all(np.isin(graph.colors, (int(RED), int(BLUE)))):
            violations.append("colors contain values other than red/blue")
        if len(set(graph.node_ids)) != n:
            violations.append("duplicate external node ids")
        pair_set: set[tuple[int, int]] = set()
        for i in range(n):
            nbrs = graph.indices[graph.indptr[i] : graph.indptr[i + 1]]
            if np.any((nbrs < 0) | (nbrs >= n)):
                violations.append(f"node {i} has a neighbor index out of range")
                continue
            if np.any(nbrs == i):
                violations.append(f"node {i} has a self-loop")
            if len(nbrs) > 1 and np.any(np.diff(nbrs) <= 0):
                violations.append(f"neighbor list of node {i} is not strictly sorted")
            for j in nbrs.tolist():
                pair_set.add((i, j))
        for i, j in pair_set:
            if (j, i) not in pair_set:
                violations.append(f"edge {i}->{j} has no mirror {j}->{i}")
                break
    isolated = int(np.sum(np.diff(graph.indptr) == 0)) if len(graph.indptr) == n + 1 else 0
    return ValidationReport(isolated_nodes=isolated, violations=tuple(violations))


def induced_subgraph(graph: TypedGraph, keep: np.ndarray) -> TypedGraph:
    """Subgraph on the node indices in ``keep`` (kept in index order)."""
    keep = np.asarray(keep, dtype=np.int64)
    new_index = np.full(graph.n, -1, dtype=np.int64)
    new_index[keep] = np.arange(len(keep), dtype=np.int64)
    u, v = graph.edges_array()
    mask = (new_index[u] >= 0) & (new_index[v] >= 0)
    return TypedGraph.from_edge_arrays(
        node_ids=tuple(graph.node_ids[i] for i in keep.tolist()),
        colors=graph.colors[keep],
        u=new_index[u[mask]],
        v=new_index[v[mask]],
    )


def count_edges_between(graph: TypedGraph, a: NodeColor, b: NodeColor) -> int:
    """Number of edges with one end of color ``a`` and the other of color ``b``.

    For ``a == b`` each monochromatic edge is counted once.
    """
    u, v = graph.edges_array()
    cu = graph.colors[u]
    cv = graph.colors[v]
    if a == b:
        return int(np.sum((cu == int(a)) & (cv == int(a))))
    return int(np.sum(((cu == int(a)) & (cv == int(b))) | ((cu == int(b)) & (cv == int(a)))))


# -- file formats ---------------------------------------------------------
#
# Edge list: UTF-8 text, one edge per line, two whitespace-separated node
# ids; lines starting with '#' are ignored.  Attributes: CSV with header
# ``node_id,type``; a missing row or empty type field means unlabeled.


def read_edge_list(path: str | Path) -> list[tuple[str, str]]:
    edges: list[tuple[str, str]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise GraphInputError(
                    f"{path}:{lineno}: expected two whitespace-separated node ids, "
                    f"got {len(parts)} fields"
                )
            edges.append((parts[0], parts[1]))
    return edges


def read_attributes(path: str | Path) -> dict[str, str]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"node_id", "type"} <= set(reader.fieldnames):
            raise GraphInputError(
                f"{path}: attribute file must have a 'node_id,type' header, "
                f"got {reader.fieldnames}"
            )
        attributes: dict[str, str] = {}
        for row in reader:
            node_id = row["node_id"]
            if node_id is None or node_id == "":
                continue
            attributes[node_id] = row["type"] or ""
    return attributes


def write_edge_list(graph: TypedGraph, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# edge list: node_id node_id\n")
        for u, v in graph.edges():
            fh.write(f"{graph.node_ids[u]} {graph.node_ids[v]}\n")


def write_attributes(
    graph: TypedGraph,
    path: str | Path,
    color_labels: Mapping[NodeColor, str] | None = None,
) -> None:
    labels = color_labels or {RED: "red", BLUE: "blue"}
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["node_id", "type"])
        for i, node_id in enumerate(graph.node_ids):
            writer.writerow([node_id, labels[graph.color(i)]])


def load_graph(
    edges_path: str | Path,
    attrs_path: str | Path,
    red_label: str,
    blue_label: str,
) -> tuple[TypedGraph, ValidationReport]:
    """Load a graph from an edge-list file and an attribute CSV."""
    if red_label == blue_label:
        raise GraphInputError("red and blue labels must differ")
    edges = read_edge_list(edges_path)
    attributes = read_attributes(attrs_path)
    return build_graph(edges, attributes, {red_label: RED, blue_label: BLUE})
