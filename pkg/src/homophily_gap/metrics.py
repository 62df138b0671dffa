"""First- and second-order homophily statistics on two-colored graphs.

First-order homophily of a node is the fraction of its neighbors sharing
its color.  Second-order homophily looks one step further: the homophily
values a node observes on its color-C neighbors, either as a concatenated
list pooled over observers (list version) or averaged per observer first
(singular version).  The central quantity is the gap between what same-
and cross-color observers see; with positive homophily diversity the list
version of that gap is strictly positive.

Two numeric backends are provided.  The exact backend works in arbitrary
precision rationals so strict inequalities can be asserted with zero
tolerance; the float backend is binary64 throughout and is meant for
large generated ensembles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from homophily_gap.graph import BLUE, RED, NodeColor, TypedGraph

__all__ = [
    "EXACT",
    "FLOAT",
    "FLOAT_ZERO_TOL",
    "StatValue",
    "HomophilyProfile",
    "ColorGapReport",
    "GapReport",
    "BalanceCheck",
    "SecondVsFirst",
    "FriendshipParadoxStats",
    "TheoremViolationError",
    "first_order_homophily",
    "second_order_list",
    "second_order_singular",
    "gap_report",
    "balance_check",
    "second_vs_first",
    "friendship_paradox_stats",
    "pearson",
    "verify_gap_theorem",
]

EXACT = "exact"
FLOAT = "float"

# Absolute tolerance for calling a float-backend quantity zero; covers
# binary64 accumulation error over sums of up to ~1e7 terms.
FLOAT_ZERO_TOL = 1e-12

# Machine-readable reason codes for undefined statistics.
CODE_NO_CROSS_EDGES = "no-cross-edges"
CODE_NO_ELIGIBLE = "no-eligible-nodes"
CODE_NO_NODES = "no-nodes"
CODE_NO_DEFINED = "no-defined-values"
CODE_UNPRUNED = "unpruned-node"
CODE_UNDEFINED_OPERAND = "undefined-operand"
CODE_TOO_FEW_POINTS = "too-few-points"
CODE_ZERO_VARIANCE = "zero-variance"


def _check_backend(backend: str) -> None:
    if backend not in (EXACT, FLOAT):
        raise ValueError(f"unknown backend {backend!r}; expected {EXACT!r} or {FLOAT!r}")


def _no_edge_code(seed: NodeColor, target: NodeColor) -> str:
    if seed == target:
        return f"no-{seed}-{seed}-edges"
    return CODE_NO_CROSS_EDGES


class TheoremViolationError(RuntimeError):
    """An exact-backend check contradicted the positive-gap theorem.

    This never fires on a correct implementation; it exists so that
    verification runs abort loudly instead of reporting a silent pass.
    """


@dataclass(frozen=True)
class StatValue:
    """A statistic that is either a defined value or undefined with a reason.

    ``value`` is a :class:`fractions.Fraction` under the exact backend and
    a ``float`` under the float backend; ``None`` means undefined, in
    which case ``code`` holds a stable machine-readable reason and
    ``detail`` an optional human-readable amplification.
    """

    value: Fraction | float | None
    code: str | None = None
    detail: str | None = None

    @classmethod
    def defined(cls, value) -> "StatValue":
        return cls(value=value)

    @classmethod
    def undefined(cls, code: str, detail: str | None = None) -> "StatValue":
        return cls(value=None, code=code, detail=detail)

    @property
    def is_defined(self) -> bool:
        return self.value is not None

    def as_float(self) -> float:
        if self.value is None:
            return math.nan
        return float(self.value)

    def sign(self, backend: str = EXACT) -> str | None:
        """Classify the value as positive, zero, or negative.

        Float-backend values within ``FLOAT_ZERO_TOL`` of zero count as
        zero; exact values are compared exactly.  Returns None when
        undefined.
        """
        if self.value is None:
            return None
        if backend == FLOAT:
            v = float(self.value)
            if abs(v) <= FLOAT_ZERO_TOL:
                return "zero"
            return "positive" if v > 0 else "negative"
        if self.value == 0:
            return "zero"
        return "positive" if self.value > 0 else "negative"

    def to_json_dict(self, backend: str = EXACT, with_sign: bool = False) -> dict:
        if self.value is None:
            out: dict = {"status": "undefined", "code": self.code}
            if self.detail:
                out["detail"] = self.detail
            return out
        out = {"status": "defined", "value": float(self.value)}
        if isinstance(self.value, Fraction):
            out["exact"] = f"{self.value.numerator}/{self.value.denominator}"
        if with_sign:
            out["sign"] = self.sign(backend)
        return out


def _mean_exact(values: Sequence[Fraction]) -> Fraction:
    return sum(values, Fraction(0)) / len(values)


def _difference(a: StatValue, b: StatValue, names: tuple[str, str]) -> StatValue:
    if a.is_defined and b.is_defined:
        return StatValue.defined(a.value - b.value)
    missing = [name for name, v in zip(names, (a, b)) if not v.is_defined]
    return StatValue.undefined(CODE_UNDEFINED_OPERAND, detail=", ".join(missing) + " undefined")


@dataclass(frozen=True, eq=False)
class HomophilyProfile:
    """Per-node degree and same-color neighbor count, plus color summaries.

    First-order homophily h_i is same_counts[i] / degrees[i]; it is
    undefined for isolated nodes, which are excluded from the per-color
    mean and standard deviation and from every second-order aggregation.
    """

    colors: np.ndarray  # uint8 per node
    degrees: np.ndarray  # int64 per node
    same_counts: np.ndarray  # int64 per node, same_counts <= degrees

    @property
    def n(self) -> int:
        return len(self.degrees)

    @cached_property
    def defined_mask(self) -> np.ndarray:
        return self.degrees > 0

    @cached_property
    def h_float(self) -> np.ndarray:
        """h_i as binary64, NaN where undefined."""
        out = np.full(self.n, np.nan)
        m = self.defined_mask
        out[m] = self.same_counts[m] / self.degrees[m]
        return out

    @cached_property
    def h_exact(self) -> tuple[Fraction | None, ...]:
        """h_i as exact rationals, None where undefined."""
        return tuple(
            Fraction(int(s), int(d)) if d else None
            for s, d in zip(self.same_counts, self.degrees)
        )

    def count(self, color: NodeColor) -> int:
        return int(np.sum(self.colors == int(color)))

    def defined_nodes(self, color: NodeColor) -> np.ndarray:
        return np.flatnonzero((self.colors == int(color)) & self.defined_mask)

    def defined_count(self, color: NodeColor) -> int:
        return len(self.defined_nodes(color))

    # -- per-color summaries ---------------------------------------------

    def lambda_exact(self, color: NodeColor) -> Fraction | None:
        nodes = self.defined_nodes(color)
        if len(nodes) == 0:
            return None
        num = sum(Fraction(int(self.same_counts[i]), int(self.degrees[i])) for i in nodes)
        return num / len(nodes)

    def variance_exact(self, color: NodeColor) -> Fraction | None:
        """Population variance of defined h over the color, exactly."""
        nodes = self.defined_nodes(color)
        if len(nodes) == 0:
            return None
        hs = [Fraction(int(self.same_counts[i]), int(self.degrees[i])) for i in nodes]
        mean = _mean_exact(hs)
        return _mean_exact([(h - mean) ** 2 for h in hs])

    def has_diversity(self, color: NodeColor) -> bool:
        """True when the color's defined h values are not all equal."""
        var = self.variance_exact(color)
        return var is not None and var > 0

    def lambda_float(self, color: NodeColor) -> float:
        nodes = self.defined_nodes(color)
        if len(nodes) == 0:
            return math.nan
        return float(np.mean(self.h_float[nodes]))

    def sigma_float(self, color: NodeColor) -> float:
        """Population standard deviation (divide by count, not count-1)."""
        nodes = self.defined_nodes(color)
        if len(nodes) == 0:
            return math.nan
        return float(np.std(self.h_float[nodes]))


def first_order_homophily(graph: TypedGraph) -> HomophilyProfile:
    """Count same-color neighbors for every node."""
    degrees = graph.degrees.astype(np.int64)
    src = np.repeat(np.arange(graph.n, dtype=np.int64), degrees)
    same_edge = graph.colors[src] == graph.colors[graph.indices]
    same_counts = np.bincount(src[same_edge], minlength=graph.n).astype(np.int64)
    return HomophilyProfile(colors=graph.colors, degrees=degrees, same_counts=same_counts)


def second_order_list(
    graph: TypedGraph,
    profile: HomophilyProfile,
    seed_color: NodeColor,
    target_color: NodeColor,
) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Per-seed-node lists of target-color neighbor homophilies, plus their concatenation.

    One (possibly empty) list per node of ``seed_color``, in node-index
    order; entries are the exact first-order homophilies of that node's
    target-color neighbors, multiplicity preserved.
    """
    h = profile.h_exact
    per_node: list[list[Fraction]] = []
    concatenated: list[Fraction] = []
    target = int(target_color)
    for i in graph.nodes_of(seed_color):
        nbrs = graph.neighbors(i)
        values = [h[j] for j in nbrs[graph.colors[nbrs] == target].tolist()]
        per_node.append(values)
        concatenated.extend(values)
    return per_node, concatenated


def second_order_singular(
    graph: TypedGraph,
    profile: HomophilyProfile,
    node: int,
    target_color: NodeColor,
) -> Fraction | None:
    """Mean homophily over one node's target-color neighbors; None if it has none."""
    nbrs = graph.neighbors(node)
    picked = nbrs[graph.colors[nbrs] == int(target_color)]
    if len(picked) == 0:
        return None
    h = profile.h_exact
    return _mean_exact([h[j] for j in picked.tolist()])


# -- gap report -----------------------------------------------------------


@dataclass(frozen=True)
class ColorGapReport:
    """All second-order means and gaps for one observed color C.

    ``mu_list_same`` and ``mu_sing_same`` are what same-color observers
    see (seed C, observed C); the ``_other`` variants are what opposite-
    color observers see of C.  Gaps are same minus other.
    """

    color: NodeColor
    mu_list_same: StatValue
    mu_list_other: StatValue
    mu_sing_same: StatValue
    mu_sing_other: StatValue
    gap_list: StatValue
    gap_sing: StatValue
    lambda_: StatValue
    sigma: StatValue  # float sd even under the exact backend
    sigma_squared: StatValue  # exact under the exact backend
    node_count: int
    defined_count: int
    sing_same_skipped: int = 0
    sing_other_skipped: int = 0

    def to_json_dict(self, backend: str) -> dict:
        out = {
            "nodes": self.node_count,
            "nodes_with_degree": self.defined_count,
            "lambda": self.lambda_.to_json_dict(backend),
            "sigma": self.sigma.to_json_dict(backend),
            "sigma_squared": self.sigma_squared.to_json_dict(backend),
            "mu_list_same": self.mu_list_same.to_json_dict(backend),
            "mu_list_other": self.mu_list_other.to_json_dict(backend),
            "mu_sing_same": self.mu_sing_same.to_json_dict(backend),
            "mu_sing_other": self.mu_sing_other.to_json_dict(backend),
            "gap_list": self.gap_list.to_json_dict(backend, with_sign=True),
            "gap_sing": self.gap_sing.to_json_dict(backend, with_sign=True),
        }
        if self.sing_same_skipped or self.sing_other_skipped:
            out["singular_skipped"] = {
                "same_observers": self.sing_same_skipped,
                "other_observers": self.sing_other_skipped,
            }
        return out


@dataclass(frozen=True)
class GapReport:
    backend: str
    singular_policy: str
    red: ColorGapReport
    blue: ColorGapReport

    def for_color(self, color: NodeColor) -> ColorGapReport:
        return self.red if color is RED else self.blue

    def to_json_dict(self) -> dict:
        return {
            "backend": self.backend,
            "singular_policy": self.singular_policy,
            "red": self.red.to_json_dict(self.backend),
            "blue": self.blue.to_json_dict(self.backend),
        }


def _list_means_exact(profile: HomophilyProfile, color: NodeColor) -> tuple[StatValue, StatValue]:
    """Closed-form list-version means for observed color, exact backend.

    Every C-C edge contributes each endpoint's h once to the same-color
    mean (h_j appears d_j*h_j times in the pooled list), and every cross
    edge contributes the C endpoint's h once to the other-color mean, so
    both means reduce to ratios of integer-weighted sums over C nodes.
    """
    nodes = profile.defined_nodes(color)
    num_same = Fraction(0)
    num_other = Fraction(0)
    den_same = 0
    den_other = 0
    for i in nodes.tolist():
        s = int(profile.same_counts[i])
        d = int(profile.degrees[i])
        num_same += Fraction(s * s, d)
        num_other += Fraction(s * (d - s), d)
        den_same += s
        den_other += d - s
    same = (
        StatValue.defined(num_same / den_same)
        if den_same
        else StatValue.undefined(_no_edge_code(color, color))
    )
    other = (
        StatValue.defined(num_other / den_other)
        if den_other
        else StatValue.undefined(_no_edge_code(color.other, color))
    )
    return same, other


def _list_means_float(profile: HomophilyProfile, color: NodeColor) -> tuple[StatValue, StatValue]:
    nodes = profile.defined_nodes(color)
    s = profile.same_counts[nodes].astype(np.float64)
    d = profile.degrees[nodes].astype(np.float64)
    den_same = float(np.sum(s))
    den_other = float(np.sum(d - s))
    with np.errstate(invalid="ignore", divide="ignore"):
        num_same = float(np.sum(s * s / d)) if len(d) else 0.0
        num_other = float(np.sum(s * (d - s) / d)) if len(d) else 0.0
    same = (
        StatValue.defined(num_same / den_same)
        if den_same > 0
        else StatValue.undefined(_no_edge_code(color, color))
    )
    other = (
        StatValue.defined(num_other / den_other)
        if den_other > 0
        else StatValue.undefined(_no_edge_code(color.other, color))
    )
    return same, other


def _neighbor_h_sums_exact(
    graph: TypedGraph, profile: HomophilyProfile
) -> tuple[list[Fraction], list[Fraction]]:
    """Per node: sum of h over same-color and over cross-color neighbors."""
    h = profile.h_exact
    zero = Fraction(0)
    sum_same = [zero] * graph.n
    sum_cross = [zero] * graph.n
    colors = graph.colors
    for i in range(graph.n):
        ci = colors[i]
        acc_same = zero
        acc_cross = zero
        for j in graph.neighbors(i).tolist():
            if colors[j] == ci:
                acc_same += h[j]
            else:
                acc_cross += h[j]
        sum_same[i] = acc_same
        sum_cross[i] = acc_cross
    return sum_same, sum_cross


def _neighbor_h_sums_float(
    graph: TypedGraph, profile: HomophilyProfile
) -> tuple[np.ndarray, np.ndarray]:
    src = np.repeat(np.arange(graph.n, dtype=np.int64), graph.degrees)
    dst = graph.indices
    h_dst = profile.h_float[dst]
    same = graph.colors[src] == graph.colors[dst]
    sum_same = np.bincount(src[same], weights=h_dst[same], minlength=graph.n)
    sum_cross = np.bincount(src[~same], weights=h_dst[~same], minlength=graph.n)
    return sum_same, sum_cross


def _singular_mean(
    graph: TypedGraph,
    profile: HomophilyProfile,
    seed_color: NodeColor,
    target_color: NodeColor,
    backend: str,
    policy: str,
    neighbor_sums,
) -> tuple[StatValue, int]:
    """Mean over seed nodes of their per-node mean target-neighbor homophily.

    Returns the statistic and the number of seed nodes skipped (relaxed
    policy only).  Seed nodes without any neighbors at all are excluded
    outright rather than treated as policy violations.
    """
    sum_same, sum_cross = neighbor_sums
    seeds = profile.defined_nodes(seed_color)
    if len(seeds) == 0:
        return StatValue.undefined(CODE_NO_ELIGIBLE), 0
    if seed_color == target_color:
        target_counts = profile.same_counts[seeds]
    else:
        target_counts = profile.degrees[seeds] - profile.same_counts[seeds]
    missing = seeds[target_counts == 0]
    if len(missing) > 0:
        if policy == "strict":
            offender = int(missing[0])
            return (
                StatValue.undefined(
                    CODE_UNPRUNED,
                    detail=(
                        f"node {graph.node_ids[offender]!r} has no "
                        f"{target_color} neighbor"
                    ),
                ),
                0,
            )
        keep = target_counts > 0
        seeds = seeds[keep]
        target_counts = target_counts[keep]
        if len(seeds) == 0:
            return StatValue.undefined(CODE_NO_ELIGIBLE), int(len(missing))
    sums = sum_same if seed_color == target_color else sum_cross
    if backend == EXACT:
        per_node = [
            sums[i] / int(c) for i, c in zip(seeds.tolist(), target_counts.tolist())
        ]
        return StatValue.defined(_mean_exact(per_node)), int(len(missing))
    value = float(np.mean(sums[seeds] / target_counts))
    return StatValue.defined(value), int(len(missing))


def _color_report(
    graph: TypedGraph,
    profile: HomophilyProfile,
    color: NodeColor,
    backend: str,
    policy: str,
    neighbor_sums,
) -> ColorGapReport:
    if backend == EXACT:
        mu_list_same, mu_list_other = _list_means_exact(profile, color)
        lam = profile.lambda_exact(color)
        var = profile.variance_exact(color)
        lambda_sv = (
            StatValue.defined(lam) if lam is not None else StatValue.undefined(CODE_NO_DEFINED)
        )
        var_sv = (
            StatValue.defined(var) if var is not None else StatValue.undefined(CODE_NO_DEFINED)
        )
        sigma_sv = (
            StatValue.defined(math.sqrt(var)) if var is not None else StatValue.undefined(CODE_NO_DEFINED)
        )
    else:
        mu_list_same, mu_list_other = _list_means_float(profile, color)
        lam_f = profile.lambda_float(color)
        sig_f = profile.sigma_float(color)
        lambda_sv = (
            StatValue.defined(lam_f) if not math.isnan(lam_f) else StatValue.undefined(CODE_NO_DEFINED)
        )
        sigma_sv = (
            StatValue.defined(sig_f) if not math.isnan(sig_f) else StatValue.undefined(CODE_NO_DEFINED)
        )
        var_sv = (
            StatValue.defined(sig_f * sig_f)
            if not math.isnan(sig_f)
            else StatValue.undefined(CODE_NO_DEFINED)
        )
    mu_sing_same, skipped_same = _singular_mean(
        graph, profile, color, color, backend, policy, neighbor_sums
    )
    mu_sing_other, skipped_other = _singular_mean(
        graph, profile, color.other, color, backend, policy, neighbor_sums
    )
    gap_list = _difference(mu_list_same, mu_list_other, ("mu_list_same", "mu_list_other"))
    gap_sing = _difference(mu_sing_same, mu_sing_other, ("mu_sing_same", "mu_sing_other"))
    return ColorGapReport(
        color=color,
        mu_list_same=mu_list_same,
        mu_list_other=mu_list_other,
        mu_sing_same=mu_sing_same,
        mu_sing_other=mu_sing_other,
        gap_list=gap_list,
        gap_sing=gap_sing,
        lambda_=lambda_sv,
        sigma=sigma_sv,
        sigma_squared=var_sv,
        node_count=profile.count(color),
        defined_count=profile.defined_count(color),
        sing_same_skipped=skipped_same,
        sing_other_skipped=skipped_other,
    )


def gap_report(
    graph: TypedGraph,
    profile: HomophilyProfile | None = None,
    backend: str = EXACT,
    singular_policy: str = "strict",
) -> GapReport:
    """Compute all list/singular second-order means and gaps for both colors.

    Under the strict singular policy a seed node lacking a target-color
    neighbor makes the corresponding singular mean undefined, naming the
    offending node; the relaxed policy skips such nodes and records how
    many were skipped.  List-version means need no such condition.
    """
    _check_backend(backend)
    if singular_policy not in ("strict", "relaxed"):
        raise ValueError(f"unknown singular policy {singular_policy!r}")
    if profile is None:
        profile = first_order_homophily(graph)
    if backend == EXACT:
        neighbor_sums = _neighbor_h_sums_exact(graph, profile)
    else:
        neighbor_sums = _neighbor_h_sums_float(graph, profile)
    return GapReport(
        backend=backend,
        singular_policy=singular_policy,
        red=_color_report(graph, profile, RED, backend, singular_policy, neighbor_sums),
        blue=_color_report(graph, profile, BLUE, backend, singular_policy, neighbor_sums),
    )


# -- identities and contrasts ---------------------------------------------


@dataclass(frozen=True)
class BalanceCheck:
    """Both sides of the cross-edge counting identity, as exact integers."""

    lhs: int  # sum over red of degree minus same-color neighbors
    rhs: int  # same sum over blue
    cross_edges: int
    holds: bool

    def to_json_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "cross_edges": self.cross_edges,
            "holds": self.holds,
        }


def balance_check(graph: TypedGraph, profile: HomophilyProfile | None = None) -> BalanceCheck:
    """Verify that red and blue count the same number of cross edges.

    d_i*(1-h_i) is exactly the integer number of cross-color neighbors of
    node i, so both sides are integers and must equal |E(red, blue)|.
    """
    if profile is None:
        profile = first_order_homophily(graph)
    cross = profile.degrees - profile.same_counts
    lhs = int(np.sum(cross[profile.colors == int(RED)]))
    rhs = int(np.sum(cross[profile.colors == int(BLUE)]))
    u, v = graph.edges_array()
    count = int(np.sum(graph.colors[u] != graph.colors[v]))
    return BalanceCheck(lhs=lhs, rhs=rhs, cross_edges=count, holds=lhs == rhs == count)


@dataclass(frozen=True)
class SecondVsFirst:
    """Second-order minus first-order mean homophily for one color."""

    list_version: StatValue
    singular_version: StatValue

    def to_json_dict(self) -> dict:
        return {
            "list_version": self.list_version.to_json_dict(with_sign=True),
            "singular_version": self.singular_version.to_json_dict(with_sign=True),
        }


def second_vs_first(
    graph: TypedGraph,
    profile: HomophilyProfile,
    color: NodeColor,
    singular_policy: str = "strict",
) -> SecondVsFirst:
    """Signed differences mu_same - lambda for the list and singular versions.

    Either sign is possible: degree-homophily correlation can push the
    second-order mean below the first-order one.
    """
    report = gap_report(graph, profile, backend=EXACT, singular_policy=singular_policy)
    side = report.for_color(color)
    return SecondVsFirst(
        list_version=_difference(side.mu_list_same, side.lambda_, ("mu_list_same", "lambda")),
        singular_version=_difference(side.mu_sing_same, side.lambda_, ("mu_sing_same", "lambda")),
    )


@dataclass(frozen=True)
class FriendshipParadoxStats:
    """Degree analogue of the second-order contrast, plus mixing correlations."""

    mean_degree: StatValue
    mean_neighbor_degree_list: StatValue
    mean_neighbor_degree_singular: StatValue
    degree_homophily_correlation_red: StatValue
    degree_homophily_correlation_blue: StatValue

    def to_json_dict(self) -> dict:
        return {
            "mean_degree": self.mean_degree.to_json_dict(),
            "mean_neighbor_degree_list": self.mean_neighbor_degree_list.to_json_dict(),
            "mean_neighbor_degree_singular": self.mean_neighbor_degree_singular.to_json_dict(),
            "degree_homophily_correlation": {
                "red": self.degree_homophily_correlation_red.to_json_dict(FLOAT),
                "blue": self.degree_homophily_correlation_blue.to_json_dict(FLOAT),
            },
        }


def _degree_homophily_corr(profile: HomophilyProfile, color: NodeColor) -> StatValue:
    nodes = profile.defined_nodes(color)
    if len(nodes) < 2:
        return StatValue.undefined(CODE_TOO_FEW_POINTS)
    r = pearson(profile.degrees[nodes], profile.h_float[nodes])
    if r is None:
        return StatValue.undefined(CODE_ZERO_VARIANCE)
    return StatValue.defined(r)


def friendship_paradox_stats(graph: TypedGraph) -> FriendshipParadoxStats:
    """Mean degree vs mean neighbor degree, list- and singular-weighted.

    The list version counts each node's degree once per incident edge
    end, giving sum(d^2)/sum(d); it can never fall below the plain mean
    degree (taken over all nodes, isolated ones included) and exceeds it
    exactly when degrees differ.
    """
    profile = first_order_homophily(graph)
    n = graph.n
    degrees = profile.degrees
    total = int(np.sum(degrees))
    if n == 0:
        mean_degree = StatValue.undefined(CODE_NO_NODES)
    else:
        mean_degree = StatValue.defined(Fraction(total, n))
    if total == 0:
        mean_list = StatValue.undefined(CODE_NO_ELIGIBLE)
    else:
        mean_list = StatValue.defined(Fraction(int(np.sum(degrees * degrees)), total))
    positive = np.flatnonzero(degrees > 0)
    if len(positive) == 0:
        mean_sing = StatValue.undefined(CODE_NO_ELIGIBLE)
    else:
        per_node = [
            Fraction(int(np.sum(degrees[graph.neighbors(i)])), int(degrees[i]))
            for i in positive.tolist()
        ]
        mean_sing = StatValue.defined(_mean_exact(per_node))
    return FriendshipParadoxStats(
        mean_degree=mean_degree,
        mean_neighbor_degree_list=mean_list,
        mean_neighbor_degree_singular=mean_sing,
        degree_homophily_correlation_red=_degree_homophily_corr(profile, RED),
        degree_homophily_correlation_blue=_degree_homophily_corr(profile, BLUE),
    )


def pearson(xs, ys) -> float | None:
    """Sample Pearson correlation; None when either side has zero variance.

    Raises ValueError for mismatched lengths or fewer than two points.
    """
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"pearson needs two equal-length 1-d sequences, got {x.shape} and {y.shape}")
    if len(x) < 2:
        raise ValueError("pearson needs at least two points")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        return None
    r = float(dx @ dy) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def verify_gap_theorem(graph: TypedGraph, profile: HomophilyProfile | None = None) -> int:
    """Exact-backend check of the list-version gap law on one graph.

    For each color: positive homophily diversity must give a strictly
    positive list gap, and zero diversity with both edge kinds present
    must give a gap of exactly zero.  Returns the number of checks made
    (0-2); raises :class:`TheoremViolationError` on any failure.
    """
    if profile is None:
        profile = first_order_homophily(graph)
    report = gap_report(graph, profile, backend=EXACT, singular_policy="relaxed")
    checks = 0
    for color in (RED, BLUE):
        side = report.for_color(color)
        diverse = profile.has_diversity(color)
        if diverse:
            checks += 1
            if not side.gap_list.is_defined:
                raise TheoremViolationError(
                    f"{color} has homophily diversity but the list gap is undefined "
                    f"({side.gap_list.code})"
                )
            if side.gap_list.value <= 0:
                raise TheoremViolationError(
                    f"{color} list gap {side.gap_list.value} is not positive despite "
                    f"homophily diversity"
                )
        elif side.gap_list.is_defined and profile.defined_count(color) > 0:
            checks += 1
            if side.gap_list.value != 0:
                raise TheoremViolationError(
                    f"{color} list gap {side.gap_list.value} is nonzero with zero "
                    f"homophily diversity"
                )
    return checks
