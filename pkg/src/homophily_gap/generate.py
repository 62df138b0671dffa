"""Typed random graphs with prescribed degrees and homophily values.

The double configuration model extends the classic configuration model
with typed stubs: every node receives a same-color and a cross-color stub
count, same-color stubs are matched uniformly within each color, and
cross stubs are matched uniformly red against blue.  Prescribing per-node
stub counts is equivalent to prescribing degree and homophily at once.

Stub totals must satisfy two counting constraints before matching can
work: each color's same-color total must be even, and the two cross
totals must agree.  Rounded targets rarely satisfy them exactly, so small
logged ±1 repairs are applied first.  Matching clashes (self-loops,
repeated pairs) are re-drawn a bounded number of times; irreparable
leftovers are erased with a logged warning, never silently.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from homophily_gap.graph import BLUE, RED, NodeColor, TypedGraph
from homophily_gap.metrics import first_order_homophily

__all__ = [
    "GenerationError",
    "InfeasibleSpecError",
    "ConfigModelSpec",
    "StubPlan",
    "GenerationReport",
    "derived_rng",
    "round_half_up",
    "sample_clipped_normal",
    "derive_blue_degree",
    "stub_counts",
    "double_configuration_model",
    "special_case_graph",
    "verification_suite",
    "VerificationInstance",
]

log = logging.getLogger(__name__)


class GenerationError(RuntimeError):
    """Graph construction failed at runtime (e.g. unresolvable matching)."""


class InfeasibleSpecError(GenerationError):
    """The requested parameters cannot produce a valid graph."""


def derived_rng(master_seed: int, *path: int) -> np.random.Generator:
    """Independent, reproducible stream for a (master_seed, *path) address.

    Replicate r of sweep row i uses ``derived_rng(master_seed, i, r)``;
    the mixing is numpy's SeedSequence over the integer tuple.  Seeds must
    be non-negative.
    """
    return np.random.default_rng(np.random.SeedSequence([int(master_seed), *map(int, path)]))


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


@dataclass(frozen=True)
class ConfigModelSpec:
    """Parameters of one double-configuration-model graph.

    ``c`` (blue degree) may be omitted; it is then derived from the other
    parameters via the cross-edge balance identity and rounded to the
    nearest integer.  ``lambda_*``/``sigma_*`` are the mean and standard
    deviation of the clipped-normal homophily targets per color.
    """

    n: int
    k: int
    d: int
    lambda_r: float
    sigma_r: float
    lambda_b: float
    sigma_b: float
    c: int | None = None
    seed: int | None = None
    max_rewire_attempts: int = 50

    @property
    def r(self) -> float:
        return self.k / self.n

    def validate(self) -> None:
        if not 0 < self.k < self.n:
            raise InfeasibleSpecError(f"need 0 < k < n, got k={self.k}, n={self.n}")
        if self.d < 1:
            raise InfeasibleSpecError(f"red degree must be >= 1, got {self.d}")
        if self.c is not None and self.c < 1:
            raise InfeasibleSpecError(f"blue degree must be >= 1, got {self.c}")
        for name in ("lambda_r", "lambda_b"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InfeasibleSpecError(f"{name} must be in [0, 1], got {value}")
        for name in ("sigma_r", "sigma_b"):
            if getattr(self, name) < 0.0:
                raise InfeasibleSpecError(f"{name} must be >= 0")
        if self.max_rewire_attempts < 0:
            raise InfeasibleSpecError("max_rewire_attempts must be >= 0")

    def resolved_c(self) -> tuple[int, float]:
        """Blue degree as (integer used, real-valued target)."""
        if self.c is not None:
            return self.c, float(self.c)
        real = derive_blue_degree(self.n, self.k, self.d, self.lambda_r, self.lambda_b)
        return max(1, round_half_up(real)), real

    @classmethod
    def from_dict(cls, data: dict) -> "ConfigModelSpec":
        known = {
            "n", "k", "r", "d", "c",
            "lambda_r", "sigma_r", "lambda_b", "sigma_b",
            "seed", "max_rewire_attempts",
        }
        unknown = set(data) - known
        if unknown:
            raise InfeasibleSpecError(f"unknown spec keys: {sorted(unknown)}")
        missing = {"n", "d", "lambda_r", "sigma_r", "lambda_b", "sigma_b"} - set(data)
        if missing:
            raise InfeasibleSpecError(f"missing spec keys: {sorted(missing)}")
        if "k" in data and "r" in data:
            raise InfeasibleSpecError("give either k or r, not both")
        if "k" in data:
            k = int(data["k"])
        elif "r" in data:
            k = round_half_up(float(data["r"]) * int(data["n"]))
        else:
            raise InfeasibleSpecError("one of k or r is required")
        spec = cls(
            n=int(data["n"]),
            k=k,
            d=int(data["d"]),
            lambda_r=float(data["lambda_r"]),
            sigma_r=float(data["sigma_r"]),
            lambda_b=float(data["lambda_b"]),
            sigma_b=float(data["sigma_b"]),
            c=int(data["c"]) if data.get("c") is not None else None,
            seed=int(data["seed"]) if data.get("seed") is not None else None,
            max_rewire_attempts=int(data.get("max_rewire_attempts", 50)),
        )
        spec.validate()
        return spec

    @classmethod
    def from_json(cls, path) -> "ConfigModelSpec":
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise InfeasibleSpecError(f"{path}: spec file must hold a JSON object")
        return cls.from_dict(data)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "c": self.c,
            "lambda_r": self.lambda_r,
            "sigma_r": self.sigma_r,
            "lambda_b": self.lambda_b,
            "sigma_b": self.sigma_b,
            "seed": self.seed,
            "max_rewire_attempts": self.max_rewire_attempts,
        }


def sample_clipped_normal(
    lam: float, sigma: float, count: int, rng: np.random.Generator
) -> np.ndarray:
    """Normal draws clamped into [0, 1]; exactly ``lam`` everywhere for sigma=0.

    Clamping (rather than redrawing) biases the realized mean away from
    boundaries, which is intentional and visible in sweep outputs.
    """
    if sigma < 0:
        raise InfeasibleSpecError("sigma must be >= 0")
    if sigma == 0:
        return np.full(count, float(lam))
    return np.clip(rng.normal(lam, sigma, size=count), 0.0, 1.0)


def derive_blue_degree(n: int, k: int, d: int, lambda_r: float, lambda_b: float) -> float:
    """Blue degree that balances expected cross stubs, as a real number.

    Red nodes emit k*d*(1-lambda_r) cross stubs in expectation and blue
    nodes (n-k)*c*(1-lambda_b); equating the two and solving for c gives
    the returned value.  lambda_b = 1 leaves c unconstrained by the
    identity, so it is rejected.
    """
    if not 0 < k < n:
        raise InfeasibleSpecError(f"need 0 < k < n, got k={k}, n={n}")
    if lambda_b >= 1.0:
        raise InfeasibleSpecError(
            "lambda_b = 1 gives blue nodes no cross stubs; the balance "
            "identity cannot determine c, pass it explicitly"
        )
    return k * d * (1.0 - lambda_r) / ((n - k) * (1.0 - lambda_b))


@dataclass(frozen=True)
class StubPlan:
    """Per-node same/cross stub counts for one color, after parity repair."""

    same: np.ndarray  # int64
    cross: np.ndarray  # int64
    repair_log: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        self.same.setflags(write=False)
        self.cross.setflags(write=False)

    @property
    def degree(self) -> np.ndarray:
        return self.same + self.cross


def stub_counts(h, degree: int, rng: np.random.Generator) -> StubPlan:
    """Same/cross stub counts for one color from homophily targets.

    Same-color stubs are round-half-up(h_i * degree); the same-color total
    is then made even, if needed, by shifting one stub on a uniformly
    random node (direction chosen to stay within [0, degree]).
    """
    if degree < 1:
        raise InfeasibleSpecError(f"degree must be >= 1, got {degree}")
    h = np.asarray(h, dtype=np.float64)
    if h.size and (h.min() < 0.0 or h.max() > 1.0):
        raise InfeasibleSpecError("homophily values must lie in [0, 1]")
    same = np.clip(np.floor(h * degree + 0.5).astype(np.int64), 0, degree)
    repairs: list[str] = []
    while int(same.sum()) % 2 != 0:
        i = int(rng.integers(len(same)))
        can_up = same[i] < degree
        can_down = same[i] > 0
        if can_up and can_down:
            step = 1 if int(rng.integers(2)) else -1
        elif can_up:
            step = 1
        else:
            step = -1
        repairs.append(f"parity: node {i} same {int(same[i])}->{int(same[i]) + step}")
        same[i] += step
    cross = degree - same
    return StubPlan(same=same, cross=cross, repair_log=tuple(repairs))


def _equalize_cross(
    same_r: np.ndarray,
    cross_r: np.ndarray,
    d: int,
    same_b: np.ndarray,
    cross_b: np.ndarray,
    c: int,
    rng: np.random.Generator,
) -> list[str]:
    """Shrink the larger cross-stub total until both colors agree.

    Each step converts one cross stub to a same stub on a random node of
    the larger side.  The difference is always even here (total stub
    parity is checked upstream), so same-color totals stay even overall.
    Mutates the arrays in place and returns the log entries.
    """
    repairs: list[str] = []
    while True:
        delta = int(cross_r.sum()) - int(cross_b.sum())
        if delta == 0:
            return repairs
        if delta > 0:
            same, cross, cap, label = same_r, cross_r, d, "red"
        else:
            same, cross, cap, label = same_b, cross_b, c, "blue"
        candidates = np.flatnonzero((cross > 0) & (same < cap))
        if len(candidates) == 0:
            raise InfeasibleSpecError(
                f"cannot balance cross stubs: no {label} node can absorb a shift"
            )
        i = int(candidates[int(rng.integers(len(candidates)))])
        repairs.append(f"cross-balance: {label} node {i} same {int(same[i])}->{int(same[i]) + 1}")
        same[i] += 1
        cross[i] -= 1


def _pair_same(nodes: np.ndarray, counts: np.ndarray, rng) -> tuple[np.ndarray, np.ndarray]:
    stubs = np.repeat(nodes, counts)
    if len(stubs) % 2:
        raise GenerationError("internal: odd same-color stub total survived repair")
    stubs = rng.permutation(stubs)
    return stubs[0::2], stubs[1::2]


def _rematch_same(pu: np.ndarray, pv: np.ndarray, rng) -> tuple[np.ndarray, np.ndarray]:
    stubs = rng.permutation(np.concatenate([pu, pv]))
    return stubs[0::2], stubs[1::2]


def _rematch_cross(pu: np.ndarray, pv: np.ndarray, rng) -> tuple[np.ndarray, np.ndarray]:
    return rng.permutation(pu), rng.permutation(pv)


def _match_bucket(
    pair_u: np.ndarray,
    pair_v: np.ndarray,
    keys: np.ndarray,
    n: int,
    rng: np.random.Generator,
    budget: int,
    rematch: Callable,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """Accept candidate stub pairings, re-drawing clashes up to ``budget`` times.

    ``keys`` is the sorted int64 key array (min*n + max) of already
    accepted edges across buckets.  Between rounds, as many already
    accepted edges of this bucket as there are clashing pairs are broken
    back into the pool; re-pairing only the leftovers can wedge when the
    leftover stubs all sit on mutually saturated nodes.  Returns the
    accepted endpoints, the updated key array, and the number of pairs
    erased after the budget ran out.

    For cross buckets the two endpoint arrays keep their sides (all u on
    one color, all v on the other); callers order colors so that u < v.
    """
    acc_u = np.empty(0, dtype=np.int64)
    acc_v = np.empty(0, dtype=np.int64)
    erased = 0
    for round_no in range(budget + 1):
        if len(pair_u) == 0:
            break
        lo = np.minimum(pair_u, pair_v)
        hi = np.maximum(pair_u, pair_v)
        key = lo * n + hi
        bad = pair_u == pair_v
        order = np.argsort(key, kind="stable")
        sorted_key = key[order]
        dup_sorted = np.zeros(len(key), dtype=bool)
        dup_sorted[1:] = sorted_key[1:] == sorted_key[:-1]
        dup = np.zeros(len(key), dtype=bool)
        dup[order] = dup_sorted
        exists = np.zeros(len(key), dtype=bool)
        if len(keys):
            pos = np.searchsorted(keys, key)
            in_bounds = pos < len(keys)
            exists[in_bounds] = keys[pos[in_bounds]] == key[in_bounds]
        ok = ~(bad | dup | exists)
        if ok.any():
            acc_u = np.concatenate([acc_u, pair_u[ok]])
            acc_v = np.concatenate([acc_v, pair_v[ok]])
            keys = np.sort(np.concatenate([keys, key[ok]]))
        failed = ~ok
        if not failed.any():
            pair_u = pair_u[:0]
            break
        if round_no == budget:
            erased = int(failed.sum())
            break
        pool_u = pair_u[failed]
        pool_v = pair_v[failed]
        if len(acc_u):
            take = min(len(acc_u), len(pool_u))
            chosen = rng.choice(len(acc_u), size=take, replace=False)
            broken_key = np.minimum(acc_u[chosen], acc_v[chosen]) * n + np.maximum(
                acc_u[chosen], acc_v[chosen]
            )
            keys = np.setdiff1d(keys, broken_key, assume_unique=True)
            pool_u = np.concatenate([pool_u, acc_u[chosen]])
            pool_v = np.concatenate([pool_v, acc_v[chosen]])
            acc_u = np.delete(acc_u, chosen)
            acc_v = np.delete(acc_v, chosen)
        pair_u, pair_v = rematch(pool_u, pool_v, rng)
    return np.minimum(acc_u, acc_v), np.maximum(acc_u, acc_v), keys, erased


def _assemble(
    colors: np.ndarray,
    same: np.ndarray,
    cross: np.ndarray,
    rng: np.random.Generator,
    budget: int,
) -> tuple[np.ndarray, np.ndarray, dict[str, int]]:
    """Match typed stubs into a simple edge set; returns endpoints and erasures."""
    n = len(colors)
    red = np.flatnonzero(colors == int(RED))
    blue = np.flatnonzero(colors == int(BLUE))
    keys = np.empty(0, dtype=np.int64)
    erased: dict[str, int] = {}
    all_u: list[np.ndarray] = []
    all_v: list[np.ndarray] = []
    for label, nodes in (("red-red", red), ("blue-blue", blue)):
        pu, pv = _pair_same(nodes, same[nodes], rng)
        au, av, keys, gone = _match_bucket(pu, pv, keys, n, rng, budget, _rematch_same)
        all_u.append(au)
        all_v.append(av)
        erased[label] = gone
    cu = rng.permutation(np.repeat(red, cross[red]))
    cv = rng.permutation(np.repeat(blue, cross[blue]))
    if len(cu) != len(cv):
        raise GenerationError(
            f"cross stub totals differ after repair: {len(cu)} red vs {len(cv)} blue"
        )
    au, av, keys, gone = _match_bucket(cu, cv, keys, n, rng, budget, _rematch_cross)
    all_u.append(au)
    all_v.append(av)
    erased["cross"] = gone
    total_erased = sum(erased.values())
    if total_erased:
        log.warning(
            "erased %d unresolvable stub pair(s) after %d rewire rounds (%s)",
            total_erased,
            budget,
            ", ".join(f"{k}={v}" for k, v in erased.items() if v),
        )
    return np.concatenate(all_u), np.concatenate(all_v), erased


def _node_ids(colors: np.ndarray) -> tuple[str, ...]:
    ids = []
    r = b = 0
    for value in colors.tolist():
        if value == int(RED):
            ids.append(f"r{r}")
            r += 1
        else:
            ids.append(f"b{b}")
            b += 1
    return tuple(ids)


@dataclass(frozen=True)
class GenerationReport:
    """Targets, repairs, and realized statistics for one generated graph."""

    spec: ConfigModelSpec
    c: int
    c_real: float
    target_h: np.ndarray  # per node, in graph node order
    realized_h: np.ndarray  # per node, NaN where isolated
    repair_log: tuple[str, ...]
    erased_edges: dict[str, int]
    realized: dict[str, float]  # lambda_r, sigma_r, lambda_b, sigma_b

    @property
    def erased_total(self) -> int:
        return sum(self.erased_edges.values())

    @property
    def mean_abs_h_delta(self) -> float:
        mask = ~np.isnan(self.realized_h)
        if not mask.any():
            return math.nan
        return float(np.mean(np.abs(self.realized_h[mask] - self.target_h[mask])))

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.to_json_dict(),
            "c": self.c,
            "c_real": self.c_real,
            "repairs": len(self.repair_log),
            "erased_edges": dict(self.erased_edges),
            "realized": dict(self.realized),
            "mean_abs_h_delta": self.mean_abs_h_delta,
        }


def double_configuration_model(
    spec: ConfigModelSpec, rng: np.random.Generator | None = None
) -> tuple[TypedGraph, GenerationReport]:
    """Generate one typed random graph with the spec's degree/homophily targets.

    Node ids are ``r0..r{k-1}`` and ``b0..b{n-k-1}``.  Identical spec and
    seed give an identical graph.
    """
    spec.validate()
    if rng is None:
        if spec.seed is None:
            raise InfeasibleSpecError("generation needs spec.seed or an explicit rng")
        rng = np.random.default_rng(spec.seed)
    c, c_real = spec.resolved_c()
    m = spec.n - spec.k
    if (spec.k * spec.d + m * c) % 2 != 0:
        raise InfeasibleSpecError(
            f"total stub count k*d + (n-k)*c = {spec.k * spec.d + m * c} is odd; "
            "no graph can realize it (adjust n, k, d, or c)"
        )
    h_red = sample_clipped_normal(spec.lambda_r, spec.sigma_r, spec.k, rng)
    h_blue = sample_clipped_normal(spec.lambda_b, spec.sigma_b, m, rng)
    plan_r = stub_counts(h_red, spec.d, rng)
    plan_b = stub_counts(h_blue, c, rng)
    same = np.concatenate([plan_r.same, plan_b.same]).copy()
    cross = np.concatenate([plan_r.cross, plan_b.cross]).copy()
    colors = np.concatenate(
        [np.full(spec.k, int(RED), dtype=np.uint8), np.full(m, int(BLUE), dtype=np.uint8)]
    )
    balance_repairs = _equalize_cross(
        same[: spec.k], cross[: spec.k], spec.d, same[spec.k :], cross[spec.k :], c, rng
    )
    u, v, erased = _assemble(colors, same, cross, rng, spec.max_rewire_attempts)
    graph = TypedGraph.from_edge_arrays(_node_ids(colors), colors, u, v)
    profile = first_order_homophily(graph)
    realized = {
        "lambda_r": profile.lambda_float(RED),
        "sigma_r": profile.sigma_float(RED),
        "lambda_b": profile.lambda_float(BLUE),
        "sigma_b": profile.sigma_float(BLUE),
    }
    report = GenerationReport(
        spec=spec,
        c=c,
        c_real=c_real,
        target_h=np.concatenate([h_red, h_blue]),
        realized_h=profile.h_float,
        repair_log=plan_r.repair_log + plan_b.repair_log + tuple(balance_repairs),
        erased_edges=erased,
        realized=realized,
    )
    return graph, report


def _as_integer(x: float, what: str) -> int:
    rounded = round_half_up(x)
    if abs(x - rounded) > 1e-9:
        raise InfeasibleSpecError(f"{what} = {x} is not an integer")
    return rounded


def special_case_graph(
    n: int,
    k: int,
    d: int,
    c: int,
    p,
    h,
    rng: np.random.Generator,
    max_attempts: int = 20,
) -> TypedGraph:
    """Graph with uniform red degree d, uniform blue degree c, uniform blue homophily p.

    The red homophily values ``h`` must make every stub count an exact
    integer and the totals consistent, because this construction allows
    no repairs or erasures: any of those would break the uniformity the
    special-case analysis relies on.  Matching is retried from scratch
    until it succeeds without erasing a single pair.
    """
    if not 0 < k < n:
        raise InfeasibleSpecError(f"need 0 < k < n, got k={k}, n={n}")
    if d < 1 or c < 1:
        raise InfeasibleSpecError("degrees must be >= 1")
    h = np.asarray(h, dtype=np.float64)
    if len(h) != k:
        raise InfeasibleSpecError(f"need one red homophily value per red node ({k}), got {len(h)}")
    m = n - k
    same_r = np.array([_as_integer(float(hi) * d, f"h[{i}]*d") for i, hi in enumerate(h)], dtype=np.int64)
    if same_r.size and (same_r.min() < 0 or same_r.max() > d):
        raise InfeasibleSpecError("red homophily values must lie in [0, 1]")
    same_b_each = _as_integer(float(p) * c, "p*c")
    if not 0 <= same_b_each <= c:
        raise InfeasibleSpecError("blue homophily must lie in [0, 1]")
    if int(same_r.sum()) % 2 != 0:
        raise InfeasibleSpecError("sum of red same-color stubs must be even")
    if (m * same_b_each) % 2 != 0:
        raise InfeasibleSpecError("sum of blue same-color stubs must be even")
    cross_r_total = k * d - int(same_r.sum())
    cross_b_total = m * (c - same_b_each)
    if cross_r_total != cross_b_total:
        raise InfeasibleSpecError(
            f"cross stub totals differ: red {cross_r_total} vs blue {cross_b_total}; "
            "choose h and p so they match exactly"
        )
    colors = np.concatenate(
        [np.full(k, int(RED), dtype=np.uint8), np.full(m, int(BLUE), dtype=np.uint8)]
    )
    same = np.concatenate([same_r, np.full(m, same_b_each, dtype=np.int64)])
    cross = np.concatenate([d - same_r, np.full(m, c - same_b_each, dtype=np.int64)])
    for _ in range(max_attempts):
        u, v, erased = _assemble(colors, same, cross, rng, budget=20)
        if sum(erased.values()) == 0:
            return TypedGraph.from_edge_arrays(_node_ids(colors), colors, u, v)
    raise GenerationError(
        f"could not match special-case stubs without erasures in {max_attempts} attempts"
    )


# -- random graph suite for theorem verification --------------------------


@dataclass(frozen=True)
class VerificationInstance:
    index: int
    flavor: str
    graph: TypedGraph


def _suite_size(rng: np.random.Generator) -> int:
    """Sizes skewed small so exact arithmetic stays fast over big suites."""
    roll = rng.random()
    if roll < 0.80:
        return int(rng.integers(10, 81))
    if roll < 0.95:
        return int(rng.integers(81, 201))
    return int(rng.integers(201, 501))


def _planted_graph(rng: np.random.Generator, n: int, k: int,
                   p_rr: float, p_bb: float, p_cross: float) -> TypedGraph:
    """Independent-coin typed random graph: varied degrees, no stub machinery."""
    colors = np.concatenate(
        [np.full(k, int(RED), dtype=np.uint8), np.full(n - k, int(BLUE), dtype=np.uint8)]
    )
    iu, iv = np.triu_indices(n, 1)
    prob = np.where(
        colors[iu] != colors[iv],
        p_cross,
        np.where(colors[iu] == int(RED), p_rr, p_bb),
    )
    mask = rng.random(len(iu)) < prob
    return TypedGraph.from_edge_arrays(
        _node_ids(colors), colors, iu[mask].astype(np.int64), iv[mask].astype(np.int64)
    )


def _suite_config(rng: np.random.Generator) -> TypedGraph:
    n = _suite_size(rng)
    k = int(rng.integers(max(2, n // 5), n - max(2, n // 5) + 1))
    d = int(rng.integers(2, 9))
    if (k * d) % 2 != 0:
        d += 1
    lam_r = float(rng.uniform(0.05, 0.9))
    lam_b = float(rng.uniform(0.05, 0.9))
    sig_r = float(rng.uniform(0.0, 0.25))
    sig_b = float(rng.uniform(0.0, 0.25))
    c = max(1, round_half_up(derive_blue_degree(n, k, d, lam_r, lam_b)))
    if ((n - k) * c) % 2 != 0:
        c += 1
    spec = ConfigModelSpec(
        n=n, k=k, d=d, c=c,
        lambda_r=lam_r, sigma_r=sig_r, lambda_b=lam_b, sigma_b=sig_b,
    )
    graph, _ = double_configuration_model(spec, rng=rng)
    return graph


def _suite_uniform(rng: np.random.Generator) -> TypedGraph:
    # zero target diversity; realized diversity stays zero unless erasure hits
    n = int(rng.integers(10, 81))
    d = int(rng.integers(3, 7))
    if (n * d) % 2 != 0:  # c = d, so total stubs are n*d
        n += 1
    k = int(rng.integers(3, n - 2))
    lam = float(rng.uniform(0.3, 0.7))
    spec = ConfigModelSpec(
        n=n, k=k, d=d, c=d, lambda_r=lam, sigma_r=0.0, lambda_b=lam, sigma_b=0.0
    )
    graph, _ = double_configuration_model(spec, rng=rng)
    return graph


def _suite_planted(rng: np.random.Generator) -> TypedGraph:
    n = _suite_size(rng)
    k = int(rng.integers(2, n - 1))
    # both assortative and disassortative mixes, sometimes sparse enough
    # to leave isolated nodes
    p_rr, p_bb, p_cross = (float(rng.uniform(0.01, 0.5)) for _ in range(3))
    return _planted_graph(rng, n, k, p_rr, p_bb, p_cross)


def _suite_bipartite(rng: np.random.Generator) -> TypedGraph:
    # globally heterophilous: cross edges only
    n = int(rng.integers(10, 101))
    k = int(rng.integers(2, n - 1))
    return _planted_graph(rng, n, k, 0.0, 0.0, float(rng.uniform(0.1, 0.6)))


def _suite_monochromatic(rng: np.random.Generator) -> TypedGraph:
    n = int(rng.integers(10, 61))
    k = n - 1  # a single blue node keeps both colors present
    return _planted_graph(rng, n, k, float(rng.uniform(0.1, 0.5)), 0.0, 0.0)


_SUITE_FLAVORS: tuple[tuple[str, Callable], ...] = (
    ("planted", _suite_planted),
    ("config", _suite_config),
    ("uniform", _suite_uniform),
    ("planted", _suite_planted),
    ("config", _suite_config),
    ("bipartite", _suite_bipartite),
    ("monochromatic", _suite_monochromatic),
)


def verification_suite(count: int, master_seed: int) -> Iterator[VerificationInstance]:
    """Seeded stream of varied random graphs for gap-theorem checking.

    Mixes independent-coin graphs, double-configuration graphs (diverse
    and zero-diversity), bipartite-degenerate, and near-monochromatic
    instances.  Graph i is built from ``derived_rng(master_seed, i)``, so
    any instance can be regenerated in isolation.
    """
    for i in range(count):
        flavor, builder = _SUITE_FLAVORS[i % len(_SUITE_FLAVORS)]
        rng = derived_rng(master_seed, i)
        yield VerificationInstance(index=i, flavor=flavor, graph=builder(rng))
