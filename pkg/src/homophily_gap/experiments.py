"""Sweeps, batch analysis, and histogram export.

The closed-form gap prediction sigma^2/lambda + sigma^2/(1-lambda) is
compared against simulated ensembles: one-dimensional sweeps over the
red diversity target, two-dimensional (lambda, sigma) grids, and batch
analysis of graphs loaded from files.  All randomness is derived from a
master seed through per-(row, replicate) streams, so tables are exactly
reproducible.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from homophily_gap.generate import (
    ConfigModelSpec,
    GenerationError,
    derived_rng,
    double_configuration_model,
)
from homophily_gap.graph import BLUE, RED, load_graph
from homophily_gap.metrics import FLOAT, first_order_homophily, gap_report, pearson
from homophily_gap.prune import prune_bichromatic

__all__ = [
    "predicted_gap",
    "SweepRow",
    "SweepTable",
    "sweep_sigma",
    "sweep_lambda_sigma",
    "EmpiricalRow",
    "EmpiricalBatchResult",
    "empirical_batch",
    "histogram",
    "histogram_svg",
]


def predicted_gap(lambda_r: float, sigma_r: float) -> float:
    """Closed-form list-version gap from the target mean and diversity.

    Defined for 0 < lambda_r < 1; symmetric under lambda_r -> 1 - lambda_r.
    """
    if not 0.0 < lambda_r < 1.0:
        raise ValueError(f"lambda_r must lie strictly between 0 and 1, got {lambda_r}")
    v = sigma_r * sigma_r
    return v / lambda_r + v / (1.0 - lambda_r)


def _clipping_flag(lam: float, sigma: float) -> bool:
    # near the boundary the clamped normal cannot realize the target
    # spread, so sigma stops being representative
    return min(lam, 1.0 - lam) < 2.0 * sigma


@dataclass(frozen=True)
class SweepRow:
    """One (lambda_r, sigma_r) target with simulated and predicted gaps."""

    lambda_r: float
    sigma_r: float
    replicates: int
    predicted: float | None
    gap_list_mean: float | None
    gap_list_sd: float | None
    gap_sing_mean: float | None
    gap_sing_sd: float | None
    realized_lambda_r: float | None
    realized_sigma_r: float | None
    clipping_flagged: bool
    error: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "lambda_r": self.lambda_r,
            "sigma_r": self.sigma_r,
            "replicates": self.replicates,
            "predicted": self.predicted,
            "gap_list_mean": self.gap_list_mean,
            "gap_list_sd": self.gap_list_sd,
            "gap_sing_mean": self.gap_sing_mean,
            "gap_sing_sd": self.gap_sing_sd,
            "realized_lambda_r": self.realized_lambda_r,
            "realized_sigma_r": self.realized_sigma_r,
            "clipping_flagged": self.clipping_flagged,
            "error": self.error,
        }


SWEEP_COLUMNS = (
    "lambda_r",
    "sigma_r",
    "replicates",
    "predicted",
    "gap_list_mean",
    "gap_list_sd",
    "gap_sing_mean",
    "gap_sing_sd",
    "realized_lambda_r",
    "realized_sigma_r",
    "clipping_flagged",
    "error",
)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass(frozen=True)
class SweepTable:
    base: ConfigModelSpec
    master_seed: int
    rows: tuple[SweepRow, ...]

    def to_json_dict(self) -> dict:
        return {
            "base_spec": self.base.to_json_dict(),
            "master_seed": self.master_seed,
            "rows": [row.to_json_dict() for row in self.rows],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in self.rows:
            data = row.to_json_dict()
            writer.writerow([_cell(data[col]) for col in SWEEP_COLUMNS])
        return buf.getvalue()


def _simulate_row(
    base: ConfigModelSpec,
    lambda_r: float,
    sigma_r: float,
    replicates: int,
    master_seed: int,
    row_index: int,
) -> SweepRow:
    """Run one grid point; generation failures turn into an error row."""
    try:
        predicted = predicted_gap(lambda_r, sigma_r)
    except ValueError:
        predicted = None
    spec = replace(base, lambda_r=lambda_r, sigma_r=sigma_r, seed=None)
    gap_list: list[float] = []
    gap_sing: list[float] = []
    lam_real: list[float] = []
    sig_real: list[float] = []
    error: str | None = None
    for rep in range(replicates):
        rng = derived_rng(master_seed, row_index, rep)
        try:
            graph, gen_report = double_configuration_model(spec, rng=rng)
        except GenerationError as exc:
            error = str(exc)
            break
        side = gap_report(graph, backend=FLOAT, singular_policy="relaxed").red
        if side.gap_list.is_defined:
            gap_list.append(float(side.gap_list.value))
        if side.gap_sing.is_defined:
            gap_sing.append(float(side.gap_sing.value))
        lam_real.append(gen_report.realized["lambda_r"])
        sig_real.append(gen_report.realized["sigma_r"])

    def agg(values: list[float]) -> tuple[float | None, float | None]:
        if not values:
            return None, None
        mean = float(np.mean(values))
        sd = float(np.std(values, ddof=1)) if len(values) > 1 else None
        return mean, sd

    list_mean, list_sd = agg(gap_list)
    sing_mean, sing_sd = agg(gap_sing)
    return SweepRow(
        lambda_r=lambda_r,
        sigma_r=sigma_r,
        replicates=replicates,
        predicted=predicted,
        gap_list_mean=list_mean if error is None else None,
        gap_list_sd=list_sd if error is None else None,
        gap_sing_mean=sing_mean if error is None else None,
        gap_sing_sd=sing_sd if error is None else None,
        realized_lambda_r=float(np.mean(lam_real)) if lam_real and error is None else None,
        realized_sigma_r=float(np.mean(sig_real)) if sig_real and error is None else None,
        clipping_flagged=_clipping_flag(lambda_r, sigma_r),
        error=error,
    )


def _run_rows(tasks: Sequence[Callable[[], SweepRow]], threads: int | None) -> tuple[SweepRow, ...]:
    """Run row tasks, assembling results in submission order.

    Rows are independent (each derives its own RNG streams), so any
    worker count yields the same table.
    """
    if threads is not None and threads < 1:
        raise ValueError("threads must be >= 1")
    if threads == 1 or len(tasks) == 1:
        return tuple(task() for task in tasks)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(task) for task in tasks]
        return tuple(future.result() for future in futures)


def sweep_sigma(
    base: ConfigModelSpec,
    sigma_grid: Sequence[float],
    replicates: int,
    master_seed: int,
    threads: int | None = 1,
) -> SweepTable:
    """One row per sigma_r target at the base spec's lambda_r."""
    if not sigma_grid:
        raise ValueError("sigma_grid must not be empty")
    if any(s < 0 for s in sigma_grid):
        raise ValueError("sigma_grid values must be >= 0")
    if replicates < 1:
        raise ValueError("replicates must be >= 1")
    tasks = [
        (lambda i=i, s=float(sigma): _simulate_row(base, base.lambda_r, s, replicates, master_seed, i))
        for i, sigma in enumerate(sigma_grid)
    ]
    return SweepTable(base=base, master_seed=master_seed, rows=_run_rows(tasks, threads))


def sweep_lambda_sigma(
    base: ConfigModelSpec,
    lambda_grid: Sequence[float],
    sigma_grid: Sequence[float],
    replicates: int,
    master_seed: int,
    threads: int | None = 1,
) -> SweepTable:
    """Cartesian (lambda_r, sigma_r) grid, lambda outer and sigma inner.

    When the base spec leaves c unset it is re-derived per row from that
    row's lambda_r, keeping the cross-edge balance on target.
    """
    if not lambda_grid or not sigma_grid:
        raise ValueError("grids must not be empty")
    if any(s < 0 for s in sigma_grid):
        raise ValueError("sigma_grid values must be >= 0")
    if replicates < 1:
        raise ValueError("replicates must be >= 1")
    tasks = []
    for i, lam in enumerate(lambda_grid):
        for j, sigma in enumerate(sigma_grid):
            row_index = i * len(sigma_grid) + j
            tasks.append(
                lambda lam=float(lam), s=float(sigma), idx=row_index: _simulate_row(
                    base, lam, s, replicates, master_seed, idx
                )
            )
    return SweepTable(base=base, master_seed=master_seed, rows=_run_rows(tasks, threads))


# -- empirical batches ----------------------------------------------------


@dataclass(frozen=True)
class EmpiricalRow:
    """Per-graph summary; gap fields are None when undefined."""

    name: str
    nodes: int
    edges: int
    lambda_red: float | None
    sigma_red: float | None
    lambda_blue: float | None
    sigma_blue: float | None
    gap_list_red: float | None
    gap_sing_red: float | None
    gap_list_blue: float | None
    gap_sing_blue: float | None
    prune_passes: int | None
    retained_fraction: float | None

    def to_json_dict(self) -> dict:
        return {col: getattr(self, col) for col in EMPIRICAL_COLUMNS}


EMPIRICAL_COLUMNS = (
    "name",
    "nodes",
    "edges",
    "lambda_red",
    "sigma_red",
    "lambda_blue",
    "sigma_blue",
    "gap_list_red",
    "gap_sing_red",
    "gap_list_blue",
    "gap_sing_blue",
    "prune_passes",
    "retained_fraction",
)


@dataclass(frozen=True)
class EmpiricalBatchResult:
    rows: tuple[EmpiricalRow, ...]
    correlations: dict[str, float | None]
    skipped: tuple[tuple[str, str], ...]  # (name, reason)

    def to_json_dict(self) -> dict:
        return {
            "rows": [row.to_json_dict() for row in self.rows],
            "correlations": dict(self.correlations),
            "skipped": [{"name": name, "reason": reason} for name, reason in self.skipped],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(EMPIRICAL_COLUMNS)
        for row in self.rows:
            data = row.to_json_dict()
            writer.writerow([_cell(data[col]) for col in EMPIRICAL_COLUMNS])
        return buf.getvalue()


def _row_from_graph(name: str, graph, prune: bool) -> EmpiricalRow:
    passes = None
    retained = None
    if prune:
        result = prune_bichromatic(graph, frozenset({RED, BLUE}))
        passes = result.passes
        retained = float(result.retained_fraction)
        graph = result.graph
    profile = first_order_homophily(graph)
    report = gap_report(graph, profile, backend=FLOAT, singular_policy="relaxed")

    def value(sv) -> float | None:
        return float(sv.value) if sv.is_defined else None

    def summary(color):
        lam = profile.lambda_float(color)
        sig = profile.sigma_float(color)
        return (
            None if math.isnan(lam) else lam,
            None if math.isnan(sig) else sig,
        )

    lam_r, sig_r = summary(RED)
    lam_b, sig_b = summary(BLUE)
    return EmpiricalRow(
        name=name,
        nodes=graph.n,
        edges=graph.edge_count,
        lambda_red=lam_r,
        sigma_red=sig_r,
        lambda_blue=lam_b,
        sigma_blue=sig_b,
        gap_list_red=value(report.red.gap_list),
        gap_sing_red=value(report.red.gap_sing),
        gap_list_blue=value(report.blue.gap_list),
        gap_sing_blue=value(report.blue.gap_sing),
        prune_passes=passes,
        retained_fraction=retained,
    )


def _safe_pearson(xs: list[float], ys: list[float]) -> float | None:
    if len(xs) < 2:
        return None
    return pearson(xs, ys)


def _batch_correlations(rows: Sequence[EmpiricalRow]) -> dict[str, float | None]:
    undefined = {
        "gap_vs_sigma_pooled": None,
        "list_vs_singular_red": None,
        "list_vs_singular_blue": None,
    }
    # correlations compare graphs, so a single row never defines one even
    # though its two colors would technically give two pooled points
    if len(rows) < 2:
        return undefined
    pooled_sigma: list[float] = []
    pooled_gap: list[float] = []
    pairs = {"red": ([], []), "blue": ([], [])}
    for row in rows:
        for color in ("red", "blue"):
            sigma = getattr(row, f"sigma_{color}")
            gap_list = getattr(row, f"gap_list_{color}")
            gap_sing = getattr(row, f"gap_sing_{color}")
            if sigma is not None and gap_list is not None:
                pooled_sigma.append(sigma)
                pooled_gap.append(gap_list)
            if gap_list is not None and gap_sing is not None:
                pairs[color][0].append(gap_list)
                pairs[color][1].append(gap_sing)
    return {
        "gap_vs_sigma_pooled": _safe_pearson(pooled_sigma, pooled_gap),
        "list_vs_singular_red": _safe_pearson(*pairs["red"]),
        "list_vs_singular_blue": _safe_pearson(*pairs["blue"]),
    }


def empirical_batch(
    inputs: Sequence[tuple[str | Path, str | Path]],
    prune: bool = True,
    red_label: str = "red",
    blue_label: str = "blue",
) -> EmpiricalBatchResult:
    """Analyze many (edge file, attribute file) pairs, isolating failures.

    Rows are named after the edge file's stem.  Unreadable or invalid
    inputs are skipped with a recorded reason instead of aborting the
    batch.
    """
    rows: list[EmpiricalRow] = []
    skipped: list[tuple[str, str]] = []
    for edges_path, attrs_path in inputs:
        name = Path(edges_path).stem
        try:
            graph, _ = load_graph(edges_path, attrs_path, red_label, blue_label)
            rows.append(_row_from_graph(name, graph, prune))
        except (OSError, ValueError) as exc:
            skipped.append((name, str(exc)))
    return EmpiricalBatchResult(
        rows=tuple(rows),
        correlations=_batch_correlations(rows),
        skipped=tuple(skipped),
    )


# -- histograms -----------------------------------------------------------


def histogram(values, bin_count: int) -> tuple[np.ndarray, np.ndarray]:
    """Counts over ``bin_count`` uniform bins spanning [0, 1].

    Bins are right-exclusive except the last, which includes 1, so the
    counts always sum to the number of input values.  Raises for empty
    input, a non-positive bin count, or values outside [0, 1].
    """
    if bin_count < 1:
        raise ValueError(f"bin_count must be >= 1, got {bin_count}")
    arr = np.asarray([float(v) for v in values], dtype=np.float64)
    if arr.size == 0:
        raise ValueError("histogram input must not be empty")
    if float(arr.min()) < 0.0 or float(arr.max()) > 1.0:
        raise ValueError("histogram values must lie in [0, 1]")
    counts, edges = np.histogram(arr, bins=bin_count, range=(0.0, 1.0))
    return edges, counts.astype(np.int64)


def histogram_svg(
    edges: np.ndarray,
    counts: np.ndarray,
    title: str = "",
    width: int = 480,
    height: int = 320,
) -> str:
    """Self-contained SVG bar chart for a [0, 1] histogram."""
    margin = 40
    plot_w = width - 2 * margin
    plot_h = height - 2 * margin
    top = int(counts.max()) if len(counts) and counts.max() > 0 else 1
    bars = []
    for i, count in enumerate(counts.tolist()):
        x0 = margin + plot_w * float(edges[i])
        x1 = margin + plot_w * float(edges[i + 1])
        bar_h = plot_h * count / top
        y0 = margin + plot_h - bar_h
        bars.append(
            f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{x1 - x0:.2f}" '
            f'height="{bar_h:.2f}" fill="#4878a8" stroke="#ffffff" stroke-width="0.5"/>'
        )
    ticks = []
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        x = margin + plot_w * frac
        ticks.append(
            f'<line x1="{x:.2f}" y1="{margin + plot_h}" x2="{x:.2f}" '
            f'y2="{margin + plot_h + 4}" stroke="#000000"/>'
            f'<text x="{x:.2f}" y="{margin + plot_h + 16}" font-size="10" '
            f'text-anchor="middle">{frac:g}</text>'
        )
    title_el = (
        f'<text x="{width / 2:.0f}" y="{margin / 2:.0f}" font-size="12" '
        f'text-anchor="middle">{title}</text>'
        if title
        else ""
    )
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>'
        f"{title_el}"
        f'<text x="{margin - 6}" y="{margin + 4}" font-size="10" '
        f'text-anchor="end">{top}</text>'
        f'<text x="{margin - 6}" y="{margin + plot_h + 4}" font-size="10" '
        f'text-anchor="end">0</text>'
        f"{''.join(bars)}"
        f'<line x1="{margin}" y1="{margin + plot_h}" x2="{margin + plot_w}" '
        f'y2="{margin + plot_h}" stroke="#000000"/>'
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{margin + plot_h}" stroke="#000000"/>'
        f"{''.join(ticks)}"
        "</svg>"
    )
