"""Command-line front end.

Subcommands: analyze, prune, generate, sweep, predict, verify, hist.
Exit codes: 0 success, 1 input/usage error, 2 theorem violation (an
exact-mode gap disagreeing with the diversity condition aborts loudly so
CI can detect it).  Every randomized subcommand requires an explicit
seed, and outputs are byte-identical across runs given the same inputs,
flags, and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from homophily_gap.experiments import (
    histogram,
    histogram_svg,
    predicted_gap,
    sweep_lambda_sigma,
    sweep_sigma,
)
from homophily_gap.generate import (
    ConfigModelSpec,
    GenerationError,
    double_configuration_model,
    verification_suite,
)
from homophily_gap.graph import (
    BLUE,
    RED,
    GraphInputError,
    load_graph,
    write_attributes,
    write_edge_list,
)
from homophily_gap.metrics import (
    CODE_UNPRUNED,
    EXACT,
    FLOAT,
    TheoremViolationError,
    balance_check,
    first_order_homophily,
    friendship_paradox_stats,
    gap_report,
    second_vs_first,
    verify_gap_theorem,
)
from homophily_gap.prune import drop_isolated, prune_bichromatic

PRUNE_CHOICES = ("none", "list", "strict")


class CliError(Exception):
    """Usage or input problem; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse's default error() exits with code 2, which we reserve for
    # theorem violations
    def error(self, message):
        raise CliError(f"{message}\n{self.format_usage()}".rstrip())


def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--edges", required=True, help="edge-list file (two ids per line)")
    parser.add_argument("--attrs", required=True, help="attribute CSV with node_id,type header")
    parser.add_argument("--red-label", default="red", help="type value mapped to red")
    parser.add_argument("--blue-label", default="blue", help="type value mapped to blue")


def _load(args) -> tuple:
    for path in (args.edges, args.attrs):
        if not os.path.isfile(path):
            raise CliError(f"no such file: {path}")
    return load_graph(args.edges, args.attrs, args.red_label, args.blue_label)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


# -- subcommand handlers --------------------------------------------------


def _cmd_analyze(args) -> int:
    graph, validation = _load(args)
    prune_summary = None
    if args.prune == "list":
        graph, dropped = drop_isolated(graph)
        prune_summary = {"mode": "list", "dropped_isolated": list(dropped)}
    elif args.prune == "strict":
        result = prune_bichromatic(graph, frozenset({RED, BLUE}))
        graph = result.graph
        prune_summary = {"mode": "strict", **result.to_json_dict()}

    profile = first_order_homophily(graph)
    report = gap_report(graph, profile, backend=args.backend, singular_policy=args.singular)
    if args.singular == "strict":
        for side in (report.red, report.blue):
            for stat in (side.mu_sing_same, side.mu_sing_other):
                if stat.code == CODE_UNPRUNED:
                    raise CliError(f"strict singular mode: {stat.detail} (prune first or use --singular relaxed)")

    payload = {
        "input": {"edges": args.edges, "attrs": args.attrs},
        "validation": validation.to_json_dict(),
        "prune": prune_summary,
        "nodes": graph.n,
        "edges": graph.edge_count,
        "report": report.to_json_dict(),
        "balance": balance_check(graph, profile).to_json_dict(),
        "friendship_paradox": friendship_paradox_stats(graph).to_json_dict(),
        "second_vs_first": {
            "red": second_vs_first(graph, profile, RED, args.singular).to_json_dict(),
            "blue": second_vs_first(graph, profile, BLUE, args.singular).to_json_dict(),
        },
    }
    _emit(_json_text(payload), args.out)
    return 0


def _cmd_prune(args) -> int:
    graph, validation = _load(args)
    result = prune_bichromatic(graph, frozenset({RED, BLUE}))
    if args.out is not None:
        write_edge_list(result.graph, f"{args.out}.edges")
        write_attributes(
            result.graph, f"{args.out}.attrs", {RED: args.red_label, BLUE: args.blue_label}
        )
    payload = {
        "validation": validation.to_json_dict(),
        **result.to_json_dict(),
        "written": None if args.out is None else [f"{args.out}.edges", f"{args.out}.attrs"],
    }
    sys.stdout.write(_json_text(payload))
    return 0


def _read_spec(path: str, seed: int | None) -> ConfigModelSpec:
    if not os.path.isfile(path):
        raise CliError(f"no such file: {path}")
    spec = ConfigModelSpec.from_json(path)
    if seed is not None:
        from dataclasses import replace

        spec = replace(spec, seed=seed)
    return spec


def _cmd_generate(args) -> int:
    spec = _read_spec(args.spec, args.seed)
    if spec.seed is None:
        raise CliError("generation needs a seed: pass --seed or set it in the spec file")
    graph, report = double_configuration_model(spec)
    write_edge_list(graph, f"{args.out}.edges")
    write_attributes(graph, f"{args.out}.attrs")
    with open(f"{args.out}.report.json", "w", encoding="utf-8", newline="") as fh:
        fh.write(_json_text(report.to_json_dict()))
    sys.stdout.write(
        _json_text(
            {
                "nodes": graph.n,
                "edges": graph.edge_count,
                "erased_edges": report.erased_edges,
                "written": [f"{args.out}.edges", f"{args.out}.attrs", f"{args.out}.report.json"],
            }
        )
    )
    return 0


def _parse_grid(text: str, flag: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise CliError(f"{flag}: expected comma-separated numbers, got {text!r}") from exc
    if not values:
        raise CliError(f"{flag}: empty grid")
    return values


def _cmd_sweep(args) -> int:
    spec = _read_spec(args.spec, None)
    sigma_grid = _parse_grid(args.sigma_grid, "--sigma-grid")
    threads = args.threads if args.threads is not None else os.cpu_count()
    if args.lambda_grid is not None:
        table = sweep_lambda_sigma(
            spec,
            _parse_grid(args.lambda_grid, "--lambda-grid"),
            sigma_grid,
            args.replicates,
            args.seed,
            threads=threads,
        )
    else:
        table = sweep_sigma(spec, sigma_grid, args.replicates, args.seed, threads=threads)
    text = table.to_csv() if args.format == "csv" else _json_text(table.to_json_dict())
    _emit(text, args.out)
    return 0


def _cmd_predict(args) -> int:
    value = predicted_gap(args.lambda_, args.sigma)
    sys.stdout.write(f"{value:.6f}\n")
    return 0


def _cmd_verify(args) -> int:
    total = args.random_graphs
    passed = 0
    for instance in verification_suite(total, args.seed):
        verify_gap_theorem(instance.graph)
        check = balance_check(instance.graph)
        if not check.holds:
            raise TheoremViolationError(
                f"balance identity failed on suite graph {instance.index} ({instance.flavor}): "
                f"{check.lhs} != {check.rhs}"
            )
        passed += 1
    sys.stdout.write(f"{passed}/{total} positive-gap checks passed\n")
    return 0


def _cmd_hist(args) -> int:
    graph, _ = _load(args)
    profile = first_order_homophily(graph)
    colors = {"red": (RED,), "blue": (BLUE,), "both": (RED, BLUE)}[args.color]
    if args.svg is not None and len(colors) != 1:
        raise CliError("--svg needs a single color; pass --color red or --color blue")
    payload = {}
    for color in colors:
        values = [
            float(profile.h_float[i])
            for i in graph.nodes_of(color)
            if profile.defined_mask[i]
        ]
        if not values:
            raise CliError(f"no {color} nodes with defined homophily")
        edges, counts = histogram(values, args.bins)
        payload[str(color)] = {
            "bins": args.bins,
            "edges": edges.tolist(),
            "counts": counts.tolist(),
            "values": len(values),
        }
        if args.svg is not None:
            svg = histogram_svg(edges, counts, title=f"{color} first-order homophily")
            with open(args.svg, "w", encoding="utf-8", newline="") as fh:
                fh.write(svg)
    _emit(_json_text(payload), args.out)
    return 0


# -- parser wiring --------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="homophily-gap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    analyze = sub.add_parser("analyze", help="full gap report for one graph")
    _add_graph_input(analyze)
    analyze.add_argument("--backend", choices=(EXACT, FLOAT), default=EXACT)
    analyze.add_argument("--prune", choices=PRUNE_CHOICES, default="none")
    analyze.add_argument("--singular", choices=("strict", "relaxed"), default="strict")
    analyze.add_argument("--out", default=None, help="write JSON here instead of stdout")
    analyze.set_defaults(func=_cmd_analyze)

    prune = sub.add_parser("prune", help="iteratively drop nodes missing a neighbor color")
    _add_graph_input(prune)
    prune.add_argument("--out", default=None, help="prefix for pruned .edges/.attrs files")
    prune.set_defaults(func=_cmd_prune)

    generate = sub.add_parser("generate", help="sample one double-configuration-model graph")
    generate.add_argument("--spec", required=True, help="ConfigModelSpec JSON file")
    generate.add_argument("--seed", type=int, default=None, help="overrides the spec's seed")
    generate.add_argument("--out", required=True, help="output file prefix")
    generate.set_defaults(func=_cmd_generate)

    sweep = sub.add_parser("sweep", help="simulated vs predicted gaps over parameter grids")
    sweep.add_argument("--spec", required=True, help="base ConfigModelSpec JSON file")
    sweep.add_argument("--sigma-grid", required=True, help="comma-separated sigma_r values")
    sweep.add_argument("--lambda-grid", default=None, help="optional comma-separated lambda_r values")
    sweep.add_argument("--replicates", type=int, default=5)
    sweep.add_argument("--seed", type=int, required=True)
    sweep.add_argument("--format", choices=("json", "csv"), default="csv")
    sweep.add_argument("--threads", type=int, default=None, help="worker cap (default: all cores)")
    sweep.add_argument("--out", default=None)
    sweep.set_defaults(func=_cmd_sweep)

    predict = sub.add_parser("predict", help="closed-form list-version gap")
    predict.add_argument("--lambda", dest="lambda_", type=float, required=True)
    predict.add_argument("--sigma", type=float, required=True)
    predict.set_defaults(func=_cmd_predict)

    verify = sub.add_parser("verify", help="positive-gap theorem over seeded random graphs")
    verify.add_argument("--random-graphs", type=int, default=1000)
    verify.add_argument("--seed", type=int, required=True)
    verify.set_defaults(func=_cmd_verify)

    hist = sub.add_parser("hist", help="first-order homophily histogram")
    _add_graph_input(hist)
    hist.add_argument("--color", choices=("red", "blue", "both"), default="both")
    hist.add_argument("--bins", type=int, default=40)
    hist.add_argument("--svg", default=None, help="also render an SVG bar chart here")
    hist.add_argument("--out", default=None)
    hist.set_defaults(func=_cmd_hist)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except TheoremViolationError as exc:
        sys.stderr.write(f"theorem violation: {exc}\n")
        return 2
    except (GraphInputError, GenerationError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
