"""Command-line front end.

Three subcommands: `run` executes one experiment and writes the metrics
CSV, `reproduce` regenerates the benchmark figure data with a deviation
report, `tie-table` dumps the tie-strength debug CSV for a graph.

Exit codes: 0 success, 1 usage error, 2 data error (unreadable or
inconsistent input files, unknown nodes, missing datasets).
"""
from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext

from .errors import ConfigError, GraphError
from .graph import load_edge_list_path
from .harness import (
    ExperimentConfig,
    parse_seeds_file,
    reproduce_paper,
    run_experiment,
    write_report_csv,
)
from .ties import build_tie_strength_table, dump_tie_table

__all__ = ["main", "build_parser"]


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; our contract reserves 2 for data
    # errors, so surface usage problems as ConfigError instead.
    def error(self, message: str):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="netdiffuse", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    run = sub.add_parser("run", help="run one diffusion experiment")
    run.add_argument("--graph", required=True, help="edge-list file")
    run.add_argument("--model", required=True, choices=("cns", "ic", "si"))
    run.add_argument("--seed-node", required=True, help="seed node label")
    run.add_argument("--ic-p", type=float, default=1.0,
                     help="cascade success probability (default 1.0)")
    run.add_argument("--si-beta", type=float, default=0.5,
                     help="per-contact infection probability (default 0.5)")
    run.add_argument("--rng-seed", type=int, default=42)
    run.add_argument("--runs", type=int, default=1,
                     help="repetitions; > 1 only for stochastic configs")
    run.add_argument("--max-iterations", type=int, default=None)
    run.add_argument("--out", required=True, help="metrics CSV path, - for stdout")

    rep = sub.add_parser("reproduce", help="regenerate benchmark figure data")
    rep.add_argument("--data-dir", required=True, help="directory with the four edge lists")
    rep.add_argument("--out-dir", required=True, help="output directory for CSVs")
    rep.add_argument("--seeds", default=None,
                     help="seed config file with dataset=label lines")

    tie = sub.add_parser("tie-table", help="dump the tie-strength debug CSV")
    tie.add_argument("--graph", required=True, help="edge-list file")
    tie.add_argument("--out", required=True, help="CSV path, - for stdout")
    return parser


def _out_stream(target: str):
    if target == "-":
        return nullcontext(sys.stdout)
    return open(target, "w", encoding="utf-8", newline="")


def _cmd_run(args: argparse.Namespace) -> int:
    config = ExperimentConfig(
        graph_path=args.graph,
        model=args.model,
        seed_node=args.seed_node,
        ic_probability=args.ic_p,
        si_beta=args.si_beta,
        rng_seed=args.rng_seed,
        runs=args.runs,
        max_iterations=args.max_iterations,
    )
    report = run_experiment(config)
    with _out_stream(args.out) as fh:
        write_report_csv(report, fh)
    return 0


def _cmd_reproduce(args: argparse.Namespace) -> int:
    seeds = parse_seeds_file(args.seeds) if args.seeds else {}
    written = reproduce_paper(args.data_dir, args.out_dir, seeds)
    for path in written:
        print(path)
    return 0


def _cmd_tie_table(args: argparse.Namespace) -> int:
    g = load_edge_list_path(args.graph)
    table = build_tie_strength_table(g)
    with _out_stream(args.out) as fh:
        dump_tie_table(table, fh)
    return 0


_COMMANDS = {
    "run": _cmd_run,
    "reproduce": _cmd_reproduce,
    "tie-table": _cmd_tie_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return 1
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"netdiffuse: {exc}", file=sys.stderr)
        return 1
    except (GraphError, OSError) as exc:
        print(f"netdiffuse: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
