"""tdc CLI entry point."""

import argparse
import sys

from tdc import __version__
from tdc.commands import (
    INVARIANTS,
    BoundsCommand,
    GenCommand,
    ReduceCommand,
    SolveCommand,
    TableCommand,
    VerifyCommand,
)
from tdc.config import VALID_FORMATS, set_format, set_node_budget, set_verbose, set_workers
from tdc.parse import FAMILY_HELP
from tdc.solver import CHI_DT


def cmd_gen(args: argparse.Namespace) -> None:
    GenCommand(args).execute()


def cmd_solve(args: argparse.Namespace) -> None:
    SolveCommand(args).execute()


def cmd_bounds(args: argparse.Namespace) -> None:
    BoundsCommand(args).execute()


def cmd_verify(args: argparse.Namespace) -> None:
    VerifyCommand(args).execute()


def cmd_reduce(args: argparse.Namespace) -> None:
    ReduceCommand(args).execute()


def cmd_table(args: argparse.Namespace) -> None:
    TableCommand(args).execute()


def _add_common(parser: argparse.ArgumentParser, budget: bool = True, workers: bool = False) -> None:
    parser.add_argument(
        "--format", "-f",
        choices=VALID_FORMATS,
        default=None,
        help="Output format for this invocation only",
    )
    parser.add_argument(
        "--verbose", "-v",
        choices=["true", "false"],
        default=None,
        metavar="BOOL",
        help="Enable/disable progress lines on stderr for this invocation only",
    )
    if budget:
        parser.add_argument(
            "--budget",
            type=int,
            default=None,
            metavar="N",
            help="Search-node cap per exact solve (overrides TDC_NODE_BUDGET and settings.json)",
        )
    if workers:
        parser.add_argument(
            "--workers", "-w",
            type=int,
            default=None,
            metavar="N",
            help="Worker processes for this invocation only",
        )


def _add_input(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", metavar="SPEC", help=FAMILY_HELP)
    source.add_argument("--in", dest="input", metavar="PATH", help="DIMACS .col file or JSON graph (.json)")
    parser.add_argument("--seed", type=int, default=None, help="Seed for random families")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdc",
        description="Exact solver and verification workbench for the total dominator chromatic number",
    )
    parser.add_argument("--version", action="version", version=f"tdc {__version__}")
    # Top-level flags: when provided, persist to .tdc/settings.json.
    parser.add_argument(
        "--node-budget",
        type=int,
        default=None,
        dest="global_node_budget",
        metavar="N",
        help="Persist the default node budget to .tdc/settings.json",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        dest="global_workers",
        metavar="N",
        help="Persist the worker count to .tdc/settings.json",
    )
    parser.add_argument(
        "--format",
        choices=VALID_FORMATS,
        default=None,
        dest="global_format",
        help="Persist the output format to .tdc/settings.json",
    )
    parser.add_argument(
        "--verbose",
        choices=["true", "false"],
        default=None,
        dest="global_verbose",
        metavar="BOOL",
        help="Persist the verbose setting to .tdc/settings.json (true/false)",
    )

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")

    # tdc gen --family SPEC [--out PATH]
    gen_parser = subparsers.add_parser("gen", help="Write a family graph as DIMACS or JSON")
    gen_parser.add_argument("--family", required=True, metavar="SPEC", help=FAMILY_HELP)
    gen_parser.add_argument("--seed", type=int, default=None, help="Seed for random families")
    gen_parser.add_argument("--out", "-o", default=None, metavar="PATH", help="Output file (.json selects JSON)")
    _add_common(gen_parser, budget=False)
    gen_parser.set_defaults(func=GenCommand)

    # tdc solve (--family SPEC | --in PATH) [--invariant INV]
    solve_parser = subparsers.add_parser("solve", help="Compute an invariant exactly, with a witness")
    _add_input(solve_parser)
    solve_parser.add_argument("--invariant", "-i", choices=INVARIANTS, default=CHI_DT)
    solve_parser.add_argument(
        "--singleton-check",
        action="store_true",
        help="Also report whether some optimal coloring has no singleton class",
    )
    _add_common(solve_parser)
    solve_parser.set_defaults(func=SolveCommand)

    # tdc bounds (--family SPEC | --in PATH) [--exact]
    bounds_parser = subparsers.add_parser("bounds", help="Print every applicable bound with its certificate")
    _add_input(bounds_parser)
    bounds_parser.add_argument("--exact", action="store_true", help="Also compute the exact value")
    _add_common(bounds_parser)
    bounds_parser.set_defaults(func=BoundsCommand)

    # tdc verify --family NAME --range A..B
    verify_parser = subparsers.add_parser("verify", help="Check a closed form against the exact solver")
    verify_parser.add_argument(
        "--family",
        required=True,
        metavar="NAME",
        help="cycle, path, wheel, complete, multipartite, complement-cycle, complement-path or tree",
    )
    verify_parser.add_argument("--range", default=None, metavar="A..B", help="Orders to check (A..B or A,B,C)")
    _add_common(verify_parser, workers=True)
    verify_parser.set_defaults(func=VerifyCommand)

    # tdc reduce --in PATH [--k K] [--out PATH] [--check]
    reduce_parser = subparsers.add_parser("reduce", help="Add a universal vertex: k colors -> k+1")
    reduce_parser.add_argument("--in", dest="input", required=True, metavar="PATH")
    reduce_parser.add_argument("--k", type=int, default=None, help="Target color count (default: chi of the input)")
    reduce_parser.add_argument("--out", "-o", default=None, metavar="PATH", help="Default: <stem>-reduced.col")
    reduce_parser.add_argument("--check", action="store_true", help="Verify chi_dt(G') = chi(G) + 1")
    _add_common(reduce_parser)
    reduce_parser.set_defaults(func=ReduceCommand)

    # tdc table (--family NAME | --compare) --range A..B [--exact]
    table_parser = subparsers.add_parser("table", help="Closed-form values over a range")
    table_parser.add_argument("--family", default=None, metavar="NAME")
    table_parser.add_argument("--compare", action="store_true", help="Path and wheel against cycle")
    table_parser.add_argument("--range", required=True, metavar="A..B")
    table_parser.add_argument("--exact", action="store_true", help="Add the exact solver's value")
    _add_common(table_parser)
    table_parser.set_defaults(func=TableCommand)

    return parser


def main(argv=None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)

    # Handle global-level flags: persist to settings.json.
    if args.global_node_budget is not None:
        set_node_budget(args.global_node_budget)
    if args.global_workers is not None:
        set_workers(args.global_workers)
    if args.global_format is not None:
        set_format(args.global_format)
    if args.global_verbose is not None:
        set_verbose(args.global_verbose)

    if args.command is None:
        if all(
            v is None
            for v in (args.global_node_budget, args.global_workers, args.global_format, args.global_verbose)
        ):
            parser.print_help()
        return

    try:
        args.func(args).execute()
    except KeyboardInterrupt:
        print("\n[tdc] Ok, stopping.", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
