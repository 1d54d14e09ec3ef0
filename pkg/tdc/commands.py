"""Command implementations for the tdc CLI.

Each public class corresponds to a subcommand. ``execute()`` runs the
command and turns library errors into a one-line ``[tdc]`` diagnostic and
an exit code: 2 for bad input, 3 when the node budget ran out, 1 for
anything else.
"""

from __future__ import annotations

import abc
import argparse
import json
import os
import sys
import time

from tdc import corpus
from tdc.coloring import Coloring, chromatic_number_exact, verify_cn_cover
from tdc.config import ensure_defaults, get_format, get_node_budget, get_verbose, get_workers
from tdc.domination import gamma_exact, gamma_t_exact
from tdc.errors import BudgetExceeded, DomainError, InputError, TdcError
from tdc.families import (
    FormulaFamily,
    FormulaQuery,
    comparison_report,
    formula_value,
    verify_family,
)
from tdc.graph import Family, FamilySpec, Graph, generate
from tdc.parse import format_dimacs, load_graph, parse_family, parse_range, save_graph
from tdc.reduction import reduce, verify_reduction
from tdc.solver import CHI, CHI_D, CHI_DT, bounds_report, dc_exact, tdc_exact

GAMMA = "gamma"
GAMMA_T = "gamma_t"
INVARIANTS = [CHI, CHI_D, CHI_DT, GAMMA, GAMMA_T]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------


def _fail(message: str, code: int = EXIT_FAILURE) -> None:
    print(f"[tdc] {message}", file=sys.stderr)
    sys.exit(code)


def _resolve_verbose(args: argparse.Namespace) -> bool:
    """Return effective verbose: per-command CLI flag > persisted setting."""
    if getattr(args, "verbose", None) is not None:
        return args.verbose == "true"
    return get_verbose()


def _resolve_format(args: argparse.Namespace) -> str:
    if getattr(args, "format", None) is not None:
        return args.format
    return get_format()


def _resolve_budget(args: argparse.Namespace) -> int:
    """Per-command --budget > TDC_NODE_BUDGET > settings.json > default."""
    if getattr(args, "budget", None) is not None:
        if args.budget < 1:
            raise InputError(f"node budget must be positive, got {args.budget}")
        return args.budget
    return get_node_budget()


def _resolve_workers(args: argparse.Namespace) -> int:
    if getattr(args, "workers", None) is not None:
        if args.workers < 1:
            raise InputError(f"workers must be positive, got {args.workers}")
        return args.workers
    return get_workers()


_SEEDED = {Family.RANDOM_TREE: 2, Family.RANDOM_GRAPH: 4}


def _with_seed(spec: FamilySpec, seed: int | None) -> FamilySpec:
    """Fill in or override the trailing seed parameter of a random family."""
    arity = _SEEDED.get(spec.kind)
    if arity is None:
        if seed is not None:
            raise InputError(f"--seed only applies to random families, not {spec.kind.value}")
        return spec
    params = spec.params
    if len(params) == arity - 1:
        params = params + (seed if seed is not None else 0,)
    elif len(params) == arity and seed is not None:
        params = params[:-1] + (seed,)
    return FamilySpec(spec.kind, params)


def _load_input(args: argparse.Namespace) -> tuple[Graph, str]:
    if getattr(args, "family", None):
        spec = _with_seed(parse_family(args.family), getattr(args, "seed", None))
        return generate(spec), spec.label()
    return load_graph(args.input), args.input


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# Command base class
# ---------------------------------------------------------------------------


class Command(abc.ABC):
    """Base class for all tdc commands.

    Subclasses implement ``run()`` and return an exit code.
    """

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        self.verbose = _resolve_verbose(args)
        self.format = _resolve_format(args)

    def log(self, message: str) -> None:
        if self.verbose:
            print(f"[tdc] {message}", file=sys.stderr)

    def emit(self, data, text: str) -> None:
        print(_dump(data) if self.format == "json" else text)

    def execute(self) -> None:
        ensure_defaults()
        try:
            code = self.run()
        except (InputError, DomainError) as exc:
            _fail(str(exc), EXIT_INPUT)
        except BudgetExceeded as exc:
            _fail(str(exc), EXIT_BUDGET)
        except TdcError as exc:
            _fail(f"internal error: {exc}", EXIT_FAILURE)
        else:
            if code:
                sys.exit(code)

    @abc.abstractmethod
    def run(self) -> int:
        raise NotImplementedError


# ---------------------------------------------------------------------------
# Concrete command implementations
# ---------------------------------------------------------------------------


class GenCommand(Command):
    """Write a family graph as DIMACS or JSON."""

    def run(self) -> int:
        spec = _with_seed(parse_family(self.args.family), self.args.seed)
        g = generate(spec)
        if self.args.out:
            save_graph(self.args.out, g, comment=spec.label())
            self.log(f"wrote {spec.label()} ({g.n} vertices, {g.m} edges) to {self.args.out}")
        elif self.format == "json":
            print(json.dumps(g.to_json(), sort_keys=True))
        else:
            sys.stdout.write(format_dimacs(g, comment=spec.label()))
        return EXIT_OK


def _coloring_text(name: str, value: int, coloring: Coloring | None) -> str:
    lines = [f"{name} = {value}"]
    if coloring is not None:
        lines.extend(f"  class {i}: {cls}" for i, cls in enumerate(coloring.class_lists(), start=1))
    return "\n".join(lines)


class SolveCommand(Command):
    """Compute one invariant exactly, with a witness."""

    def run(self) -> int:
        g, label = _load_input(self.args)
        invariant = self.args.invariant
        budget = _resolve_budget(self.args)
        start = time.perf_counter()
        if invariant == CHI:
            value, coloring = chromatic_number_exact(g)
            data = {"invariant": CHI, "status": "exact", "value": value, "witness": coloring.to_json(),
                    "classes": coloring.class_lists()}
            self.emit(data, _coloring_text(CHI, value, coloring))
            return EXIT_OK
        if invariant in (GAMMA, GAMMA_T):
            result = gamma_exact(g) if invariant == GAMMA else gamma_t_exact(g)
            data = {"invariant": invariant, "status": "exact", "value": result.value,
                    "witnesses": result.witnesses}
            text = f"{invariant} = {result.value}\n  first witness: {result.witnesses[0]}\n  witnesses: {len(result.witnesses)}"
            self.emit(data, text)
            return EXIT_OK

        if invariant == CHI_DT:
            report = tdc_exact(g, budget, singleton_check=self.args.singleton_check)
        else:
            report = dc_exact(g, budget)
        self.log(f"{label}: {report.nodes_explored} nodes in {time.perf_counter() - start:.2f}s")
        data = report.to_json()
        if not report.exact:
            text = (f"{invariant} in [{report.lower_bound_used}, {report.upper_bound_used}] "
                    f"(node budget {budget} exhausted)")
            self.emit(data, text)
            return EXIT_BUDGET
        text = _coloring_text(invariant, report.value, report.witness)
        if invariant == CHI_DT:
            data["cn_cover"] = verify_cn_cover(g, report.witness)
            if report.singleton_free is not None:
                text += f"\n  singleton-free optimum: {'yes' if report.singleton_free else 'no'}"
        self.emit(data, text)
        return EXIT_OK


class BoundsCommand(Command):
    """Print every applicable bound with its certificate."""

    def run(self) -> int:
        g, label = _load_input(self.args)
        record = bounds_report(g, exact=self.args.exact, budget=_resolve_budget(self.args))
        lines = [f"{label}: {g.n} vertices, {g.m} edges"]
        for name, entry in record.entries.items():
            if name in record.budget_exhausted:
                shown = "node budget exhausted"
            else:
                shown = "n/a" if entry is None else entry.value
            lines.append(f"  {name:<16} {shown}")
        lines.append(f"  bracket          [{record.lower()}, {record.upper()}]")
        code = EXIT_BUDGET if record.budget_exhausted else EXIT_OK
        if record.exact is not None:
            if record.exact.exact:
                lines.append(f"  exact            {record.exact.value}")
            else:
                lines.append("  exact            node budget exhausted")
                code = EXIT_BUDGET
        self.emit(record.to_json(), "\n".join(lines))
        return code


def _multipartite_members(n: int) -> list[tuple[int, ...]]:
    """Part-size tuples (non-increasing) with 2..4 parts summing to n."""
    out = []

    def rec(left: int, cap: int, parts: tuple[int, ...]) -> None:
        if left == 0:
            if len(parts) >= 2:
                out.append(parts)
            return
        if len(parts) == 4:
            return
        for size in range(min(left, cap), 0, -1):
            rec(left - size, size, parts + (size,))

    rec(n, n, ())
    return out


class VerifyCommand(Command):
    """Check a family's closed form against the exact solver over a range."""

    def run(self) -> int:
        name, _, params = self.args.family.partition(":")
        try:
            family = FormulaFamily(name)
        except ValueError:
            known = ", ".join(f.value for f in FormulaFamily)
            raise InputError(f"no closed form for family '{name}' (known: {known})") from None
        if params and self.args.range is not None:
            raise InputError(f"give the orders either in --family {self.args.family} or in --range, not both")
        if params and family is FormulaFamily.COMPLETE_MULTIPARTITE:
            members = [tuple(parse_range(params))]
        elif params:
            ns = parse_range(params)
        elif self.args.range is None:
            raise InputError(f"verify --family {name} needs --range")
        else:
            ns = parse_range(self.args.range)
        if family is FormulaFamily.TREE:
            members = [t for n in ns if n >= 3 for t in corpus.trees(n)]
        elif family is FormulaFamily.COMPLETE_MULTIPARTITE and not params:
            members = [p for n in ns for p in _multipartite_members(n)]
        elif family is not FormulaFamily.COMPLETE_MULTIPARTITE:
            members = ns

        def progress(_i, row) -> None:
            self.log(f"{row.spec}: formula {row.formula_value}, exact {row.exact_value}")

        report = verify_family(
            family, members, budget=_resolve_budget(self.args), workers=_resolve_workers(self.args),
            on_row=progress,
        )
        self.emit(report.to_json(), report.render())
        if any(r.exact_value is not None for r in report.unexpected):
            return EXIT_FAILURE
        if report.summary()["unresolved"]:
            return EXIT_BUDGET
        return EXIT_OK


class ReduceCommand(Command):
    """Apply the universal-vertex reduction to a DIMACS graph."""

    def run(self) -> int:
        g = load_graph(self.args.input)
        k = self.args.k if self.args.k is not None else max(chromatic_number_exact(g)[0], 1)
        inst = reduce(g, k)
        out = self.args.out
        if out is None:
            stem, ext = os.path.splitext(self.args.input)
            out = f"{stem}-reduced{ext or '.col'}"
        save_graph(out, inst.reduced, comment=f"universal vertex {inst.universal + 1} added; k {inst.k} -> {inst.k_prime}")
        self.log(f"wrote {out}")
        data = {"input": self.args.input, "output": out, "k": inst.k, "k_prime": inst.k_prime,
                "universal": inst.universal}
        text = f"{inst.k} -> {inst.k_prime}"
        code = EXIT_OK
        if self.args.check:
            check = verify_reduction(g, _resolve_budget(self.args))
            data["check"] = check.to_json()
            if check.inconclusive:
                text += "\ncheck: inconclusive (node budget exhausted)"
                code = EXIT_BUDGET
            else:
                text += (f"\ncheck: chi = {check.chi}, reduced chi_dt = {check.tdc_of_reduced}, "
                         f"{'holds' if check.holds else 'FAILS'}")
                if not (check.holds and check.universal_singleton and check.extracted_proper):
                    code = EXIT_FAILURE
        self.emit(data, text)
        return code


class TableCommand(Command):
    """Closed-form values over a range, or the path/wheel-vs-cycle comparison."""

    def run(self) -> int:
        ns = parse_range(self.args.range)
        budget = _resolve_budget(self.args)
        if self.args.compare:
            report = comparison_report(ns, exact=self.args.exact, budget=budget)
            self.emit(report.to_json(), report.render())
            return EXIT_OK
        if not self.args.family:
            raise InputError("table needs --family or --compare")
        try:
            family = FormulaFamily(self.args.family)
        except ValueError:
            raise InputError(f"no closed form for family '{self.args.family}'") from None
        if family in (FormulaFamily.TREE, FormulaFamily.COMPLETE_MULTIPARTITE):
            raise InputError(f"table takes a single-order family, not {family.value}")
        rows = []
        for n in ns:
            q = FormulaQuery(family, (n,))
            row = {"n": n, "value": formula_value(q)}
            if self.args.exact:
                report = tdc_exact(q.graph(), budget)
                row["exact"] = report.value
            rows.append(row)
        lines = [f"{family.value}", "  n  value" + ("  exact" if self.args.exact else "")]
        for row in rows:
            line = f"{row['n']:>3}  {row['value']:>5}"
            if self.args.exact:
                line += f"  {'?' if row['exact'] is None else row['exact']:>5}"
            lines.append(line)
        self.emit({"family": family.value, "rows": rows}, "\n".join(lines))
        return EXIT_OK
