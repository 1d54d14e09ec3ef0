"""CHROMATIC NUMBER to TOTAL DOMINATOR CHROMATIC NUMBER: add a universal
vertex and ask for one more color."""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Iterable

from tdc.coloring import Coloring, chromatic_number_exact, is_proper
from tdc.errors import InputError
from tdc.graph import Graph, add_universal_vertex
from tdc.run import run_batch
from tdc.solver import DEFAULT_NODE_BUDGET, tdc_exact


@dataclass(frozen=True)
class ReductionInstance:
    source: Graph
    k: int
    reduced: Graph
    k_prime: int

    @property
    def universal(self) -> int:
        """Label of the added vertex in ``reduced``."""
        return self.source.n


@dataclass(frozen=True)
class ReductionCheck:
    """Outcome of one round trip. ``holds`` is None when a solve ran out of budget."""

    chi: int
    tdc_of_reduced: int | None
    holds: bool | None
    universal_singleton: bool | None = None
    extracted: Coloring | None = None
    extracted_proper: bool | None = None

    @property
    def inconclusive(self) -> bool:
        return self.holds is None

    def to_json(self) -> dict:
        return {
            "chi": self.chi,
            "tdc_of_reduced": self.tdc_of_reduced,
            "holds": self.holds,
            "universal_singleton": self.universal_singleton,
            "extracted": self.extracted.to_json() if self.extracted else None,
            "extracted_proper": self.extracted_proper,
        }


def reduce(g: Graph, k: int) -> ReductionInstance:
    if k < 1:
        raise InputError(f"target color count must be at least 1, got {k}")
    return ReductionInstance(g, k, add_universal_vertex(g), k + 1)


def verify_reduction(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> ReductionCheck:
    """Check χ_d^t(G') = χ(G) + 1 and walk the witness back to G.

    Deleting the universal vertex from an optimal witness of G' must leave a
    proper coloring of G, and the universal vertex must be alone in its class.
    """
    chi, _ = chromatic_number_exact(g)
    inst = reduce(g, max(chi, 1))
    report = tdc_exact(inst.reduced, budget)
    if not report.exact:
        return ReductionCheck(chi, None, None)
    witness = report.witness
    u = inst.universal
    own = witness.class_of(u)
    singleton = sum(1 for c in witness.assignment if c == own) == 1
    extracted = Coloring.from_labels(witness.assignment[:u])
    return ReductionCheck(
        chi=chi,
        tdc_of_reduced=report.value,
        holds=report.value == chi + 1,
        universal_singleton=singleton,
        extracted=extracted,
        extracted_proper=is_proper(g, extracted) and extracted.k <= report.value - 1,
    )


def verify_reductions(
    graphs: Iterable[Graph],
    budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> list[ReductionCheck]:
    return run_batch(partial(verify_reduction, budget=budget), graphs, workers)
