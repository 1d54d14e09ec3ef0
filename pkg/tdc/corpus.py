"""Deterministic graph corpora for the verification runs.

Small graphs come isomorph-free from the networkx atlas and tree
generator; random instances are drawn from seeded generators so every run
sees the same graphs.
"""

from __future__ import annotations

import random
from typing import Iterator

import networkx as nx

from tdc.errors import InputError
from tdc.graph import Family, FamilySpec, Graph, disjoint_union, generate, is_connected, random_graph

# the atlas holds every graph on 0..7 vertices
ATLAS_MAX_ORDER = 7


def connected_graphs(max_order: int, min_order: int = 2) -> Iterator[Graph]:
    """Every connected graph with ``min_order``..``max_order`` vertices, one per isomorphism class."""
    if max_order > ATLAS_MAX_ORDER:
        raise InputError(f"the graph atlas stops at {ATLAS_MAX_ORDER} vertices")
    for h in nx.graph_atlas_g():
        if min_order <= h.number_of_nodes() <= max_order and nx.is_connected(h):
            yield Graph.from_networkx(h)


def trees(order: int) -> Iterator[Graph]:
    """Every tree on ``order`` vertices, one per isomorphism class."""
    if order == 1:
        yield Graph(1, (0,))
        return
    for t in nx.nonisomorphic_trees(order):
        yield Graph.from_networkx(t)


def random_connected_graphs(count: int, orders: tuple[int, ...], seed: int, density: tuple[int, int] = (1, 2)) -> list[Graph]:
    """``count`` connected G(n, p) samples, n cycling through ``orders``.

    Draws that come out disconnected are discarded and redrawn with the
    next seed.
    """
    num, den = density
    out = []
    next_seed = seed
    while len(out) < count:
        n = orders[len(out) % len(orders)]
        g = random_graph(n, num, den, next_seed)
        next_seed += 1
        if is_connected(g):
            out.append(g)
    return out


_UNION_PARTS = [
    FamilySpec(Family.PATH, (2,)),
    FamilySpec(Family.PATH, (3,)),
    FamilySpec(Family.PATH, (4,)),
    FamilySpec(Family.CYCLE, (3,)),
    FamilySpec(Family.CYCLE, (4,)),
    FamilySpec(Family.CYCLE, (5,)),
    FamilySpec(Family.STAR, (2,)),
    FamilySpec(Family.STAR, (3,)),
    FamilySpec(Family.COMPLETE, (3,)),
    FamilySpec(Family.COMPLETE_MULTIPARTITE, (2, 2)),
    FamilySpec(Family.COMPLETE_MULTIPARTITE, (1, 2, 2)),
    FamilySpec(Family.WHEEL, (4,)),
]


def random_unions(count: int, seed: int) -> list[tuple[list[FamilySpec], Graph]]:
    """Disjoint unions of two or three small family graphs."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        parts = [rng.choice(_UNION_PARTS) for _ in range(rng.choice((2, 3)))]
        g = generate(parts[0])
        for spec in parts[1:]:
            g = disjoint_union(g, generate(spec))
        out.append((parts, g))
    return out
