"""Distances and tree structure: eccentricity, diameter, radius, center,
leaves, support vertices and the leaf-to-support map."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from tdc.errors import DomainError, InputError
from tdc.graph import Graph, is_tree, members


@dataclass(frozen=True)
class TreeProfile:
    leaves: list[int]
    supports: list[int]
    sigma: dict[int, int]
    diameter: int
    radius: int
    center: tuple[int, ...]
    eccentricity: list[int] = field(repr=False)

    @property
    def s(self) -> int:
        return len(self.supports)

    @property
    def ell(self) -> int:
        return len(self.leaves)

    @property
    def center_is_vertex(self) -> bool:
        return len(self.center) == 1

    def to_json(self) -> dict:
        return {
            "leaves": self.leaves,
            "supports": self.supports,
            "sigma": {str(u): v for u, v in sorted(self.sigma.items())},
            "s": self.s,
            "ell": self.ell,
            "diameter": self.diameter,
            "radius": self.radius,
            "center": list(self.center),
        }


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Shortest-path distances from ``source``; unreachable vertices get ``math.inf``."""
    if not 0 <= source < g.n:
        raise InputError(f"source {source} outside 0..{g.n - 1}")
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if dist[u] == math.inf:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def eccentricities(g: Graph) -> list[float]:
    return [max(bfs_distances(g, v)) for v in range(g.n)]


def _strip_center(t: Graph) -> tuple[int, ...]:
    """Peel leaves round by round until one vertex or one edge remains."""
    alive = t.full
    degree = [t.degree(v) for v in range(t.n)]
    while alive.bit_count() > 2:
        layer = [v for v in members(alive) if degree[v] <= 1]
        for v in layer:
            alive &= ~(1 << v)
        for v in layer:
            for u in members(t.adj[v] & alive):
                degree[u] -= 1
    return tuple(members(alive))


def analyze_tree(t: Graph) -> TreeProfile:
    if t.n < 2 or not is_tree(t):
        raise DomainError("expected a tree on at least two vertices")
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    sigma = {}
    for u in leaves:
        (w,) = t.neighbors(u)
        if t.degree(w) > 1:
            sigma[u] = w
    supports = sorted(set(sigma.values()))
    # diameter by double BFS: the farthest vertex from anywhere is a periphery vertex
    first = bfs_distances(t, 0)
    far = max(range(t.n), key=lambda v: first[v])
    diameter = int(max(bfs_distances(t, far)))
    ecc = [int(e) for e in eccentricities(t)]
    return TreeProfile(
        leaves=leaves,
        supports=supports,
        sigma=sigma,
        diameter=diameter,
        radius=min(ecc),
        center=_strip_center(t),
        eccentricity=ecc,
    )


def leaves_at_distance(t: Graph, profile: TreeProfile, d: int) -> bool:
    """True if some pair of leaves sits exactly ``d`` apart."""
    for u in profile.leaves:
        dist = bfs_distances(t, u)
        if any(dist[w] == d for w in profile.leaves if w != u):
            return True
    return False
