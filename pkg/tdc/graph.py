"""Immutable simple graphs over vertices 0..n-1, family generators and operators.

Adjacency is stored as one integer bitmask per vertex, so "is every member
of this class a neighbour of v" is the subset test ``cls & ~adj[v] == 0``.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx

from tdc.errors import InputError


def mask_of(vertices: Iterable[int]) -> int:
    """Return the bitmask with one bit set per vertex."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Return the vertices of a bitmask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph; ``adj[v]`` is the neighbour bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise InputError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def closed(self, v: int) -> int:
        """Closed neighbourhood N[v] as a bitmask."""
        return self.adj[v] | 1 << v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Every edge once, as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self.adj)

    def universal_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v] == self.full & ~(1 << v)]

    def is_independent(self, mask: int) -> bool:
        return all(self.adj[v] & mask == 0 for v in members(mask))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        """Relabel the nodes of ``g`` to 0..n-1 in sorted order."""
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return build_graph(len(nodes), [(index[u], index[v]) for u, v in g.edges()])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from an edge list; duplicates collapse."""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    """Same vertices; u ~ v exactly when they are distinct and not adjacent in ``g``."""
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G□H with vertex (u, x) labelled ``u * h.n + x``."""
    edges = []
    for u in range(g.n):
        for x, y in h.edges():
            edges.append((u * h.n + x, u * h.n + y))
    for x in range(h.n):
        for u, v in g.edges():
            edges.append((u * h.n + x, v * h.n + x))
    return build_graph(g.n * h.n, edges)


def add_universal_vertex(g: Graph) -> Graph:
    """Append vertex ``g.n`` adjacent to every existing vertex."""
    edges = g.edges() + [(v, g.n) for v in range(g.n)]
    return build_graph(g.n + 1, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G ∪ H with the vertices of ``h`` shifted by ``g.n``."""
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return build_graph(g.n + h.n, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return G[vertices] relabelled 0..k-1 and the list mapping new -> old label."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return build_graph(len(keep), edges), keep


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by least vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(members(comp))
    return out


def is_connected(g: Graph) -> bool:
    """The null graph counts as disconnected."""
    return g.n > 0 and len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


class Family(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_MULTIPARTITE = "multipartite"
    WHEEL = "wheel"
    STAR = "star"
    COMPLEMENT_CYCLE = "complement-cycle"
    COMPLEMENT_PATH = "complement-path"
    RANDOM_TREE = "random-tree"
    RANDOM_GRAPH = "random-graph"


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters.

    Parameter layouts: PATH/CYCLE/COMPLETE/COMPLEMENT_* take (n,); WHEEL and
    STAR take the rim/leaf count (n,); COMPLETE_MULTIPARTITE takes the part
    sizes; RANDOM_TREE takes (n, seed); RANDOM_GRAPH takes
    (n, numerator, denominator, seed).
    """

    kind: Family
    params: tuple[int, ...]

    def label(self) -> str:
        return f"{self.kind.value}:{','.join(str(p) for p in self.params)}"


_MIN_ORDER = {
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.COMPLETE: 1,
    Family.WHEEL: 3,
    Family.STAR: 1,
    Family.COMPLEMENT_CYCLE: 3,
    Family.COMPLEMENT_PATH: 1,
}


def _check_arity(spec: FamilySpec, arity: int) -> None:
    if len(spec.params) != arity:
        raise InputError(f"{spec.kind.value} takes {arity} parameter(s), got {len(spec.params)}")


def path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def cycle_edges(n: int) -> list[tuple[int, int]]:
    return path_edges(n) + [(n - 1, 0)]


def random_tree(n: int, seed: int) -> Graph:
    """Tree decoded from a uniformly random Prüfer sequence drawn from ``random.Random(seed)``."""
    if n < 1:
        raise InputError(f"random tree needs n >= 1, got {n}")
    if n == 1:
        return empty_graph(1)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(seq))


def random_graph(n: int, num: int, den: int, seed: int) -> Graph:
    """G(n, num/den): pairs (i, j), i < j, visited lexicographically, one draw each."""
    if n < 0 or den <= 0 or not 0 <= num <= den:
        raise InputError(f"random graph needs n >= 0 and 0 <= {num}/{den} <= 1")
    rng = random.Random(seed)
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.randrange(den) < num]
    return build_graph(n, edges)


def prufer_trees(n: int) -> Iterator[Graph]:
    """Every labelled tree on n >= 2 vertices, one per Prüfer sequence."""
    if n == 2:
        yield build_graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield Graph.from_networkx(nx.from_prufer_sequence(list(seq)))


def generate(spec: FamilySpec) -> Graph:
    """Build the canonically labelled member of a family.

    Paths and cycles use v_i ~ v_{i+1}; the wheel and star hub is the last
    vertex; multipartite parts occupy consecutive label blocks.
    """
    kind = spec.kind
    if kind in _MIN_ORDER:
        _check_arity(spec, 1)
        (n,) = spec.params
        if n < _MIN_ORDER[kind]:
            raise InputError(f"{kind.value} needs n >= {_MIN_ORDER[kind]}, got {n}")
        if kind is Family.PATH:
            return build_graph(n, path_edges(n))
        if kind is Family.CYCLE:
            return build_graph(n, cycle_edges(n))
        if kind is Family.COMPLETE:
            return build_graph(n, itertools.combinations(range(n), 2))
        if kind is Family.WHEEL:
            return add_universal_vertex(build_graph(n, cycle_edges(n)))
        if kind is Family.STAR:
            return add_universal_vertex(empty_graph(n))
        if kind is Family.COMPLEMENT_CYCLE:
            return complement(build_graph(n, cycle_edges(n)))
        return complement(build_graph(n, path_edges(n)))
    if kind is Family.COMPLETE_MULTIPARTITE:
        sizes = spec.params
        if not sizes or any(s < 1 for s in sizes):
            raise InputError(f"multipartite needs at least one part and positive part sizes, got {sizes}")
        blocks = multipartite_parts(sizes)
        edges = [(u, v) for a, b in itertools.combinations(blocks, 2) for u in a for v in b]
        return build_graph(sum(sizes), edges)
    if kind is Family.RANDOM_TREE:
        _check_arity(spec, 2)
        return random_tree(*spec.params)
    if kind is Family.RANDOM_GRAPH:
        _check_arity(spec, 4)
        return random_graph(*spec.params)
    raise InputError(f"unknown family {kind}")


def multipartite_parts(sizes: Iterable[int]) -> list[list[int]]:
    """The part blocks used by ``generate`` for a complete multipartite graph."""
    parts = []
    start = 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    return parts
