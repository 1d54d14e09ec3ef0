"""Colorings, the proper / dominator / total dominator predicates, common and
private neighbourhoods, and the exact chromatic number."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from tdc.errors import DomainError, InputError
from tdc.graph import Graph, mask_of, members


@dataclass(frozen=True)
class Coloring:
    """``assignment[v]`` is the class index (1..k) of vertex v.

    Every index in 1..k is used, so the classes partition the vertex set
    into ``k`` non-empty parts.
    """

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        used = set(self.assignment)
        if used and used != set(range(1, max(used) + 1)):
            raise InputError(f"class indices must be contiguous from 1, got {sorted(used)}")

    @property
    def k(self) -> int:
        return max(self.assignment, default=0)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def classes(self) -> list[int]:
        """Class bitmasks; entry i - 1 holds class i."""
        out = [0] * self.k
        for v, c in enumerate(self.assignment):
            out[c - 1] |= 1 << v
        return out

    def class_lists(self) -> list[list[int]]:
        return [members(m) for m in self.classes()]

    def class_of(self, v: int) -> int:
        return self.assignment[v]

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Coloring:
        """Canonicalise arbitrary labels: classes numbered by first use in vertex order."""
        index: dict[int, int] = {}
        out = []
        for label in labels:
            if label not in index:
                index[label] = len(index) + 1
            out.append(index[label])
        return cls(tuple(out))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> Coloring:
        labels = [-1] * n
        for i, cls_vertices in enumerate(classes):
            for v in cls_vertices:
                if not 0 <= v < n:
                    raise InputError(f"vertex {v} outside 0..{n - 1}")
                if labels[v] != -1:
                    raise InputError(f"vertex {v} appears in two classes")
                labels[v] = i
        if -1 in labels:
            raise InputError(f"vertex {labels.index(-1)} has no class")
        return cls.from_labels(labels)

    def to_json(self) -> dict:
        return {"k": self.k, "assignment": list(self.assignment)}


def _check_total(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise InputError(f"coloring covers {c.n} vertices but the graph has {g.n}")


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_total(g, c)
    return all(c.assignment[u] != c.assignment[v] for u, v in g.edges())


def dominated_classes(g: Graph, v: int, classes: Sequence[int], closed: bool = False) -> list[int]:
    """1-based indices of the classes contained in N(v) (or N[v] when ``closed``)."""
    nbhd = g.closed(v) if closed else g.adj[v]
    return [i + 1 for i, cls in enumerate(classes) if cls & ~nbhd == 0]


def _cn_mask(g: Graph, cls: int) -> int:
    return mask_of(v for v in range(g.n) if cls & ~g.adj[v] == 0)


def common_neighborhood(g: Graph, cls: Iterable[int]) -> list[int]:
    """Vertices adjacent to every member of ``cls``."""
    cls_mask = mask_of(cls)
    if cls_mask == 0:
        raise InputError("common neighbourhood of an empty class")
    if cls_mask & ~g.full:
        raise InputError(f"class {members(cls_mask)} is not a subset of 0..{g.n - 1}")
    return members(_cn_mask(g, cls_mask))


def private_neighborhood(g: Graph, c: Coloring, i: int) -> list[int]:
    """Vertices that dominate class ``i`` and no other class."""
    _check_total(g, c)
    if not 1 <= i <= c.k:
        raise InputError(f"class index {i} outside 1..{c.k}")
    classes = c.classes()
    return [v for v in range(g.n) if dominated_classes(g, v, classes) == [i]]


def is_total_dominator_coloring(g: Graph, c: Coloring) -> bool:
    """Proper, and every vertex is adjacent to all of some class."""
    if not is_proper(g, c):
        return False
    classes = c.classes()
    return all(any(cls & ~g.adj[v] == 0 for cls in classes) for v in range(g.n))


def is_dominator_coloring(g: Graph, c: Coloring) -> bool:
    """Proper, and every closed neighbourhood contains some class."""
    if not is_proper(g, c):
        return False
    classes = c.classes()
    return all(any(cls & ~g.closed(v) == 0 for cls in classes) for v in range(g.n))


def verify_cn_cover(g: Graph, c: Coloring) -> bool:
    """Check that the common neighbourhoods of the classes of size <= Δ cover V."""
    if not is_total_dominator_coloring(g, c):
        raise DomainError("coloring is not a total dominator coloring")
    delta = g.max_degree
    covered = 0
    for cls in c.classes():
        if cls.bit_count() <= delta:
            covered |= _cn_mask(g, cls)
    return covered == g.full


# ---------------------------------------------------------------------------
# Chromatic number
# ---------------------------------------------------------------------------


def greedy_clique(g: Graph) -> list[int]:
    """Largest clique found by max-degree greedy growth from every start vertex."""
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        candidates = g.adj[start]
        while candidates:
            v = max(members(candidates), key=lambda u: ((g.adj[u] & candidates).bit_count(), -u))
            clique.append(v)
            candidates &= g.adj[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def greedy_coloring(g: Graph, order: Sequence[int] | None = None) -> Coloring:
    """First-fit coloring; largest-degree-first when no order is given."""
    if order is None:
        order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    labels = [0] * g.n
    for v in order:
        taken = {labels[u] for u in g.neighbors(v)}
        c = 1
        while c in taken:
            c += 1
        labels[v] = c
    return Coloring.from_labels(labels)


def k_coloring(g: Graph, k: int, order: Sequence[int] | None = None) -> Coloring | None:
    """A proper coloring with at most ``k`` classes, or None.

    Vertices are coloured in ``order``; a vertex may open at most one new
    class, which removes colour-permutation symmetry.
    """
    if order is None:
        order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    labels = [0] * g.n
    class_masks = [0] * k

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in range(min(used + 1, k)):
            if class_masks[c] & g.adj[v]:
                continue
            class_masks[c] |= 1 << v
            labels[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            class_masks[c] &= ~(1 << v)
        return False

    if not place(0, 0):
        return None
    return Coloring.from_labels(labels)


def chromatic_number_exact(g: Graph) -> tuple[int, Coloring]:
    if g.n == 0:
        return 0, Coloring(())
    greedy = greedy_coloring(g)
    for k in range(len(greedy_clique(g)), greedy.k):
        found = k_coloring(g, k)
        if found is not None:
            return found.k, found
    return greedy.k, greedy
