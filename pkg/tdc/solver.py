"""Exact total dominator / dominator chromatic numbers and the constructive
upper bounds that seed them.

Values come from a branch-and-bound over the *dominated* classes: every
vertex x must be adjacent to all of some class D, so the search repeatedly
takes the most constrained undominated vertex and branches on the
independent subset of N(x) that becomes its class. Once every vertex is
dominated, the leftover vertices need exactly χ(G[rest]) more classes.
The witness is then recovered by a first-use-canonical assignment search
at the optimum, which yields the lexicographically least assignment.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from tdc.coloring import (
    Coloring,
    chromatic_number_exact,
    is_dominator_coloring,
    is_total_dominator_coloring,
)
from tdc.domination import gamma_exact, gamma_t_exact
from tdc.errors import BudgetExceeded, ConstructionError, DomainError, InputError
from tdc.graph import Graph, connected_components, induced_subgraph, is_connected, mask_of, members

DEFAULT_NODE_BUDGET = 2_000_000

CHI = "chi"
CHI_D = "chi_d"
CHI_DT = "chi_dt"


@dataclass
class SolveReport:
    invariant: str
    value: int | None
    witness: Coloring | None
    lower_bound_used: int
    upper_bound_used: int
    nodes_explored: int
    elapsed: float
    canonical_witness: bool = True
    singleton_free: bool | None = None

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_json(self, timing: bool = False) -> dict:
        data = {
            "invariant": self.invariant,
            "status": "exact" if self.exact else "bounds-only",
            "value": self.value,
            "witness": self.witness.to_json() if self.witness else None,
            "classes": self.witness.class_lists() if self.witness else None,
            "lower_bound_used": self.lower_bound_used,
            "upper_bound_used": self.upper_bound_used,
            "nodes_explored": self.nodes_explored,
            "canonical_witness": self.canonical_witness,
        }
        if self.singleton_free is not None:
            data["singleton_free"] = self.singleton_free
        if timing:
            data["elapsed"] = round(self.elapsed, 6)
        return data


@dataclass
class BoundEntry:
    """One bound plus the object that realises it.

    ``certificate`` is the vertex set or partition named by the bound;
    ``coloring`` is the constructive total dominator coloring for upper
    bounds.
    """

    value: int
    certificate: list | dict = field(default_factory=list)
    coloring: Coloring | None = None

    def to_json(self) -> dict:
        data = {"value": self.value, "certificate": self.certificate}
        if self.coloring is not None:
            data["coloring"] = self.coloring.to_json()
        return data


LOWER_BOUNDS = ("obs_lb", "components_lb")
UPPER_BOUNDS = (
    "trivial_ub",
    "components_ub",
    "alpha0_ub",
    "regular_ub",
    "gamma_t_chi_ub",
    "partite_ub",
    "gamma_t_p_ub",
    "universal_value",
)


@dataclass
class BoundsRecord:
    """Bound entries by name; ``budget_exhausted`` names entries left empty by the node budget."""

    entries: dict[str, BoundEntry | None]
    exact: SolveReport | None = None
    budget_exhausted: list[str] = field(default_factory=list)

    def lower(self) -> int:
        return max(e.value for name, e in self.entries.items() if name in LOWER_BOUNDS and e)

    def upper(self) -> int:
        return min(e.value for name, e in self.entries.items() if name in UPPER_BOUNDS and e)

    def to_json(self) -> dict:
        data = {name: (e.to_json() if e else None) for name, e in self.entries.items()}
        if self.exact is not None:
            data["exact"] = self.exact.to_json()
        if self.budget_exhausted:
            data["budget_exhausted"] = self.budget_exhausted
        return data


@dataclass(frozen=True)
class ComponentBounds:
    lb: int
    ub: int
    values: list[int]
    complete_bipartite: list[bool]

    @property
    def equality_condition(self) -> bool:
        """At most one component is not complete bipartite."""
        return sum(not cb for cb in self.complete_bipartite) <= 1


@dataclass(frozen=True)
class PartiteBounds:
    partite_ub: BoundEntry | None
    gamma_t_p_ub: BoundEntry | None


def _require_no_isolated(g: Graph) -> None:
    if g.has_isolated_vertex():
        raise DomainError("graph has an isolated vertex; no total dominator coloring exists")


def _validated(g: Graph, coloring: Coloring, what: str) -> Coloring:
    if not is_total_dominator_coloring(g, coloring):
        raise ConstructionError(f"{what} construction is not a total dominator coloring")
    return coloring


# ---------------------------------------------------------------------------
# Search engine
# ---------------------------------------------------------------------------


def _independent_subsets(g: Graph, pool: int) -> list[int]:
    """Every non-empty independent subset of ``pool``, largest first."""
    out = []

    def grow(current: int, allowed: int) -> None:
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            v = low.bit_length() - 1
            nxt = current | low
            out.append(nxt)
            grow(nxt, allowed & ~g.adj[v])

    grow(0, pool)
    out.sort(key=lambda m: (-m.bit_count(), members(m)))
    return out


def _clique_in(g: Graph, pool: int) -> int:
    """Size of a first-fit greedy clique inside ``pool``, best over start vertices."""
    best = 0
    for start in members(pool):
        size = 1
        cand = g.adj[start] & pool
        while cand:
            low = cand & -cand
            size += 1
            cand &= g.adj[low.bit_length() - 1]
        best = max(best, size)
    return best


class _Search:
    """Shared state of one exact solve: rows, node counter and χ memo."""

    def __init__(self, g: Graph, closed: bool, budget: int) -> None:
        self.g = g
        self.closed = closed
        self.rows = [g.closed(v) if closed else g.adj[v] for v in range(g.n)]
        self.budget = budget
        self.nodes = 0
        self._chi: dict[int, tuple[int, list[int]]] = {}
        self._subsets = [None] * g.n

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)

    def dominators(self, cls: int) -> int:
        """Vertices whose (open or closed) neighbourhood contains ``cls``."""
        return mask_of(v for v in range(self.g.n) if cls & ~self.rows[v] == 0)

    def subsets(self, v: int) -> list[int]:
        if self._subsets[v] is None:
            self._subsets[v] = _independent_subsets(self.g, self.rows[v])
        return self._subsets[v]

    def chi_of(self, pool: int) -> tuple[int, list[int]]:
        """χ(G[pool]) with its classes as bitmasks of the original labels."""
        if pool not in self._chi:
            sub, labels = induced_subgraph(self.g, members(pool))
            value, col = chromatic_number_exact(sub)
            classes = [mask_of(labels[v] for v in cls) for cls in col.class_lists()]
            self._chi[pool] = (value, classes)
        return self._chi[pool]

    def forced_classes(self) -> list[int]:
        """Singleton classes every total dominator coloring must contain.

        A degree-one vertex u with neighbour w can only dominate {w}.
        """
        if self.closed:
            return []
        forced = {self.g.adj[u] for u in range(self.g.n) if self.g.degree(u) == 1}
        return sorted(forced)

    def optimum(self, lb: int, ub: int, incumbent: list[int]) -> tuple[int, list[int]]:
        """Minimum class count and one optimal partition (as class bitmasks)."""
        g = self.g
        best = [ub, incumbent]
        forced = self.forced_classes()
        used = 0
        dominated = 0
        for cls in forced:
            used |= cls
            dominated |= self.dominators(cls)

        def rec(chosen: list[int], used: int, dominated: int) -> None:
            self.tick()
            free = g.full & ~used
            need = 1 if dominated != g.full else 0
            if len(chosen) + max(_clique_in(g, free), need) >= best[0]:
                return
            if not need:
                value, classes = self.chi_of(free)
                if len(chosen) + value < best[0]:
                    best[0] = len(chosen) + value
                    best[1] = chosen + classes
                return
            pick = None
            options: list[int] = []
            for x in members(g.full & ~dominated):
                opts = [d for d in self.subsets(x) if d & used == 0]
                if pick is None or len(opts) < len(options):
                    pick, options = x, opts
                if not opts:
                    return
            for d in options:
                rec(chosen + [d], used | d, dominated | self.dominators(d))
                if best[0] <= lb:
                    return

        rec(list(forced), used, dominated)
        return best[0], best[1]

    def least_assignment(self, k: int) -> Coloring | None:
        """Lexicographically least first-use-canonical valid coloring with <= k classes."""
        g = self.g
        n = g.n
        rows = self.rows
        forced = 0
        for cls in self.forced_classes():
            forced |= cls
        labels = [0] * n
        classes = [0] * k

        def viable(colored: int, used: int) -> bool:
            uncolored = g.full & ~colored
            for x in range(n):
                row = rows[x]
                if used < k and row & uncolored:
                    continue
                if not any(classes[c] & ~row == 0 for c in range(used)):
                    return False
            return True

        def place(v: int, used: int, colored: int) -> bool:
            if used + (forced & ~colored).bit_count() > k:
                return False
            if v == n:
                return all(any(classes[c] & ~rows[x] == 0 for c in range(used)) for x in range(n))
            bit = 1 << v
            for c in range(min(used + 1, k)):
                self.tick()
                if classes[c] & g.adj[v]:
                    continue
                if c < used and (forced & (classes[c] | bit)):
                    continue
                classes[c] |= bit
                labels[v] = c + 1
                new_used = max(used, c + 1)
                if viable(colored | bit, new_used) and place(v + 1, new_used, colored | bit):
                    return True
                classes[c] &= ~bit
            return False

        if not place(0, 0, 0):
            return None
        return Coloring(tuple(labels))


def _solve(
    g: Graph,
    invariant: str,
    closed: bool,
    lb: int,
    ub: int,
    incumbent: Coloring,
    budget: int,
) -> SolveReport:
    started = time.perf_counter()
    search = _Search(g, closed, budget)
    try:
        value, classes = search.optimum(lb, ub, incumbent.classes())
    except BudgetExceeded:
        return SolveReport(invariant, None, None, lb, ub, search.nodes, time.perf_counter() - started)
    fallback = Coloring.from_classes(g.n, [members(c) for c in classes])
    canonical = True
    try:
        witness = search.least_assignment(value)
    except BudgetExceeded:
        witness = None
    if witness is None:
        witness, canonical = fallback, False
    return SolveReport(
        invariant,
        value,
        witness,
        lb,
        ub,
        search.nodes,
        time.perf_counter() - started,
        canonical_witness=canonical,
    )


# ---------------------------------------------------------------------------
# Lower bounds and constructive upper bounds
# ---------------------------------------------------------------------------


def tdc_lower_bound(g: Graph, chi_d: int | None = None) -> int:
    """max(χ_d, γ_t) when χ_d is known, otherwise max(χ, γ_t)."""
    _require_no_isolated(g)
    first = chi_d if chi_d is not None else chromatic_number_exact(g)[0]
    return max(first, gamma_t_exact(g).value)


def independence_number(g: Graph) -> tuple[int, list[int]]:
    """α(G) and the lexicographically first maximum independent set."""
    best = 0
    for cls in _independent_subsets(g, g.full):
        if cls.bit_count() > best.bit_count():
            best = cls
    return best.bit_count(), members(best)


def _alpha0_admissible(g: Graph, s: int) -> bool:
    rest = g.full & ~s
    for v in members(rest):
        if g.adj[v] & rest == 0 and s & ~g.adj[v]:
            return False
    return True


def alpha0(g: Graph) -> tuple[int, list[int]]:
    """Largest independent S whose removal leaves no isolated vertex, or only
    isolated vertices adjacent to all of S."""
    for s in _independent_subsets(g, g.full):
        if _alpha0_admissible(g, s):
            return s.bit_count(), members(s)
    return 0, []


def _singletons_plus(g: Graph, shared: Sequence[Sequence[int]], singles: Sequence[int]) -> Coloring:
    return Coloring.from_classes(g.n, [list(c) for c in shared] + [[v] for v in singles])


def ub_alpha0(g: Graph) -> BoundEntry:
    """n + 1 - α_0: one shared class on S, singletons elsewhere."""
    _require_no_isolated(g)
    size, s = alpha0(g)
    rest = [v for v in range(g.n) if v not in s]
    coloring = _validated(g, _singletons_plus(g, [s], rest), "alpha_0")
    return BoundEntry(g.n + 1 - size, s, coloring)


def ub_regular(g: Graph) -> BoundEntry | None:
    """n + 1 - α for connected k-regular graphs with α = k; None otherwise."""
    if g.n == 0 or g.min_degree != g.max_degree or not is_connected(g):
        return None
    alpha, s = independence_number(g)
    if alpha != g.min_degree:
        return None
    rest = [v for v in range(g.n) if v not in s]
    coloring = _validated(g, _singletons_plus(g, [s], rest), "regular")
    return BoundEntry(g.n + 1 - alpha, s, coloring)


def _chi_off(g: Graph, s: Sequence[int]) -> tuple[int, list[list[int]]]:
    sub, labels = induced_subgraph(g, [v for v in range(g.n) if v not in set(s)])
    value, col = chromatic_number_exact(sub)
    return value, [[labels[v] for v in cls] for cls in col.class_lists()]


def ub_gamma_t_chi(g: Graph) -> BoundEntry:
    """γ_t + min over γ_t-sets S of χ(G[V - S]); singletons on S."""
    _require_no_isolated(g)
    result = gamma_t_exact(g)
    best = None
    for s in result.witnesses:
        value, classes = _chi_off(g, s)
        if best is None or value < best[0]:
            best = (value, s, classes)
    value, s, classes = best
    coloring = _validated(g, _singletons_plus(g, classes, s), "gamma_t + chi")
    return BoundEntry(result.value + value, s, coloring)


def _check_parts(g: Graph, parts: Sequence[Sequence[int]]) -> list[list[int]]:
    flat = [v for p in parts for v in p]
    if sorted(flat) != list(range(g.n)):
        raise InputError("parts do not partition the vertex set")
    cleaned = [sorted(p) for p in parts if p]
    for p in cleaned:
        if not g.is_independent(mask_of(p)):
            raise InputError(f"part {p} is not independent")
    return cleaned


def ub_partite(g: Graph, parts: Sequence[Sequence[int]]) -> PartiteBounds:
    """n - n' + 1 with n' the largest part of size <= δ, and γ_t + p."""
    parts = _check_parts(g, parts)
    delta = g.min_degree
    partite = None
    eligible = [p for p in parts if len(p) <= delta]
    if eligible:
        chosen = max(eligible, key=len)
        rest = [v for v in range(g.n) if v not in chosen]
        coloring = _validated(g, _singletons_plus(g, [chosen], rest), "p-partite")
        partite = BoundEntry(g.n - len(chosen) + 1, chosen, coloring)
    gamma_t_p = None
    if g.n and delta >= 1:
        s = gamma_t_exact(g).witnesses[0]
        off = [[v for v in p if v not in s] for p in parts]
        coloring = _validated(g, _singletons_plus(g, [p for p in off if p], s), "gamma_t + p")
        gamma_t_p = BoundEntry(len(s) + len(parts), [list(p) for p in parts], coloring)
    return PartiteBounds(partite, gamma_t_p)


def universal_vertex_value(g: Graph) -> BoundEntry | None:
    """ℓ + χ(G minus its ℓ universal vertices) when Δ = n - 1; None otherwise."""
    if g.n < 2 or g.max_degree != g.n - 1:
        return None
    universal = g.universal_vertices()
    value, classes = _chi_off(g, universal)
    coloring = _validated(g, _singletons_plus(g, classes, universal), "universal vertex")
    return BoundEntry(len(universal) + value, universal, coloring)


def is_complete_bipartite(g: Graph) -> bool:
    if g.n < 2 or not is_connected(g):
        return False
    side = {0: 0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in side:
                side[u] = 1 - side[v]
                stack.append(u)
            elif side[u] == side[v]:
                return False
    left = sum(1 for s in side.values() if s == 0)
    return g.m == left * (g.n - left)


# ---------------------------------------------------------------------------
# Exact solvers
# ---------------------------------------------------------------------------


def tdc_exact(g: Graph, budget: int = DEFAULT_NODE_BUDGET, singleton_check: bool = False) -> SolveReport:
    """χ_d^t with a validated witness, or a bounds-only report.

    With ``singleton_check`` the report also says whether some optimal
    coloring has no singleton class (which forces χ_d^t = χ_d).
    """
    _require_no_isolated(g)
    lb = tdc_lower_bound(g)
    candidates = [ub_alpha0(g), ub_gamma_t_chi(g)]
    universal = universal_vertex_value(g)
    if universal is not None:
        candidates.append(universal)
    best = min(candidates, key=lambda e: e.value)
    report = _solve(g, CHI_DT, False, lb, best.value, best.coloring, budget)
    if report.exact:
        if not is_total_dominator_coloring(g, report.witness) or report.witness.k != report.value:
            raise ConstructionError("exact search returned an invalid witness")
        if singleton_check:
            report.singleton_free = _has_singleton_free_optimum(g, report, budget)
    return report


def _has_singleton_free_optimum(g: Graph, report: SolveReport, budget: int) -> bool:
    """Whether some optimal total dominator coloring has no singleton class."""
    if all(len(c) > 1 for c in report.witness.class_lists()):
        return True
    if report.value > g.n // 2:
        return False
    search = _Search(g, False, budget)
    try:
        return _singleton_free(search, report.value)
    except BudgetExceeded:
        return False


def _singleton_free(search: _Search, k: int) -> bool:
    g = search.g
    if search.forced_classes():
        return False
    found = [False]

    def rec(chosen: list[int], used: int, dominated: int) -> None:
        search.tick()
        if found[0] or len(chosen) > k:
            return
        free = g.full & ~used
        if dominated == g.full:
            # every leftover class also needs two or more vertices
            found[0] = _pairs_cover(g, free, k - len(chosen))
            return
        x = members(g.full & ~dominated)[0]
        for d in search.subsets(x):
            if d.bit_count() >= 2 and d & used == 0:
                rec(chosen + [d], used | d, dominated | search.dominators(d))

    rec([], 0, 0)
    return found[0]


def _pairs_cover(g: Graph, pool: int, budget_classes: int) -> bool:
    """Can ``pool`` be split into at most ``budget_classes`` independent sets of size >= 2?"""
    if pool == 0:
        return True
    if budget_classes <= 0 or pool.bit_count() < 2:
        return False
    first = pool & -pool
    v = first.bit_length() - 1
    for cls in _independent_subsets(g, pool & ~g.adj[v] & ~first):
        if _pairs_cover(g, pool & ~(cls | first), budget_classes - 1):
            return True
    return False


def dc_exact(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> SolveReport:
    """χ_d with a validated witness, or a bounds-only report."""
    if g.n == 0:
        return SolveReport(CHI_D, 0, Coloring(()), 0, 0, 0, 0.0)
    chi, _ = chromatic_number_exact(g)
    dom = gamma_exact(g).witnesses[0]
    value, classes = _chi_off(g, dom)
    incumbent = Coloring.from_classes(g.n, classes + [[v] for v in dom])
    report = _solve(g, CHI_D, True, chi, len(dom) + value, incumbent, budget)
    if report.exact and not is_dominator_coloring(g, report.witness):
        raise ConstructionError("exact search returned an invalid dominator coloring")
    return report


def naive_tdc(g: Graph) -> tuple[int, Coloring]:
    """Minimum total dominator coloring by enumerating every set partition."""
    _require_no_isolated(g)
    best: list = [g.n + 1, None]
    labels = [0] * g.n

    def walk(v: int, used: int) -> None:
        if used >= best[0]:
            return
        if v == g.n:
            col = Coloring(tuple(labels))
            if is_total_dominator_coloring(g, col):
                best[0], best[1] = used, col
            return
        for c in range(1, used + 2):
            labels[v] = c
            walk(v + 1, max(used, c))

    walk(0, 0)
    return best[0], best[1]


def component_bounds(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> ComponentBounds:
    """max χ_d^t(G_i) + 2ω - 2 <= χ_d^t(G) <= Σ χ_d^t(G_i)."""
    comps = connected_components(g)
    values = []
    flags = []
    for comp in comps:
        sub, _ = induced_subgraph(g, comp)
        if sub.has_isolated_vertex():
            raise DomainError(f"component {comp} is an isolated vertex")
        report = tdc_exact(sub, budget)
        if not report.exact:
            raise BudgetExceeded(report.nodes_explored, report.lower_bound_used, report.upper_bound_used)
        values.append(report.value)
        flags.append(is_complete_bipartite(sub))
    return ComponentBounds(max(values) + 2 * len(comps) - 2, sum(values), values, flags)


def bounds_report(g: Graph, exact: bool = False, budget: int = DEFAULT_NODE_BUDGET) -> BoundsRecord:
    """Every applicable bound with its certificate; optionally the exact value."""
    _require_no_isolated(g)
    chi, chi_col = chromatic_number_exact(g)
    gt = gamma_t_exact(g)
    dc = dc_exact(g, budget)
    first = dc.value if dc.exact else chi
    entries: dict[str, BoundEntry | None] = {
        "obs_lb": BoundEntry(
            max(first, gt.value),
            [{"chi_d" if dc.exact else "chi": first, "gamma_t": gt.value, "gamma_t_set": gt.witnesses[0]}],
        ),
        "trivial_ub": BoundEntry(g.n, [list(range(g.n))], Coloring(tuple(range(1, g.n + 1)))),
        "components_lb": None,
        "components_ub": None,
    }
    exhausted = []
    if len(connected_components(g)) > 1:
        try:
            comps = component_bounds(g, budget)
            entries["components_lb"] = BoundEntry(comps.lb, comps.values)
            entries["components_ub"] = BoundEntry(comps.ub, comps.values)
        except BudgetExceeded:
            exhausted = ["components_lb", "components_ub"]
    entries["alpha0_ub"] = ub_alpha0(g)
    entries["regular_ub"] = ub_regular(g)
    entries["gamma_t_chi_ub"] = ub_gamma_t_chi(g)
    partite = ub_partite(g, chi_col.class_lists())
    entries["partite_ub"] = partite.partite_ub
    entries["gamma_t_p_ub"] = partite.gamma_t_p_ub
    entries["universal_value"] = universal_vertex_value(g)
    record = BoundsRecord(entries, budget_exhausted=exhausted)
    if exact:
        record.exact = tdc_exact(g, budget)
    return record
