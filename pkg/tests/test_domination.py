"""Unit tests for tdc/domination.py."""

import itertools

import pytest

from tdc.corpus import connected_graphs
from tdc.domination import (
    DOMINATION,
    TOTAL_DOMINATION,
    check_product_bound,
    gamma_exact,
    gamma_t_exact,
    is_dominating_set,
    is_total_dominating_set,
)
from tdc.errors import DomainError
from tdc.graph import Family, FamilySpec, build_graph, generate


def _gen(kind, *params):
    return generate(FamilySpec(kind, params))


def _brute_gamma_t(g):
    for k in range(1, g.n + 1):
        if any(is_total_dominating_set(g, s) for s in itertools.combinations(range(g.n), k)):
            return k


class TestPredicates:
    def test_total_domination_needs_neighbour_inside(self):
        p3 = _gen(Family.PATH, 3)
        assert is_dominating_set(p3, [1])
        assert not is_total_dominating_set(p3, [1])
        assert is_total_dominating_set(p3, [0, 1])


class TestGammaT:
    @pytest.mark.parametrize(
        "kind, n, value",
        [
            (Family.PATH, 2, 2),
            (Family.PATH, 6, 4),
            (Family.CYCLE, 6, 4),
            (Family.CYCLE, 7, 4),
            (Family.COMPLETE, 5, 2),
            (Family.STAR, 4, 2),
            (Family.WHEEL, 7, 2),
        ],
    )
    def test_families(self, kind, n, value):
        result = gamma_t_exact(_gen(kind, n))
        assert result.value == value
        assert result.kind == TOTAL_DOMINATION

    def test_witnesses_are_all_minimum_sets_in_order(self):
        result = gamma_t_exact(_gen(Family.CYCLE, 4))
        assert result.witnesses == [[0, 1], [0, 3], [1, 2], [2, 3]]

    def test_isolated_vertex_rejected(self):
        with pytest.raises(DomainError, match="isolated vertex"):
            gamma_t_exact(build_graph(3, [(0, 1)]))

    def test_matches_brute_force(self):
        for n in range(2, 8):
            for kind in (Family.PATH, Family.COMPLEMENT_PATH):
                g = _gen(kind, n)
                if g.has_isolated_vertex():
                    continue
                assert gamma_t_exact(g).value == _brute_gamma_t(g)


class TestGamma:
    def test_cycle(self):
        result = gamma_exact(_gen(Family.CYCLE, 6))
        assert result.value == 2
        assert result.kind == DOMINATION

    def test_isolated_vertices_allowed(self):
        assert gamma_exact(build_graph(3, [(0, 1)])).value == 2

    def test_empty_graph(self):
        assert gamma_exact(build_graph(0, [])).value == 0


class TestSandwich:
    def test_gamma_le_gamma_t_le_twice_gamma(self):
        for g in connected_graphs(6):
            gamma = gamma_exact(g)
            gamma_t = gamma_t_exact(g)
            assert gamma_t.value >= 2
            assert gamma.value <= gamma_t.value <= 2 * gamma.value, g.edges()
            assert all(is_dominating_set(g, w) and len(w) == gamma.value for w in gamma.witnesses)
            assert all(is_total_dominating_set(g, w) and len(w) == gamma_t.value for w in gamma_t.witnesses)


class TestProductBound:
    @pytest.mark.parametrize(
        "g, h",
        [
            ((Family.PATH, 2), (Family.PATH, 3)),
            ((Family.CYCLE, 4), (Family.PATH, 4)),
            ((Family.COMPLETE, 3), (Family.CYCLE, 3)),
        ],
    )
    def test_holds(self, g, h):
        check = check_product_bound(_gen(*g), _gen(*h))
        assert check.holds
        assert check.lhs <= check.rhs

    def test_values_for_k2_by_p3(self):
        check = check_product_bound(_gen(Family.PATH, 2), _gen(Family.PATH, 3))
        # K_2 □ P_3 is the 2x3 grid: γ_t = 2; min(2*3, 2*2) = 4
        assert check.lhs == 2
        assert check.rhs == 4
