"""Unit tests for tdc/coloring.py — predicates, neighbourhoods and χ."""

import networkx as nx
import pytest

from tdc.coloring import (
    Coloring,
    chromatic_number_exact,
    common_neighborhood,
    dominated_classes,
    greedy_clique,
    greedy_coloring,
    is_dominator_coloring,
    is_proper,
    is_total_dominator_coloring,
    k_coloring,
    private_neighborhood,
    verify_cn_cover,
)
from tdc.corpus import connected_graphs
from tdc.errors import DomainError, InputError
from tdc.graph import Family, FamilySpec, build_graph, generate


def _gen(kind, *params):
    return generate(FamilySpec(kind, params))


def _col(*labels):
    return Coloring(tuple(labels))


# ===========================================================================
# Coloring value type
# ===========================================================================


class TestColoring:
    def test_classes_and_k(self):
        c = _col(1, 2, 1, 3)
        assert c.k == 3
        assert c.class_lists() == [[0, 2], [1], [3]]
        assert c.class_of(3) == 3

    def test_non_contiguous_rejected(self):
        with pytest.raises(InputError, match="contiguous"):
            _col(1, 3)

    def test_from_labels_numbers_by_first_use(self):
        assert Coloring.from_labels(["b", "a", "b", "c"]).assignment == (1, 2, 1, 3)

    def test_from_classes(self):
        assert Coloring.from_classes(4, [[1, 3], [0], [2]]).assignment == (1, 2, 3, 2)

    def test_from_classes_missing_vertex(self):
        with pytest.raises(InputError, match="vertex 2 has no class"):
            Coloring.from_classes(3, [[0], [1]])

    def test_from_classes_duplicate_vertex(self):
        with pytest.raises(InputError, match="two classes"):
            Coloring.from_classes(2, [[0, 1], [1]])


# ===========================================================================
# Predicates
# ===========================================================================


class TestPredicates:
    def test_c6_way_one_coloring_is_tdc(self):
        c6 = _gen(Family.CYCLE, 6)
        c = Coloring.from_labels(["a", "b", "a", "b", "c", "d"])
        assert is_proper(c6, c)
        assert is_total_dominator_coloring(c6, c)

    def test_proper_but_not_tdc(self):
        c6 = _gen(Family.CYCLE, 6)
        assert not is_total_dominator_coloring(c6, _col(1, 2, 1, 2, 1, 2))

    def test_improper_is_not_tdc(self):
        k3 = _gen(Family.COMPLETE, 3)
        assert not is_proper(k3, _col(1, 1, 2))
        assert not is_total_dominator_coloring(k3, _col(1, 1, 2))

    def test_partial_coloring_rejected(self):
        with pytest.raises(InputError, match="covers 2 vertices"):
            is_proper(_gen(Family.PATH, 3), _col(1, 2))

    def test_dominator_coloring_uses_closed_neighbourhoods(self):
        p3 = _gen(Family.PATH, 3)
        # the middle vertex is its own class: every closed neighbourhood contains it
        c = _col(1, 2, 1)
        assert is_dominator_coloring(p3, c)
        assert is_total_dominator_coloring(p3, c)
        assert is_dominator_coloring(_gen(Family.STAR, 3), _col(1, 1, 1, 2))

    def test_dominated_classes(self):
        p3 = _gen(Family.PATH, 3)
        classes = _col(1, 2, 1).classes()
        assert dominated_classes(p3, 1, classes) == [1]
        assert dominated_classes(p3, 0, classes) == [2]
        assert dominated_classes(p3, 0, classes, closed=True) == [2]


class TestNeighbourhoods:
    def test_common_neighbourhood(self):
        c4 = _gen(Family.CYCLE, 4)
        assert common_neighborhood(c4, [0, 2]) == [1, 3]
        assert common_neighborhood(c4, [0]) == [1, 3]

    def test_empty_class_rejected(self):
        with pytest.raises(InputError, match="empty class"):
            common_neighborhood(_gen(Family.CYCLE, 4), [])

    def test_private_neighbourhood(self):
        p4 = _gen(Family.PATH, 4)
        c = _col(1, 2, 3, 1)
        assert private_neighborhood(p4, c, 2) == [0, 2]
        assert private_neighborhood(p4, c, 3) == [1, 3]
        assert private_neighborhood(p4, c, 1) == []

    def test_private_neighbourhood_bad_index(self):
        with pytest.raises(InputError, match="outside 1..3"):
            private_neighborhood(_gen(Family.PATH, 4), _col(1, 2, 3, 1), 4)

    def test_cn_cover_on_tdc(self):
        c6 = _gen(Family.CYCLE, 6)
        assert verify_cn_cover(c6, Coloring.from_labels("ababcd"))

    def test_cn_cover_rejects_non_tdc(self):
        with pytest.raises(DomainError, match="not a total dominator coloring"):
            verify_cn_cover(_gen(Family.CYCLE, 6), _col(1, 2, 1, 2, 1, 2))

    def test_singleton_class_has_the_open_neighbourhood(self):
        for g in connected_graphs(6):
            for v in range(g.n):
                assert common_neighborhood(g, [v]) == g.neighbors(v)

    def test_private_neighbourhoods_are_pairwise_disjoint(self):
        for g in connected_graphs(6):
            for c in (chromatic_number_exact(g)[1], greedy_coloring(g)):
                seen = set()
                for i in range(1, c.k + 1):
                    pn = set(private_neighborhood(g, c, i))
                    assert not pn & seen, (g.edges(), c.assignment)
                    seen |= pn


# ===========================================================================
# Chromatic number
# ===========================================================================


class TestChromaticNumber:
    @pytest.mark.parametrize(
        "kind, n, chi",
        [
            (Family.PATH, 5, 2),
            (Family.CYCLE, 5, 3),
            (Family.CYCLE, 6, 2),
            (Family.COMPLETE, 6, 6),
            (Family.WHEEL, 5, 4),
            (Family.WHEEL, 6, 3),
            (Family.COMPLEMENT_CYCLE, 7, 4),
        ],
    )
    def test_families(self, kind, n, chi):
        value, coloring = chromatic_number_exact(_gen(kind, n))
        assert value == chi
        assert coloring.k == chi
        assert is_proper(_gen(kind, n), coloring)

    def test_empty_graph(self):
        assert chromatic_number_exact(build_graph(0, []))[0] == 0
        assert chromatic_number_exact(build_graph(3, []))[0] == 1

    def test_greedy_clique_is_a_clique(self):
        g = _gen(Family.WHEEL, 6)
        clique = greedy_clique(g)
        assert len(clique) == 3
        assert all(g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1:])

    def test_greedy_coloring_is_proper(self):
        g = _gen(Family.COMPLEMENT_PATH, 8)
        assert is_proper(g, greedy_coloring(g))

    def test_k_coloring_infeasible(self):
        assert k_coloring(_gen(Family.CYCLE, 5), 2) is None

    def test_matches_brute_force_on_small_connected_graphs(self):
        for g in connected_graphs(5):
            value, coloring = chromatic_number_exact(g)
            h = g.to_networkx()
            # χ is the least k with a proper k-coloring; networkx's greedy gives an upper bound
            assert value <= max(nx.greedy_color(h).values()) + 1
            assert value == 1 or k_coloring(g, value - 1) is None
            assert is_proper(g, coloring)
