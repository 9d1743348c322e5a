from __future__ import annotations

import pytest

from packcrit.criticality import has_leaf_violation, is_edge_critical, is_vertex_critical
from packcrit.enumeration import representatives
from packcrit.errors import PreconditionError
from packcrit.graphs import Graph, delete_edge, is_tree
from packcrit.packing import chi_rho


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def wheel6():
    return Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)] + [(0, i) for i in range(1, 6)])


class TestEdgeCritical:
    def test_c5(self):
        rep = is_edge_critical(cycle(5))
        assert rep.critical and rep.base_chi_rho == 4 and rep.witness is None
        assert all(v == 3 for _, v in rep.table)

    def test_w6_witness_is_hub_edge(self):
        rep = is_edge_critical(wheel6())
        assert not rep.critical and rep.base_chi_rho == 5
        assert rep.witness is not None and 0 in rep.witness  # 0 is the hub
        assert dict(rep.table)[rep.witness] == 5
        assert chi_rho(delete_edge(wheel6(), rep.witness)).value == 5

    def test_c4_not_critical(self):
        assert not is_edge_critical(cycle(4)).critical

    def test_complete_critical(self):
        for n in (2, 3, 5):
            assert is_edge_critical(complete(n)).critical

    def test_table_covers_all_edges(self):
        rep = is_edge_critical(cycle(5))
        assert len(rep.table) == 5

    def test_isolated_vertex_rejected(self):
        with pytest.raises(PreconditionError):
            is_edge_critical(Graph(3, [(0, 1)]))
        with pytest.raises(PreconditionError):
            is_edge_critical(Graph(1))


class TestVertexCritical:
    def test_c5(self):
        assert is_vertex_critical(cycle(5)).critical

    def test_p4(self):
        assert is_vertex_critical(path(4)).critical

    def test_c4(self):
        # deleting any vertex of C4 leaves P3 whose value drops from 3 to 2
        rep = is_vertex_critical(cycle(4))
        assert rep.critical
        assert all(v == 2 for _, v in rep.table)

    def test_single_vertex_rejected(self):
        with pytest.raises(PreconditionError):
            is_vertex_critical(Graph(1))

    def test_table_covers_all_vertices(self):
        assert len(is_vertex_critical(cycle(5)).table) == 5


class TestLeafFilter:
    def test_star_has_leaf(self):
        g = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert has_leaf_violation(g) in {1, 2, 3}

    def test_w6_none(self):
        assert has_leaf_violation(wheel6()) is None

    def test_k3_none(self):
        assert has_leaf_violation(complete(3)) is None

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            has_leaf_violation(cycle(5))  # radius 2
        with pytest.raises(PreconditionError):
            has_leaf_violation(Graph(2, [(0, 1)]))  # too small


class TestTreeEquivalence:
    def test_edge_equals_vertex_criticality_on_trees(self):
        for n in range(2, 11):
            for g in representatives("tree", n):
                assert is_tree(g)
                assert is_edge_critical(g).critical == is_vertex_critical(g).critical
