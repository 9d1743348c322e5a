from __future__ import annotations

import pytest
from hypothesis import given, settings

from packcrit.errors import DisconnectedGraphError, GraphInputError
from packcrit.graphs import (
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    block_decomposition,
    bridges,
    build_graph,
    center,
    components,
    cut_vertices,
    delete_edge,
    delete_vertex,
    diameter,
    eccentricity,
    is_block_graph,
    is_cactus,
    is_connected,
    is_tree,
    leaves,
    radius,
    universal_vertices,
)
from strategies import graphs

C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
K13 = Graph(4, [(0, 1), (0, 2), (0, 3)])
W6 = Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)] + [(0, i) for i in range(1, 6)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestConstruction:
    def test_c4(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g == C4
        assert g.edge_count == 4

    def test_k1(self):
        g = build_graph(1, [])
        assert g.n == 1 and g.edge_count == 0

    def test_duplicates_collapse(self):
        g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphInputError, match=r"\(0, 5\)"):
            build_graph(3, [(0, 5)])

    def test_self_loop_rejected(self):
        with pytest.raises(GraphInputError, match="self-loop"):
            build_graph(3, [(1, 1)])

    def test_equality_is_labeled(self):
        assert Graph(3, [(0, 1)]) != Graph(3, [(1, 2)])
        assert hash(Graph(3, [(0, 1)])) == hash(Graph(3, [(1, 0)]))


class TestDistances:
    def test_c5_pairs(self):
        dm = all_pairs_distances(C5)
        assert dm[0, 2] == 2
        assert dm[0, 0] == 0

    def test_p4_endpoints(self):
        assert all_pairs_distances(P4)[0, 3] == 3

    def test_unreachable(self):
        g = Graph(4, [(0, 1), (2, 3)])
        dm = all_pairs_distances(g)
        assert dm[0, 2] == UNREACHABLE
        assert not dm.is_reachable(1, 3)

    def test_adjacent_iff_distance_one(self):
        dm = all_pairs_distances(W6)
        for u in range(6):
            for v in range(6):
                assert (dm[u, v] == 1) == W6.has_edge(u, v)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=7))
    def test_symmetric_and_triangle_inequality(self, g):
        dm = all_pairs_distances(g)
        for u in range(g.n):
            for v in range(g.n):
                assert dm[u, v] == dm[v, u]
                for w in range(g.n):
                    if dm[u, w] != UNREACHABLE and dm[w, v] != UNREACHABLE:
                        assert dm[u, v] <= dm[u, w] + dm[w, v]


class TestMetrics:
    def test_c5(self):
        assert radius(C5) == 2 and diameter(C5) == 2

    def test_complete(self):
        for n in (2, 3, 5):
            assert radius(complete(n)) == 1 and diameter(complete(n)) == 1

    def test_p4(self):
        assert radius(P4) == 2 and diameter(P4) == 3

    def test_k1_metrics(self):
        g = Graph(1)
        assert radius(g) == 0 and diameter(g) == 0 and eccentricity(g, 0) == 0

    def test_disconnected_fails(self):
        g = Graph(4, [(0, 1), (2, 3)])
        for fn in (radius, diameter, center):
            with pytest.raises(DisconnectedGraphError):
                fn(g)
        with pytest.raises(DisconnectedGraphError):
            eccentricity(g, 0)

    def test_center_p4(self):
        assert center(P4) == {1, 2}

    def test_center_star(self):
        assert center(K13) == {0}

    def test_center_c5(self):
        assert center(C5) == {0, 1, 2, 3, 4}

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=7, connected_bias=True))
    def test_rad_diam_bounds(self, g):
        if not is_connected(g) or g.n == 0:
            return
        r, d = radius(g), diameter(g)
        assert r <= d <= 2 * r


class TestDeletions:
    def test_c4_minus_edge_is_p4(self):
        g = delete_edge(C4, (0, 1))
        assert sorted(g.degree(v) for v in range(4)) == [1, 1, 2, 2]
        assert is_tree(g)

    def test_k2_minus_edge(self):
        g = delete_edge(Graph(2, [(0, 1)]), (0, 1))
        assert g.edge_count == 0 and len(components(g)) == 2

    def test_w6_minus_hub_is_c5(self):
        g, relabel = delete_vertex(W6, 0)
        assert g.n == 5 and g.edge_count == 5
        assert all(g.degree(v) == 2 for v in range(5))
        assert relabel == {1: 0, 2: 1, 3: 2, 4: 3, 5: 4}

    def test_missing_edge_rejected(self):
        with pytest.raises(GraphInputError):
            delete_edge(C4, (0, 2))

    def test_missing_vertex_rejected(self):
        with pytest.raises(GraphInputError):
            delete_vertex(C4, 9)


class TestComponents:
    def test_counts(self):
        assert len(components(delete_edge(C4, (0, 1)))) == 1
        assert len(components(Graph(2, []))) == 2
        assert components(Graph(0)) == []

    def test_singleton_connected(self):
        assert is_connected(Graph(1))


class TestCutsAndBridges:
    def test_p4(self):
        assert cut_vertices(P4) == {1, 2}
        assert bridges(P4) == {(0, 1), (1, 2), (2, 3)}

    def test_c5(self):
        assert cut_vertices(C5) == frozenset()
        assert bridges(C5) == frozenset()

    def test_friendship(self):
        t2 = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        assert cut_vertices(t2) == {0}
        assert bridges(t2) == frozenset()


class TestBlocks:
    def test_c5_single_block(self):
        bd = block_decomposition(C5)
        assert len(bd.blocks) == 1 and bd.blocks[0].is_cycle

    def test_p4_three_k2(self):
        bd = block_decomposition(P4)
        assert len(bd.blocks) == 3 and all(b.is_k2 for b in bd.blocks)
        assert bd.cut_vertices == {1, 2}

    def test_decorated_c5(self):
        # C5 with one pendant edge and two pendant triangles on vertex 0
        g = Graph(
            10,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5),
             (0, 6), (0, 7), (6, 7), (0, 8), (0, 9), (8, 9)],
        )
        bd = block_decomposition(g)
        kinds = sorted(
            ("cycle5" if b.order == 5 else "triangle" if b.order == 3 else "k2")
            for b in bd.blocks
        )
        assert kinds == ["cycle5", "k2", "triangle", "triangle"]
        assert bd.cut_vertices == {0}

    def test_every_edge_in_exactly_one_block(self, cacti_upto_10):
        for g in cacti_upto_10[:300]:
            bd = block_decomposition(g)
            counted = [e for b in bd.blocks for e in b.edges]
            assert sorted(counted) == g.edges()
            in_two = frozenset(
                v for v in range(g.n) if sum(v in b.vertices for b in bd.blocks) >= 2
            )
            assert in_two == bd.cut_vertices == cut_vertices(g)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            block_decomposition(Graph(2, []))


class TestPredicates:
    def test_cactus_examples(self):
        fig5 = Graph(
            13,
            [(0, 1), (1, 2), (2, 3), (3, 0),  # C4
             (0, 4), (0, 5), (0, 6), (5, 6), (0, 7), (7, 8), (8, 0),  # at x1
             (1, 9), (1, 10), (1, 11), (11, 12), (12, 1)],
        )
        assert is_cactus(fig5)

    def test_k4_not_cactus(self):
        assert not is_cactus(complete(4))

    def test_trees_are_cacti(self):
        assert is_cactus(P4) and is_cactus(K13) and is_cactus(Graph(1))

    def test_block_graph(self):
        assert is_block_graph(complete(4))
        assert is_block_graph(P4)
        assert not is_block_graph(C4)
        assert is_block_graph(C5) is False

    def test_tree(self):
        assert is_tree(P4) and is_tree(Graph(1)) and not is_tree(C4)
        assert not is_tree(Graph(2, []))


class TestVertexRoles:
    def test_universal(self):
        assert universal_vertices(W6) == {0}
        assert universal_vertices(C5) == frozenset()
        assert universal_vertices(complete(3)) == {0, 1, 2}

    def test_leaves(self):
        assert leaves(K13) == {1, 2, 3}
        assert leaves(C5) == frozenset()
        assert leaves(P4) == {0, 3}
