import itertools

import numpy as np
import pytest

from pistr.graphs import (EdgeLabeling, Graph, add_cross_edge,
                          clique_cover, complete_graph, connected_components,
                          disjoint_union, has_isolated_vertex_or_edge,
                          is_connected, labeled_graph_to_matrix,
                          matrix_to_labeled_graph)
from pistr.matrices import fixed_matrix, m_matrix

from conftest import random_graph_no_isolates, random_labeling


def brute_min_cover(g: Graph) -> int:
    """Minimum clique-partition size by enumerating all set partitions."""
    def is_clique(part):
        return all(g.has_edge(u, v) for u, v in itertools.combinations(part, 2))

    best = [g.n_vertices]

    def assign(v, parts):
        if len(parts) >= best[0]:
            return
        if v == g.n_vertices:
            best[0] = len(parts)
            return
        for part in parts:
            if all(g.has_edge(v, u) for u in part):
                part.append(v)
                assign(v + 1, parts)
                part.pop()
        parts.append([v])
        assign(v + 1, parts)
        parts.pop()

    assign(0, [])
    return best[0]


class TestBuilders:
    def test_complete_graph_sizes(self):
        assert complete_graph(1).n_edges == 0
        assert complete_graph(4).n_edges == 6
        assert complete_graph(7).n_edges == 21

    def test_complete_graph_rejects_zero(self):
        with pytest.raises(ValueError):
            complete_graph(0)

    def test_disjoint_union_counts(self):
        g = disjoint_union(complete_graph(4), complete_graph(4))
        assert (g.n_vertices, g.n_edges) == (8, 12)
        g = disjoint_union(complete_graph(1), complete_graph(4))
        assert (g.n_vertices, g.n_edges) == (5, 6)
        g = disjoint_union(disjoint_union(complete_graph(5), complete_graph(5)),
                           complete_graph(4))
        assert (g.n_vertices, g.n_edges) == (14, 26)

    def test_disjoint_union_offsets_second_block(self):
        g = disjoint_union(complete_graph(2), complete_graph(3))
        assert (0, 1) in g.edges and (2, 3) in g.edges and (2, 4) in g.edges

    def test_add_cross_edge(self):
        g = add_cross_edge(disjoint_union(complete_graph(3), complete_graph(3)), 0, 3)
        assert g.n_edges == 7
        g = add_cross_edge(disjoint_union(complete_graph(2), complete_graph(4)), 0, 2)
        assert g.n_edges == 8

    def test_add_cross_edge_rejects_existing_and_loops(self):
        g = complete_graph(3)
        with pytest.raises(ValueError):
            add_cross_edge(g, 0, 1)
        with pytest.raises(ValueError):
            add_cross_edge(g, 2, 2)

    def test_graph_invariants(self):
        with pytest.raises(ValueError):
            Graph(3, frozenset({(0, 3)}))
        with pytest.raises(ValueError):
            Graph(3, frozenset({(1, 1)}))


class TestMatrixConversion:
    def test_t_matrix_to_triangle(self):
        g, labeling = matrix_to_labeled_graph(fixed_matrix("T"))
        assert g.n_vertices == 3 and g.n_edges == 3
        assert labeling.label(0, 1) == 1
        assert labeling.label(0, 2) == 2
        assert labeling.label(1, 2) == 3

    def test_zero_matrix_gives_edgeless_graph(self):
        g, labeling = matrix_to_labeled_graph(np.zeros((4, 4), dtype=int))
        assert g.n_edges == 0 and not labeling.labels

    def test_roundtrip_m7(self):
        m = m_matrix(7, 1, 2, 3)
        _, labeling = matrix_to_labeled_graph(m)
        assert np.array_equal(labeled_graph_to_matrix(labeling), m)

    def test_roundtrip_from_labeling(self, rng):
        for _ in range(20):
            g = random_graph_no_isolates(rng)
            labeling = EdgeLabeling.make(g, random_labeling(rng, g))
            g2, labeling2 = matrix_to_labeled_graph(labeled_graph_to_matrix(labeling))
            assert g2 == g and labeling2.labels == labeling.labels

    def test_invalid_matrices_rejected(self):
        with pytest.raises(ValueError):
            matrix_to_labeled_graph(np.array([[0, 1], [2, 0]]))
        with pytest.raises(ValueError):
            matrix_to_labeled_graph(np.array([[0, -1], [-1, 0]]))
        with pytest.raises(ValueError):
            matrix_to_labeled_graph(np.array([[1, 1], [1, 0]]))


class TestConnectivity:
    def test_is_connected(self):
        g = disjoint_union(complete_graph(4), complete_graph(4))
        assert not is_connected(g)
        assert is_connected(add_cross_edge(g, 0, 4))

    def test_isolated_vertex_or_edge(self):
        assert has_isolated_vertex_or_edge(complete_graph(2))
        assert has_isolated_vertex_or_edge(disjoint_union(complete_graph(1),
                                                          complete_graph(4)))
        assert not has_isolated_vertex_or_edge(complete_graph(3))

    def test_components(self):
        g = disjoint_union(complete_graph(3), complete_graph(2))
        assert connected_components(g) == [[0, 1, 2], [3, 4]]


class TestCliqueCover:
    def test_complete_graph_one_part(self):
        cover = clique_cover(complete_graph(6), 3)
        assert cover.sizes == (6,)

    def test_edgeless_graph_needs_n_parts(self):
        g = Graph(5, frozenset())
        assert clique_cover(g, 4) is None
        cover = clique_cover(g, 5)
        assert cover.n_parts == 5

    def test_c5_needs_three_parts(self):
        c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        assert brute_min_cover(c5) == 3  # independent oracle
        cover = clique_cover(c5, 3)
        assert cover.n_parts == 3

    def test_parts_are_cliques_and_partition(self, rng):
        for _ in range(20):
            g = random_graph_no_isolates(rng, n_min=5, n_max=8)
            cover = clique_cover(g, g.n_vertices)
            seen = set()
            for part in cover.parts:
                for u, v in itertools.combinations(part, 2):
                    assert g.has_edge(u, v)
                seen.update(part)
            assert seen == set(range(g.n_vertices))
            assert cover.sizes == tuple(sorted(cover.sizes))

    def test_matches_brute_force_minimum(self, rng):
        for _ in range(25):
            g = random_graph_no_isolates(rng, n_min=4, n_max=8)
            cover = clique_cover(g, g.n_vertices)
            assert cover.n_parts == brute_min_cover(g)

    def test_all_graphs_on_four_vertices(self):
        pairs = list(itertools.combinations(range(4), 2))
        for bits in range(64):
            edges = [e for i, e in enumerate(pairs) if bits >> i & 1]
            g = Graph.from_edges(4, edges)
            cover = clique_cover(g, 4)
            assert cover.n_parts == brute_min_cover(g)

    def test_cross_edge_inventory(self):
        g = add_cross_edge(disjoint_union(complete_graph(3), complete_graph(4)), 1, 5)
        cover = clique_cover(g, 2)
        assert cover.sizes == (3, 4)
        assert cover.cross_edges == ((0, 1, 1, 5),)

    def test_k_max_respected(self):
        c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        assert clique_cover(c5, 2) is None
