import numpy as np
import pytest

from pistr.graphs import (EdgeLabeling, Graph, complete_graph,
                          labeled_graph_to_matrix, matrix_to_labeled_graph)
from pistr.matrices import direct_sum, fixed_matrix, l_matrix, m_matrix, named_family
from pistr.verifier import (ProductDegree, check_matrix, extend_with_ones,
                            is_product_irregular, product_degree)

from conftest import permute_graph, random_graph_no_isolates, random_labeling


class TestProductDegree:
    def test_label_one_is_empty(self):
        assert ProductDegree.from_labels([1, 1, 1]).factors == ()
        assert ProductDegree.from_labels([1]).value == 1

    def test_pair_collapse(self):
        d = ProductDegree.from_labels([2, 3, 2])
        assert d.pair == (2, 1)
        assert d.value == 12

    def test_pair_rejects_other_primes(self):
        with pytest.raises(ValueError):
            ProductDegree.from_labels([5]).pair

    def test_exact_at_scale(self):
        d = ProductDegree.from_labels([3] * 59)
        assert d.pair == (0, 59)
        assert d.value == 3**59

    def test_times(self):
        assert ProductDegree.from_value(4).times(3).value == 12


class TestProductDegreeOfVertices:
    def test_triangle_degrees(self):
        _, labeling = matrix_to_labeled_graph(fixed_matrix("T"))
        assert product_degree(labeling, 0).pair == (1, 0)
        assert product_degree(labeling, 1).pair == (0, 1)
        assert product_degree(labeling, 2).pair == (1, 1)

    @pytest.mark.parametrize("n", [4, 5, 9, 17])
    def test_l_matrix_row_three_degree(self, n):
        _, labeling = matrix_to_labeled_graph(l_matrix(n))
        assert product_degree(labeling, 2).pair == (n - 1, 1)

    def test_all_ones(self):
        g = complete_graph(3)
        labeling = EdgeLabeling.make(g, {e: 1 for e in g.edges})
        assert product_degree(labeling, 0).value == 1

    def test_isolated_vertex_rejected(self):
        g = Graph.from_edges(3, [(0, 1)])
        labeling = EdgeLabeling.make(g, {(0, 1): 2})
        with pytest.raises(ValueError):
            product_degree(labeling, 2)
        with pytest.raises(ValueError):
            is_product_irregular(labeling)


class TestIrregularity:
    def test_t_is_irregular(self):
        _, labeling = matrix_to_labeled_graph(fixed_matrix("T"))
        report = is_product_irregular(labeling)
        assert report.ok and report.witness is None

    def test_a4_b4_fails(self):
        report = check_matrix(direct_sum([named_family(4, "A"), named_family(4, "B")]))
        assert not report.ok
        u, v = report.witness
        assert report.degrees[u] == report.degrees[v]

    def test_k2_always_fails(self):
        g = complete_graph(2)
        labeling = EdgeLabeling.make(g, {(0, 1): 3})
        report = is_product_irregular(labeling)
        assert not report.ok and report.witness == (0, 1)

    def test_witness_is_lexicographically_smallest(self):
        # path 0-1-2-3 with equal end labels: degrees [a, aw, aw, a];
        # colliding pairs are (0,3) and (1,2), and (0,3) is smaller
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        labeling = EdgeLabeling.make(g, {(0, 1): 2, (1, 2): 3, (2, 3): 2})
        report = is_product_irregular(labeling)
        assert report.witness == (0, 3)


class TestCheckMatrix:
    def test_m7_ok(self):
        assert check_matrix(m_matrix(7, 1, 2, 3)).ok

    def test_t5_pair_ok(self):
        assert check_matrix(direct_sum([fixed_matrix("T5"),
                                        fixed_matrix("T5_TILDE")])).ok

    def test_b5_c5_fails(self):
        assert not check_matrix(direct_sum([named_family(5, "B"),
                                            named_family(5, "C")])).ok

    def test_zero_row_rejected(self):
        m = np.zeros((3, 3), dtype=int)
        m[0, 1] = m[1, 0] = 2
        with pytest.raises(ValueError):
            check_matrix(m)

    def test_matches_graph_verdict(self, rng):
        for _ in range(60):
            g = random_graph_no_isolates(rng, n_min=4, n_max=8)
            labeling = EdgeLabeling.make(g, random_labeling(rng, g, s=4))
            m = labeled_graph_to_matrix(labeling)
            assert check_matrix(m).ok == is_product_irregular(labeling).ok

    def test_general_label_path(self):
        # entries above 3 take the factored slow path; verdict must agree
        # with the labeled-graph route
        m = m_matrix(8, 5, 7, 11)
        r1 = check_matrix(m)
        _, labeling = matrix_to_labeled_graph(m)
        r2 = is_product_irregular(labeling)
        assert r1.ok == r2.ok
        assert [d.factors for d in r1.degrees] == [d.factors for d in r2.degrees]


class TestInvariances:
    def test_one_labels_are_transparent(self, rng):
        for _ in range(30):
            g = random_graph_no_isolates(rng, n_min=4, n_max=7)
            labeling = EdgeLabeling.make(g, random_labeling(rng, g))
            missing = [(u, v) for u in range(g.n_vertices)
                       for v in range(u + 1, g.n_vertices) if not g.has_edge(u, v)]
            if not missing:
                continue
            extended = extend_with_ones(labeling, missing[:2])
            before = is_product_irregular(labeling)
            after = is_product_irregular(extended)
            assert before.ok == after.ok
            assert [d.factors for d in before.degrees] == \
                [d.factors for d in after.degrees]

    def test_permutation_invariance(self, rng):
        for _ in range(30):
            g = random_graph_no_isolates(rng, n_min=4, n_max=7)
            labels = random_labeling(rng, g)
            labeling = EdgeLabeling.make(g, labels)
            h, perm, new_labels = permute_graph(rng, g, labels)
            relabeled = EdgeLabeling.make(h, new_labels)
            assert is_product_irregular(labeling).ok == \
                is_product_irregular(relabeled).ok

    def test_direct_sum_degrees_concatenate(self):
        a, b = named_family(5, "A"), named_family(7, "B")
        ra, rb = check_matrix(a), check_matrix(b)
        rsum = check_matrix(direct_sum([a, b]))
        assert list(rsum.degrees) == list(ra.degrees) + list(rb.degrees)
