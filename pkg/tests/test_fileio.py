import pytest

from pistr.fileio import DocumentError, emit_graph, parse_graph
from pistr.graphs import complete_graph, disjoint_union

from conftest import random_graph_no_isolates


TRIANGLE_DOC = """p 3 3
e 1 2 1
e 1 3 2
e 2 3 3
"""


class TestParse:
    def test_labeled_triangle(self):
        g, labeling = parse_graph(TRIANGLE_DOC)
        assert g.n_vertices == 3 and g.n_edges == 3
        assert labeling.label(0, 1) == 1
        assert labeling.label(0, 2) == 2
        assert labeling.label(1, 2) == 3

    def test_unlabeled_document(self):
        g, labeling = parse_graph("p 3 2\ne 1 2\ne 2 3\n")
        assert labeling is None and g.n_edges == 2

    def test_edgeless_header_parses(self):
        g, labeling = parse_graph("p 2 0\n")
        assert g.n_vertices == 2 and g.n_edges == 0 and labeling is None

    def test_comments_and_blanks_ignored(self):
        g, _ = parse_graph("c a comment\n\np 2 1\nc another\ne 1 2\n")
        assert g.n_edges == 1

    @pytest.mark.parametrize("text,fragment", [
        ("e 1 2\np 3 1\n", "line 1"),
        ("p 3\ne 1 2\n", "line 1"),
        ("p 3 1\ne 1 4\n", "line 2"),
        ("p 3 1\ne 1 1\n", "loop"),
        ("p 3 2\ne 1 2\ne 2 1\n", "duplicate"),
        ("p 3 2\ne 1 2\n", "declares 2"),
        ("p 3 2\ne 1 2 1\ne 2 3\n", "mixed"),
        ("p 3 1\nq 1 2\n", "unknown record"),
        ("p 3 1\ne 1 2 0\n", "label"),
    ])
    def test_malformed_documents(self, text, fragment):
        with pytest.raises(DocumentError) as err:
            parse_graph(text)
        assert fragment in str(err.value)

    def test_missing_header(self):
        with pytest.raises(DocumentError):
            parse_graph("c nothing here\n")


class TestRoundtrip:
    def test_k5_k5_document(self):
        g = disjoint_union(complete_graph(5), complete_graph(5))
        doc = emit_graph(g)
        g2, labeling = parse_graph(doc)
        assert g2 == g and labeling is None
        assert emit_graph(g2) == doc

    def test_labeled_roundtrip(self, rng):
        from pistr.graphs import EdgeLabeling
        from conftest import random_labeling
        for _ in range(10):
            g = random_graph_no_isolates(rng)
            labeling = EdgeLabeling.make(g, random_labeling(rng, g, s=5))
            doc = emit_graph(g, labeling)
            g2, labeling2 = parse_graph(doc)
            assert g2 == g and labeling2.labels == labeling.labels
            assert emit_graph(g2, labeling2) == doc

    def test_whitespace_tolerance(self):
        g, labeling = parse_graph("  p 3 1  \n   e   1   2   3  \n")
        assert labeling.label(0, 1) == 3
