"""Shared generators for randomized tests; everything is seeded."""

from __future__ import annotations

import itertools
import random

import pytest

from pistr.graphs import (Graph, add_cross_edge, complete_graph,
                          disjoint_union, edge_key, has_isolated_vertex_or_edge)


def random_graph_no_isolates(rng: random.Random, n_min=4, n_max=7,
                             max_edges=None) -> Graph:
    """Random graph with no isolated vertices and no isolated edges."""
    while True:
        n = rng.randint(n_min, n_max)
        pairs = list(itertools.combinations(range(n), 2))
        p = rng.uniform(0.35, 0.8)
        edges = [e for e in pairs if rng.random() < p]
        if max_edges is not None and len(edges) > max_edges:
            rng.shuffle(edges)
            edges = edges[:max_edges]
        g = Graph.from_edges(n, edges)
        if g.n_edges and not has_isolated_vertex_or_edge(g):
            return g


def random_labeling(rng: random.Random, g: Graph, s: int = 3) -> dict:
    return {e: rng.randint(1, s) for e in g.edges}


def planted_cover_graph(rng: random.Random, sizes, extra_cross=0) -> Graph:
    """Disjoint cliques joined by a random spanning tree of cross edges plus
    extra random cross edges."""
    g = complete_graph(sizes[0])
    offs = [0]
    for s in sizes[1:]:
        offs.append(g.n_vertices)
        g = disjoint_union(g, complete_graph(s))
    middle = rng.randrange(len(sizes)) if len(sizes) == 3 else 0
    others = [i for i in range(len(sizes)) if i != middle]
    for o in others:
        u = offs[middle] + rng.randrange(sizes[middle])
        v = offs[o] + rng.randrange(sizes[o])
        g = add_cross_edge(g, u, v)
    pairs = [(u, v)
             for ai in range(len(sizes)) for bi in range(ai + 1, len(sizes))
             for u in range(offs[ai], offs[ai] + sizes[ai])
             for v in range(offs[bi], offs[bi] + sizes[bi])]
    rng.shuffle(pairs)
    added = 0
    for u, v in pairs:
        if added >= extra_cross:
            break
        if not g.has_edge(u, v):
            g = add_cross_edge(g, u, v)
            added += 1
    return g


def permute_graph(rng: random.Random, g: Graph, labels=None):
    """Relabel vertices by a random permutation; returns (graph, perm[, labels])."""
    perm = list(range(g.n_vertices))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    h = Graph.from_edges(g.n_vertices, edges)
    if labels is None:
        return h, perm
    new_labels = {edge_key(perm[u], perm[v]): w for (u, v), w in labels.items()}
    return h, perm, new_labels


@pytest.fixture
def rng():
    return random.Random(20240811)
