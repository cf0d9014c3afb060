"""Seeded generators for fuzzed graphs and matrices."""

from __future__ import annotations

import random

from geomgrid.graph import SignedGraph
from geomgrid.matrix import GridMatrix

SEED = 20240611


def random_graph(rng: random.Random, max_vertices: int = 10, p: float | None = None, signed: bool = True) -> SignedGraph:
    n = rng.randint(1, max_vertices)
    p = rng.uniform(0.15, 0.6) if p is None else p
    vertices = [f"x{k}" for k in range(n)]
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                edges.append((vertices[a], vertices[b], rng.choice((1, -1)) if signed else 1))
    return SignedGraph.from_edges(edges, vertices=vertices)


def random_connected_graph(rng: random.Random, max_vertices: int = 10, min_vertices: int = 2) -> SignedGraph:
    """Random spanning tree plus random extra edges."""
    n = rng.randint(min_vertices, max_vertices)
    vertices = [f"x{k}" for k in range(n)]
    edges = {}
    for k in range(1, n):
        edges[(vertices[rng.randrange(k)], vertices[k])] = rng.choice((1, -1))
    for _ in range(rng.randint(0, n)):
        a, b = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if a != b and (vertices[a], vertices[b]) not in edges and (vertices[b], vertices[a]) not in edges:
            edges[(vertices[a], vertices[b])] = rng.choice((1, -1))
    return SignedGraph.from_edges([(a, b, s) for (a, b), s in edges.items()], vertices=vertices)


def random_connected_cyclic_graph(rng: random.Random, max_vertices: int = 10) -> SignedGraph:
    while True:
        g = random_connected_graph(rng, max_vertices, min_vertices=3)
        if g.cycle_rank() > 0:
            return g


def random_forest(rng: random.Random, max_vertices: int = 10) -> SignedGraph:
    n = rng.randint(1, max_vertices)
    vertices = [f"x{k}" for k in range(n)]
    edges = [(vertices[rng.randrange(k)], vertices[k], 1) for k in range(1, n) if rng.random() < 0.8]
    return SignedGraph.from_edges(edges, vertices=vertices)


def random_matrix(rng: random.Random, max_t: int = 3, max_u: int = 3, density: float | None = None) -> GridMatrix:
    t, u = rng.randint(1, max_t), rng.randint(1, max_u)
    density = rng.uniform(0.3, 0.9) if density is None else density
    while True:
        cols = [[rng.choice((1, -1)) if rng.random() < density else 0 for _ in range(u)] for _ in range(t)]
        if any(any(c) for c in cols):
            return GridMatrix(tuple(tuple(c) for c in cols))


def random_connected_matrix(rng: random.Random, max_t: int = 4, max_u: int = 4) -> GridMatrix:
    from geomgrid.graph import row_column_graph

    while True:
        m = random_matrix(rng, max_t, max_u)
        g = row_column_graph(m)
        if g.is_connected():
            return m


def rng(offset: int = 0) -> random.Random:
    return random.Random(SEED + offset)
