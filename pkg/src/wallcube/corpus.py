"""Seeded random wall spaces and a few named graphs for testing."""

from __future__ import annotations

import random

import networkx as nx

from .wallspace import WallSpace, validate


def random_wallspace(rng: random.Random, max_points: int = 7, max_walls: int = 9) -> WallSpace:
    """Draw ``w - 1`` nonempty proper subsets uniformly; retry until separated.

    ``max_walls`` counts the trivial wall.
    """
    while True:
        n = rng.randint(1, max_points)
        k = rng.randint(0, max_walls - 1)
        full = (1 << n) - 1
        if n == 1:
            k = 0
        sides = [rng.randint(1, full - 1) for _ in range(k)]
        report = validate(n, [(s, full ^ s) for s in sides])
        if report.ok:
            assert report.space is not None
            return report.space


def random_corpus(seed: int, count: int = 200, max_points: int = 7, max_walls: int = 9) -> list[WallSpace]:
    rng = random.Random(seed)
    return [random_wallspace(rng, max_points, max_walls) for _ in range(count)]


def cube_graph(k: int) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(1 << k))
    g.add_edges_from((v, v ^ (1 << i)) for v in range(1 << k) for i in range(k) if v < v ^ (1 << i))
    return g


def cycle_graph(n: int) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((i, (i + 1) % n) for i in range(n))
    return g


def path_graph(n: int) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((i, i + 1) for i in range(n - 1))
    return g


def hexagonal_patch() -> nx.Graph:
    """A 2x2 patch of the hexagonal tiling: four hexagons, 16 vertices."""
    g = nx.hexagonal_lattice_graph(2, 2, with_positions=False)
    return nx.convert_node_labels_to_integers(g, ordering="sorted")
