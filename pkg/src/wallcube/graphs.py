"""Raw-graph utilities used by the verifiers.

Nothing here looks at wall labels or orientations: graphs are plain
``networkx.Graph`` objects and vertices are taken in node-insertion order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import DisconnectedGraph, GraphTooLarge, NonSimplicialGraph

ISO_MAX_VERTICES = 64


@dataclass(frozen=True)
class IndexedGraph:
    nodes: tuple
    adj: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.nodes)


def indexed(g: nx.Graph) -> IndexedGraph:
    if g.is_directed() or g.is_multigraph():
        raise NonSimplicialGraph("expected a simple undirected graph")
    nodes = tuple(g.nodes)
    pos = {v: k for k, v in enumerate(nodes)}
    adj: list[list[int]] = [[] for _ in nodes]
    for a, b in g.edges:
        if a == b:
            raise NonSimplicialGraph(f"loop at vertex {a!r}")
        adj[pos[a]].append(pos[b])
        adj[pos[b]].append(pos[a])
    return IndexedGraph(nodes, tuple(tuple(sorted(x)) for x in adj))


def bfs_distances(adj: tuple[tuple[int, ...], ...], src: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def all_pairs_distances(ig: IndexedGraph) -> np.ndarray:
    if ig.order == 0:
        return np.zeros((0, 0), dtype=np.int64)
    d = np.array([bfs_distances(ig.adj, s) for s in range(ig.order)], dtype=np.int64)
    if (d < 0).any():
        raise DisconnectedGraph("graph is not connected")
    return d


def interval_matrix(dist: np.ndarray) -> np.ndarray:
    """Boolean array I with I[u, v, x] true iff x lies on a shortest u-v path."""
    return dist[:, None, :] + dist[None, :, :] == dist[:, :, None]


def interval_words(dist: np.ndarray) -> np.ndarray:
    """Intervals packed into uint64 words along the last axis."""
    inter = interval_matrix(dist)
    n = dist.shape[0]
    nwords = max(1, -(-n // 64))
    padded = np.zeros(inter.shape[:2] + (nwords * 64,), dtype=bool)
    padded[:, :, :n] = inter
    packed = np.packbits(padded, axis=-1, bitorder="little")
    return packed.view(np.uint64)


def words_to_set(words: np.ndarray) -> set[int]:
    out = set()
    for k, w in enumerate(words.tolist()):
        while w:
            low = w & -w
            out.add(64 * k + low.bit_length() - 1)
            w ^= low
    return out


def is_convex(subset: int, intervals: list[list[int]]) -> bool:
    """``intervals[u][v]`` is the u-v interval as an int bitmask."""
    m = subset
    elems = []
    while m:
        low = m & -m
        elems.append(low.bit_length() - 1)
        m ^= low
    for a in range(len(elems)):
        row = intervals[elems[a]]
        for b in range(a + 1, len(elems)):
            if row[elems[b]] & ~subset:
                return False
    return True


def interval_masks(dist: np.ndarray) -> list[list[int]]:
    inter = interval_matrix(dist)
    n = dist.shape[0]
    weights = [1 << x for x in range(n)]
    return [[sum(w for w, on in zip(weights, inter[u, v]) if on) for v in range(n)] for u in range(n)]


def _refine(adj, colors: list[int]) -> list[int]:
    """Color refinement to a stable partition, with canonical color ids."""
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        table = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == len(set(colors)):
            return new
        colors = new


def graphs_isomorphic(g1: nx.Graph, g2: nx.Graph) -> tuple[bool, dict | None]:
    """Exact isomorphism test with a lexicographically least witness.

    Vertices of ``g1`` are assigned in node order, each to the smallest
    admissible vertex of ``g2``; the first complete assignment is therefore the
    least witness.  Candidates are pruned by joint color refinement and by
    distance consistency with every vertex already placed.
    """
    a, b = indexed(g1), indexed(g2)
    for ig in (a, b):
        if ig.order > ISO_MAX_VERTICES:
            raise GraphTooLarge(f"{ig.order} vertices; isomorphism search is capped at {ISO_MAX_VERTICES}")
    n = a.order
    if n != b.order or sum(map(len, a.adj)) != sum(map(len, b.adj)):
        return False, None
    if n == 0:
        return True, {}

    # Refine both graphs as one disjoint union so color ids are comparable.
    union = a.adj + tuple(tuple(v + n for v in nb) for nb in b.adj)
    colors = _refine(union, [0] * (2 * n))
    ca, cb = colors[:n], colors[n:]
    if sorted(ca) != sorted(cb):
        return False, None

    da = _dist_or_inf(a)
    db = _dist_or_inf(b)
    cand = [[y for y in range(n) if cb[y] == ca[x]] for x in range(n)]
    phi = [-1] * n
    used = [False] * n

    def place(x: int) -> bool:
        if x == n:
            return True
        for y in cand[x]:
            if used[y]:
                continue
            if any(da[x][z] != db[y][phi[z]] for z in range(x)):
                continue
            phi[x] = y
            used[y] = True
            if place(x + 1):
                return True
            used[y] = False
        phi[x] = -1
        return False

    if not place(0):
        return False, None
    return True, {a.nodes[x]: b.nodes[phi[x]] for x in range(n)}


def _dist_or_inf(ig: IndexedGraph) -> list[list[int]]:
    out = []
    for s in range(ig.order):
        d = bfs_distances(ig.adj, s)
        out.append([x if x >= 0 else -1 for x in d])
    return out
