"""The 1-cubulation of a finite space with walls, as an explicit median graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product

import networkx as nx

from .errors import InvalidSpace, InvalidVertex, TooManyWalls
from .ultrafilter import (
    Orientation,
    check_wall_side,
    coherent,
    majority,
    minimal_bits,
    principal_bits,
    to_bitstring,
)
from .wallspace import WallSpace, validate

ORACLE_MAX_WALLS = 24


@dataclass(frozen=True)
class MedianGraph:
    space: WallSpace
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    sigma: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[int, int]:
        return {bits: k for k, bits in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def principal_names(self) -> dict[int, str]:
        return {v: self.space.names[x] for x, v in enumerate(self.sigma)}

    def orientation(self, v: int) -> Orientation:
        return Orientation(self.space, self.vertices[self.check_vertex(v)])

    def bitstring(self, v: int) -> str:
        return to_bitstring(self.vertices[v], self.space.w)

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < len(self.vertices):
            raise InvalidVertex(f"vertex {v!r} out of range 0..{len(self.vertices) - 1}")
        return v

    def vertex_of(self, o: Orientation | int) -> int:
        bits = o.bits if isinstance(o, Orientation) else o
        try:
            return self.index[bits]
        except KeyError:
            raise InvalidVertex(f"{to_bitstring(bits, self.space.w)} is not a vertex") from None

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from((u, v, {"wall": i}) for u, v, i in self.edges)
        return g


def cubulate(space: WallSpace) -> MedianGraph:
    """BFS from every principal ultrafilter along minimal-wall flips."""
    if not isinstance(space, WallSpace) or not validate(
        space.names, [(w.side0, w.side1) for w in space.walls]
    ).ok:
        raise InvalidSpace("cubulate needs a validated WallSpace")
    seeds = [principal_bits(space, x) for x in range(space.n)]
    index: dict[int, int] = {}
    order: list[int] = []
    for b in seeds:
        if b not in index:
            index[b] = len(order)
            order.append(b)
    edges: set[tuple[int, int, int]] = set()
    queue = deque(order)
    while queue:
        bits = queue.popleft()
        u = index[bits]
        m = minimal_bits(space, bits)
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            nb = bits ^ (1 << i)
            if nb not in index:
                index[nb] = len(order)
                order.append(nb)
                queue.append(nb)
            v = index[nb]
            edges.add((min(u, v), max(u, v), i))
    return MedianGraph(space, tuple(order), tuple(sorted(edges)), tuple(index[b] for b in seeds))


def enumerate_oracle(space: WallSpace) -> set[str]:
    """All coherent orientations by brute force, as bitstrings."""
    if space.w > ORACLE_MAX_WALLS:
        raise TooManyWalls(f"{space.w} walls; exhaustive enumeration is capped at {ORACLE_MAX_WALLS}")
    out = set()
    for tail in product((0, 1), repeat=space.w - 1):
        bits = sum(b << (i + 1) for i, b in enumerate(tail))
        if coherent(space, bits):
            out.add(to_bitstring(bits, space.w))
    return out


def graph_distance(g: MedianGraph, u: int, v: int) -> int:
    return (g.vertices[g.check_vertex(u)] ^ g.vertices[g.check_vertex(v)]).bit_count()


def geodesic_path(g: MedianGraph, u: int, v: int) -> list[int]:
    """Flip the walls separating u from v, each time the lowest-index one
    whose current side is minimal among the sides still to be flipped."""
    space = g.space
    cur = g.vertices[g.check_vertex(u)]
    target = g.vertices[g.check_vertex(v)]
    path = [u]
    remaining = cur ^ target
    while remaining:
        pending = [i for i in range(space.w) if remaining >> i & 1]
        sides = {i: space.side(i, cur >> i & 1) for i in pending}
        for i in pending:
            a = sides[i]
            if not any(j != i and sides[j] != a and sides[j] & ~a == 0 for j in pending):
                break
        cur ^= 1 << i
        remaining &= ~(1 << i)
        path.append(g.index[cur])
    return path


def interval(g: MedianGraph, u: int, v: int) -> frozenset[int]:
    """Vertices agreeing with u and v on every wall where those two agree."""
    a = g.vertices[g.check_vertex(u)]
    b = g.vertices[g.check_vertex(v)]
    agree = ~(a ^ b)
    return frozenset(k for k, w in enumerate(g.vertices) if (w ^ a) & agree == 0)


def median_vertex(g: MedianGraph, u: int, v: int, t: int, check: bool = False) -> int:
    bits = majority(
        g.vertices[g.check_vertex(u)], g.vertices[g.check_vertex(v)], g.vertices[g.check_vertex(t)]
    )
    m = g.index[bits]
    if check:
        assert m in interval(g, u, v) and m in interval(g, v, t) and m in interval(g, t, u)
    return m


def halfspace_lift(g: MedianGraph, i: int, side: int) -> frozenset[int]:
    check_wall_side(g.space, i, side)
    return frozenset(k for k, bits in enumerate(g.vertices) if (bits >> i & 1) == side)
