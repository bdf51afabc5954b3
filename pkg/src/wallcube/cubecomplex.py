"""Cube filling over a cubulated median graph.

A k-cube is stored as ``Cube(base, walls)``: its 2^k vertices are the
orientations obtained from ``base`` by flipping subsets of ``walls``.  The base
has every bit in ``walls`` cleared, which makes it the lexicographically least
bitstring of the cube.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .cubulation import MedianGraph
from .ultrafilter import to_bitstring


@dataclass(frozen=True, order=True)
class Cube:
    base: int
    walls: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.walls)

    @property
    def mask(self) -> int:
        m = 0
        for i in self.walls:
            m |= 1 << i
        return m

    def vertex_bits(self) -> list[int]:
        out = [self.base]
        for i in self.walls:
            out += [b | (1 << i) for b in out]
        return out

    def facets(self) -> list[Cube]:
        """All 2k faces of codimension one."""
        out = []
        for i in self.walls:
            rest = tuple(j for j in self.walls if j != i)
            out.append(Cube(self.base, rest))
            out.append(Cube(self.base | (1 << i), rest))
        return out

    def contains(self, other: Cube) -> bool:
        return set(other.walls) <= set(self.walls) and other.base & ~self.mask == self.base


@dataclass(frozen=True)
class CubeComplex:
    graph: MedianGraph
    cubes: tuple[tuple[Cube, ...], ...]  # cubes[k]: all k-cubes, by base bitstring then walls

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cubes)

    @property
    def dimension(self) -> int:
        return len(self.cubes) - 1

    @cached_property
    def cube_sets(self) -> tuple[frozenset[Cube], ...]:
        return tuple(frozenset(c) for c in self.cubes)

    def describe(self, cube: Cube) -> dict:
        return {"base": to_bitstring(cube.base, self.graph.space.w), "walls": list(cube.walls)}


def fill_cubes(g: MedianGraph) -> CubeComplex:
    """Add a k-cube whenever its faces at the base and all its corners exist."""
    w = g.space.w

    def key(c: Cube) -> tuple[str, tuple[int, ...]]:
        return to_bitstring(c.base, w), c.walls

    present = set(g.vertices)
    levels: list[list[Cube]] = [sorted((Cube(b, ()) for b in g.vertices), key=key)]
    levels.append(sorted((Cube(g.vertices[u] & g.vertices[v], (i,)) for u, v, i in g.edges), key=key))
    if not levels[1]:
        levels.pop()
    while len(levels) > 1:
        prev = set(levels[-1])
        found = set()
        for c in levels[-1]:
            for j in range(c.walls[-1] + 1, g.space.w):
                if c.base >> j & 1:
                    continue
                cand = Cube(c.base, c.walls + (j,))
                at_base = all(Cube(cand.base, tuple(x for x in cand.walls if x != i)) in prev for i in cand.walls)
                if at_base and all(b in present for b in cand.vertex_bits()):
                    found.add(cand)
        if not found:
            break
        levels.append(sorted(found, key=key))
    return CubeComplex(g, tuple(tuple(level) for level in levels))


def euler_characteristic(c: CubeComplex) -> int:
    return sum((-1) ** k * f for k, f in enumerate(c.f_vector))


def maximal_cubes(c: CubeComplex) -> list[Cube]:
    out = []
    for k, level in enumerate(c.cubes):
        above = c.cubes[k + 1] if k + 1 < len(c.cubes) else ()
        covered = set()
        for big in above:
            covered.update(big.facets())
        out.extend(x for x in level if x not in covered)
    return out


def square_wall_pairs(c: CubeComplex) -> set[tuple[int, int]]:
    return {sq.walls for sq in c.cubes[2]} if len(c.cubes) > 2 else set()
