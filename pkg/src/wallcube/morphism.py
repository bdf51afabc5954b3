"""Morphisms of spaces with walls and their pushforward to cubulations."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import lcm

from .cubulation import MedianGraph, cubulate
from .errors import InvalidMorphism, NotUltrafilter, NotWallPermuting
from .ultrafilter import Orientation, coherent, majority
from .wallspace import WallSpace, members


def preimage(f: Sequence[int], mask: int) -> int:
    out = 0
    for x, fx in enumerate(f):
        if mask >> fx & 1:
            out |= 1 << x
    return out


def image(f: Sequence[int], mask: int) -> int:
    out = 0
    for x in members(mask):
        out |= 1 << f[x]
    return out


@dataclass(frozen=True)
class WallMap:
    source: WallSpace
    target: WallSpace
    f: tuple[int, ...]

    @classmethod
    def from_names(cls, source: WallSpace, target: WallSpace, pairs) -> WallMap:
        """``pairs`` is a mapping or an iterable of (source name, target name)."""
        items = pairs.items() if hasattr(pairs, "items") else pairs
        f = [-1] * source.n
        for a, b in items:
            x, y = source.point(a), target.point(b)
            if f[x] not in (-1, y):
                raise InvalidMorphism(f"point {a!r} mapped twice")
            f[x] = y
        missing = [source.names[x] for x in range(source.n) if f[x] < 0]
        if missing:
            raise InvalidMorphism(f"point map is not total; unmapped: {missing}")
        return cls(source, target, tuple(f))

    def __post_init__(self) -> None:
        if len(self.f) != self.source.n or any(not 0 <= y < self.target.n for y in self.f):
            raise InvalidMorphism("point map must send every source point to a target point")

    @cached_property
    def pulled_back(self) -> tuple[tuple[int, int], ...]:
        """For each target wall, the (source wall, side) whose halfspace is the
        preimage of its side0.  Empty when the map is not a morphism."""
        out = []
        lookup = self.source.side_lookup
        for w in self.target.walls:
            hit = lookup.get(preimage(self.f, w.side0))
            if hit is None:
                return ()
            out.append(hit)
        return tuple(out)


@dataclass
class MorphismCheck:
    ok: bool
    offending: tuple[int, int] | None = None  # (target wall, side)
    offending_side: list[str] | None = None
    preimage: list[str] | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_morphism(m: WallMap) -> MorphismCheck:
    lookup = m.source.side_lookup
    for j, w in enumerate(m.target.walls):
        for s in (0, 1):
            side = w.side(s)
            pre = preimage(m.f, side)
            if pre not in lookup:
                return MorphismCheck(False, (j, s), m.target.side_names(side), m.source.side_names(pre))
    return MorphismCheck(True)


def _require(m: WallMap) -> tuple[tuple[int, int], ...]:
    table = m.pulled_back
    if not table:
        check = validate_morphism(m)
        raise InvalidMorphism(
            f"preimage {check.preimage} of target halfspace {check.offending_side} is not a halfspace"
        )
    return table


def _push_bits(table: tuple[tuple[int, int], ...], bits: int) -> int:
    out = 0
    for j, (i, s) in enumerate(table):
        # side0 of target wall j pulls back to side s of source wall i
        if (bits >> i & 1) != s:
            out |= 1 << j
    return out


def pushforward(m: WallMap, o: Orientation) -> Orientation:
    """Target halfspaces whose preimage is chosen by ``o``."""
    table = _require(m)
    if not coherent(m.source, o.bits):
        raise NotUltrafilter(f"{o.to_bitstring()} is not an ultrafilter on the source")
    return Orientation(m.target, _push_bits(table, o.bits))


@dataclass(frozen=True)
class InducedMap:
    source: MedianGraph
    target: MedianGraph
    vmap: tuple[int, ...]

    @cached_property
    def is_bijective(self) -> bool:
        return len(set(self.vmap)) == self.target.order == self.source.order

    @cached_property
    def preserves_adjacency(self) -> bool:
        tgt = {(u, v) for u, v, _ in self.target.edges}
        for u, v, _ in self.source.edges:
            a, b = sorted((self.vmap[u], self.vmap[v]))
            if (a, b) not in tgt:
                return False
        return True

    @cached_property
    def is_graph_automorphism(self) -> bool:
        return (
            self.is_bijective
            and self.preserves_adjacency
            and len(self.source.edges) == len(self.target.edges)
        )

    @property
    def labels(self) -> list[str]:
        out = ["median morphism"]
        if self.is_graph_automorphism:
            out.append("graph automorphism")
        return out

    def __call__(self, v: int) -> int:
        return self.vmap[v]


def induced_graph_map(m: WallMap, source: MedianGraph | None = None, target: MedianGraph | None = None) -> InducedMap:
    table = _require(m)
    source = source or cubulate(m.source)
    target = target or cubulate(m.target)
    vmap = tuple(target.index[_push_bits(table, bits)] for bits in source.vertices)
    return InducedMap(source, target, vmap)


def preserves_medians(source: MedianGraph, target: MedianGraph, vmap: Sequence[int]) -> bool:
    n = source.order
    sb, tb = source.vertices, target.vertices
    for u, v, t in product(range(n), repeat=3):
        m = source.index[majority(sb[u], sb[v], sb[t])]
        if tb[vmap[m]] != majority(tb[vmap[u]], tb[vmap[v]], tb[vmap[t]]):
            return False
    return True


def pulls_back_halfspaces(source: MedianGraph, target: MedianGraph, vmap: Sequence[int]) -> bool:
    """Preimage of every lifted target halfspace is a lifted source halfspace."""
    lifted = set()
    for i in range(source.space.w):
        for s in (0, 1):
            lifted.add(frozenset(k for k, b in enumerate(source.vertices) if (b >> i & 1) == s))
    for j in range(target.space.w):
        for s in (0, 1):
            pre = frozenset(k for k in range(source.order) if (target.vertices[vmap[k]] >> j & 1) == s)
            if pre not in lifted:
                return False
    return True


# Group actions.  A generator is a point permutation ``g`` with g[x] = image of x;
# compose(g, h) is "g after h".


def compose(g: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    return tuple(g[h[x]] for x in range(len(h)))


@dataclass(frozen=True)
class GroupAction:
    space: WallSpace
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for k, g in enumerate(self.generators):
            check_wall_permuting(self.space, g, k)


def check_wall_permuting(space: WallSpace, g: Sequence[int], k: int = 0) -> None:
    if sorted(g) != list(range(space.n)):
        raise NotWallPermuting(f"generator {k} is not a permutation of the points")
    lookup = space.side_lookup
    for i, w in enumerate(space.walls):
        if image(g, w.side0) not in lookup:
            raise NotWallPermuting(
                f"generator {k} sends wall {i} side {space.side_names(w.side0)} to a non-halfspace"
            )


def extend_action(a: GroupAction, graph: MedianGraph | None = None) -> list[InducedMap]:
    graph = graph or cubulate(a.space)
    return [induced_graph_map(WallMap(a.space, a.space, g), graph, graph) for g in a.generators]


def order_of(m: InducedMap) -> int:
    """Order of a vertex permutation, as the lcm of its cycle lengths."""
    if not m.is_bijective:
        raise ValueError("map is not a permutation")
    seen = [False] * len(m.vmap)
    order = 1
    for start in range(len(m.vmap)):
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = m.vmap[v]
            length += 1
        if length:
            order = lcm(order, length)
    return order


def parse_cycles(space: WallSpace, text: str) -> tuple[int, ...]:
    """Cycle notation over point names, e.g. ``"(0 1 2 3 4 5)"`` or ``"(a c)(b)"``."""
    g = list(range(space.n))
    text = text.strip()
    if not text or text == "()":
        return tuple(g)
    seen: set[int] = set()
    for chunk in text.replace(")", ")\n").split("\n"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"malformed cycle {chunk!r}")
        body = chunk[1:-1].replace(",", " ").split()
        pts = [space.point(t) for t in body]
        if seen & set(pts) or len(set(pts)) != len(pts):
            raise ValueError(f"point repeated in cycles {text!r}")
        seen.update(pts)
        for x, y in zip(pts, pts[1:] + pts[:1]):
            g[x] = y
    return tuple(g)
