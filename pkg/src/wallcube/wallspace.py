"""Finite spaces with walls.

Point subsets are bitmasks over point indices.  Every wall stores both of its
halfspaces; ``side0`` is the halfspace holding the lowest-indexed point, so the
trivial wall is always ``(X, 0)`` and sits at index 0.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import (
    EmptyPointSet,
    InvalidPoint,
    InvalidWall,
    NonComplementarySides,
    SpaceTooLarge,
    TrivialWallQuery,
    UnseparatedPair,
    WallSpaceError,
)

MAX_POINTS = 64
MAX_WALLS = 64

PointSet = int | Iterable[int]


def to_mask(points: PointSet) -> int:
    if isinstance(points, int):
        return points
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def members(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Wall:
    side0: int
    side1: int

    def side(self, bit: int) -> int:
        return self.side1 if bit else self.side0

    @property
    def is_trivial(self) -> bool:
        return self.side1 == 0


@dataclass(frozen=True)
class WallSpace:
    """An immutable, validated finite space with walls.

    Build instances with :func:`from_sides` or :func:`validate`; the
    constructor itself trusts its arguments.
    """

    names: tuple[str, ...]
    walls: tuple[Wall, ...]

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def w(self) -> int:
        return len(self.walls)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def point(self, x: int | str) -> int:
        """Resolve a point index or name to an index."""
        if isinstance(x, str):
            try:
                return self.names.index(x)
            except ValueError:
                raise InvalidPoint(f"unknown point name {x!r}") from None
        if not isinstance(x, int) or not 0 <= x < self.n:
            raise InvalidPoint(f"point index {x!r} out of range 0..{self.n - 1}")
        return x

    def check_wall(self, i: int) -> int:
        if not isinstance(i, int) or not 0 <= i < self.w:
            raise InvalidWall(f"wall index {i!r} out of range 0..{self.w - 1}")
        return i

    def side(self, i: int, bit: int) -> int:
        return self.walls[i].side(bit)

    def side_names(self, mask: int) -> list[str]:
        return [self.names[p] for p in members(mask)]

    # Halfspace h = 2*i + b is side b of wall i.  These tables let the
    # ultrafilter code test coherence and minimality with a few AND operations.

    @cached_property
    def halfspaces(self) -> tuple[int, ...]:
        return tuple(w.side(b) for w in self.walls for b in (0, 1))

    @cached_property
    def disjoint_table(self) -> tuple[int, ...]:
        hs = self.halfspaces
        table = []
        for a in hs:
            row = 0
            for k, b in enumerate(hs):
                if a & b == 0:
                    row |= 1 << k
            table.append(row)
        return tuple(table)

    @cached_property
    def strict_subset_table(self) -> tuple[int, ...]:
        """Row h: halfspaces that are proper subsets of halfspace h."""
        hs = self.halfspaces
        table = []
        for a in hs:
            row = 0
            for k, b in enumerate(hs):
                if b != a and b & ~a == 0:
                    row |= 1 << k
            table.append(row)
        return tuple(table)

    @cached_property
    def side_lookup(self) -> dict[int, tuple[int, int]]:
        """Map a halfspace bitmask to its (wall index, side bit)."""
        return {mask: (h >> 1, h & 1) for h, mask in enumerate(self.halfspaces)}


@dataclass
class ValidationReport:
    ok: bool
    space: WallSpace | None = None
    violations: list[WallSpaceError] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def raise_first(self) -> WallSpace:
        if not self.ok:
            raise self.violations[0]
        assert self.space is not None
        return self.space


def validate(
    names: Sequence[str] | int,
    walls: Iterable[tuple[PointSet, PointSet]],
) -> ValidationReport:
    """Check and normalize a candidate space given as explicit side pairs.

    ``names`` is either the list of point names or a point count (names then
    default to ``"0"``, ``"1"``, ...).  Violations refer to walls by their
    position in ``walls``.
    """
    if isinstance(names, int):
        names = [str(i) for i in range(names)]
    names = tuple(names)
    n = len(names)
    if n == 0:
        return ValidationReport(False, violations=[EmptyPointSet("a space with walls needs at least one point")])
    if n > MAX_POINTS:
        return ValidationReport(False, violations=[SpaceTooLarge(f"{n} points exceeds the limit of {MAX_POINTS}")])
    if len(set(names)) != n:
        return ValidationReport(False, violations=[InvalidPoint("duplicate point names")])
    full = (1 << n) - 1

    violations: list[WallSpaceError] = []
    notes: list[str] = []
    canon: list[Wall] = []
    seen: set[Wall] = set()
    for pos, (a, b) in enumerate(walls):
        a, b = to_mask(a), to_mask(b)
        if (a | b) != full or a & b or (a | b) & ~full:
            violations.append(NonComplementarySides(pos, f"sides {members(a)} and {members(b)}"))
            continue
        if a & 1 == 0:
            a, b = b, a
        wall = Wall(a, b)
        if wall in seen:
            notes.append(f"duplicate wall at position {pos} removed")
            continue
        seen.add(wall)
        canon.append(wall)

    trivial = Wall(full, 0)
    if trivial in seen:
        canon.remove(trivial)
    else:
        notes.append("trivial wall inserted")
    canon.insert(0, trivial)

    if len(canon) > MAX_WALLS:
        violations.append(SpaceTooLarge(f"{len(canon)} walls exceeds the limit of {MAX_WALLS}"))

    if not violations:
        for x, y in combinations(range(n), 2):
            bx, by = 1 << x, 1 << y
            if not any(bool(w.side0 & bx) != bool(w.side0 & by) for w in canon):
                violations.append(UnseparatedPair(names[x], names[y]))

    if violations:
        return ValidationReport(False, violations=violations, notes=notes)
    return ValidationReport(True, WallSpace(names, tuple(canon)), notes=notes)


def from_sides(names: Sequence[str] | int, sides: Iterable[PointSet]) -> WallSpace:
    """Build a space from one halfspace per wall; complements are implied."""
    if isinstance(names, int):
        names = [str(i) for i in range(names)]
    full = (1 << len(names)) - 1
    pairs = []
    for s in sides:
        m = to_mask(s)
        pairs.append((m, full & ~m))
    return validate(names, pairs).raise_first()


def separating_walls(space: WallSpace, x: int | str, y: int | str) -> frozenset[int]:
    bx, by = 1 << space.point(x), 1 << space.point(y)
    return frozenset(
        i for i, w in enumerate(space.walls) if bool(w.side0 & bx) != bool(w.side0 & by)
    )


def wall_metric(space: WallSpace, x: int | str, y: int | str) -> int:
    return len(separating_walls(space, x, y))


def walls_cross(space: WallSpace, i: int, j: int) -> bool:
    """True iff all four side intersections of walls ``i`` and ``j`` are nonempty."""
    space.check_wall(i)
    space.check_wall(j)
    if i == 0 or j == 0:
        raise TrivialWallQuery("crossing is undefined for the trivial wall")
    if i == j:
        raise InvalidWall("a wall is not compared with itself")
    a, b = space.walls[i], space.walls[j]
    return all(s & t for s in (a.side0, a.side1) for t in (b.side0, b.side1))
