"""Orientations of a wall system and the ultrafilter operations on them."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidWall, NotMinimal, NotUltrafilter, SpaceMismatch, TrivialFlip
from .wallspace import WallSpace


@dataclass(frozen=True)
class Orientation:
    """One chosen side per wall; bit ``i`` set means side1 of wall ``i``."""

    space: WallSpace
    bits: int

    def chosen(self, i: int) -> int:
        return self.space.side(i, (self.bits >> i) & 1)

    def halfspace_mask(self) -> int:
        return halfspace_mask(self.space, self.bits)

    def to_bitstring(self) -> str:
        return to_bitstring(self.bits, self.space.w)

    @classmethod
    def from_bitstring(cls, space: WallSpace, s: str) -> Orientation:
        if len(s) != space.w or set(s) - {"0", "1"}:
            raise ValueError(f"expected a bitstring of length {space.w}, got {s!r}")
        bits = sum(1 << i for i, c in enumerate(s) if c == "1")
        if bits & 1:
            raise ValueError("the trivial wall must select the whole space")
        return cls(space, bits)

    def __repr__(self) -> str:
        return f"Orientation({self.to_bitstring()})"


def to_bitstring(bits: int, w: int) -> str:
    """Wall 0 first."""
    return "".join("1" if bits >> i & 1 else "0" for i in range(w))


def halfspace_mask(space: WallSpace, bits: int) -> int:
    h = 0
    for i in range(space.w):
        h |= 1 << (2 * i + ((bits >> i) & 1))
    return h


def principal_bits(space: WallSpace, x: int) -> int:
    bx = 1 << x
    bits = 0
    for i, w in enumerate(space.walls):
        if not w.side0 & bx:
            bits |= 1 << i
    return bits


def principal(space: WallSpace, x: int | str) -> Orientation:
    return Orientation(space, principal_bits(space, space.point(x)))


# Coherence is tested as "chosen sides pairwise intersect".  This matches the
# upward-closure axiom: if A is chosen, A <= B and B is not, then B^c is chosen
# and misses A; conversely disjoint chosen A, C give A <= C^c, which upward
# closure would force into the orientation next to C.


def coherent(space: WallSpace, bits: int) -> bool:
    if bits & 1:
        return False
    chosen = halfspace_mask(space, bits)
    table = space.disjoint_table
    h = chosen
    while h:
        k = (h & -h).bit_length() - 1
        if table[k] & chosen:
            return False
        h &= h - 1
    return True


def is_ultrafilter(o: Orientation) -> bool:
    return coherent(o.space, o.bits)


def minimal_bits(space: WallSpace, bits: int) -> int:
    """Bitmask of nontrivial walls whose chosen side is inclusion-minimal."""
    chosen = halfspace_mask(space, bits)
    table = space.strict_subset_table
    out = 0
    for i in range(1, space.w):
        if not table[2 * i + ((bits >> i) & 1)] & chosen:
            out |= 1 << i
    return out


def minimal_walls(o: Orientation) -> frozenset[int]:
    if not is_ultrafilter(o):
        raise NotUltrafilter(f"{o.to_bitstring()} is not coherent")
    m = minimal_bits(o.space, o.bits)
    return frozenset(i for i in range(o.space.w) if m >> i & 1)


def flip(o: Orientation, i: int) -> Orientation:
    o.space.check_wall(i)
    if i == 0:
        raise TrivialFlip("the trivial wall cannot be flipped")
    if i not in minimal_walls(o):
        raise NotMinimal(f"wall {i} is not minimal at {o.to_bitstring()}")
    return Orientation(o.space, o.bits ^ (1 << i))


def _flip_unchecked(o: Orientation, i: int) -> Orientation:
    # Oracle-only: may produce an incoherent orientation.
    return Orientation(o.space, o.bits ^ (1 << i))


def _same_space(*os: Orientation) -> WallSpace:
    space = os[0].space
    for o in os[1:]:
        if o.space is not space and o.space != space:
            raise SpaceMismatch("orientations live on different wall spaces")
    return space


def symdiff(o1: Orientation, o2: Orientation) -> frozenset[int]:
    space = _same_space(o1, o2)
    d = o1.bits ^ o2.bits
    return frozenset(i for i in range(space.w) if d >> i & 1)


def majority(a: int, b: int, c: int) -> int:
    return (a & b) | (b & c) | (c & a)


def boolean_median(o1: Orientation, o2: Orientation, o3: Orientation) -> Orientation:
    space = _same_space(o1, o2, o3)
    return Orientation(space, majority(o1.bits, o2.bits, o3.bits))


def check_wall_side(space: WallSpace, i: int, side: int) -> None:
    space.check_wall(i)
    if side not in (0, 1):
        raise InvalidWall(f"side must be 0 or 1, got {side!r}")
