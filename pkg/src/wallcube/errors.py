"""Exception hierarchy shared by every wallcube module."""

from __future__ import annotations


class WallCubeError(Exception):
    """Base class for all domain errors raised by wallcube."""

    module = "wallcube"


class WallSpaceError(WallCubeError):
    module = "wallspace"


class EmptyPointSet(WallSpaceError):
    pass


class NonComplementarySides(WallSpaceError):
    def __init__(self, wall: int, detail: str = "") -> None:
        self.wall = wall
        msg = f"wall {wall} does not partition the point set"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class UnseparatedPair(WallSpaceError):
    def __init__(self, x: str, y: str) -> None:
        self.pair = (x, y)
        super().__init__(f"no wall separates points {x!r} and {y!r}")


class InvalidPoint(WallSpaceError):
    pass


class InvalidWall(WallSpaceError):
    pass


class TrivialWallQuery(WallSpaceError):
    pass


class SpaceTooLarge(WallSpaceError):
    pass


class UltrafilterError(WallCubeError):
    module = "ultrafilter"


class NotUltrafilter(UltrafilterError):
    pass


class NotMinimal(UltrafilterError):
    pass


class TrivialFlip(UltrafilterError):
    pass


class SpaceMismatch(UltrafilterError):
    pass


class CubulationError(WallCubeError):
    module = "cubulation"


class InvalidSpace(CubulationError):
    pass


class TooManyWalls(CubulationError):
    pass


class InvalidVertex(CubulationError):
    pass


class VerifyError(WallCubeError):
    module = "verify"


class DisconnectedGraph(VerifyError):
    pass


class NonSimplicialGraph(VerifyError):
    pass


class GraphTooLarge(VerifyError):
    pass


class NotMedian(VerifyError):
    pass


class MorphismError(WallCubeError):
    module = "morphism"


class InvalidMorphism(MorphismError):
    pass


class NotWallPermuting(MorphismError):
    pass


class ParseError(WallCubeError):
    module = "cli"
