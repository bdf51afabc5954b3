"""Cubulation of finite spaces with walls."""

from .cubecomplex import CubeComplex, fill_cubes
from .cubulation import MedianGraph, cubulate
from .ultrafilter import Orientation
from .wallspace import WallSpace, from_sides, validate

__all__ = [
    "CubeComplex",
    "MedianGraph",
    "Orientation",
    "WallSpace",
    "cubulate",
    "fill_cubes",
    "from_sides",
    "validate",
]
