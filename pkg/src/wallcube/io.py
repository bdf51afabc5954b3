"""Documents in and out: wall spaces, graphs, complexes, reports.

Wall-space schema::

    {"points": ["a", "b", "c"], "walls": [["a"], ["a", "b"]]}

One side per wall; the complement and the trivial wall are implied.  Graph
schema (for raw median graphs)::

    {"vertices": ["u", "v", ...], "edges": [["u", "v"], ...]}

All JSON output is written with sorted keys and two-space indentation so it is
byte-stable.
"""

from __future__ import annotations

import json
import logging
from importlib import resources
from typing import Any

import networkx as nx

from .cubecomplex import CubeComplex
from .cubulation import MedianGraph
from .errors import ParseError, WallCubeError
from .morphism import WallMap
from .wallspace import ValidationReport, WallSpace, validate

log = logging.getLogger(__name__)

FIXTURES = ("PT", "TWO", "P3", "HEX6")


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None


def wallspace_report(doc: str | dict) -> ValidationReport:
    """Parse a wall-space document and validate it without raising on
    violations (syntax errors still raise ParseError)."""
    data = _load_json(doc) if isinstance(doc, str) else doc
    if not isinstance(data, dict) or "points" not in data:
        raise ParseError('expected an object with "points" and "walls"')
    points = data["points"]
    walls = data.get("walls", [])
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise ParseError('"points" must be a list of strings')
    if len(set(points)) != len(points):
        raise ParseError("duplicate point names")
    if not isinstance(walls, list) or not all(isinstance(w, list) for w in walls):
        raise ParseError('"walls" must be a list of lists of point names')
    pos = {name: k for k, name in enumerate(points)}
    full = (1 << len(points)) - 1
    pairs = []
    for k, side in enumerate(walls):
        mask = 0
        for token in side:
            if token not in pos:
                raise ParseError(f"unknown point name {token!r} in wall {k}")
            mask |= 1 << pos[token]
        pairs.append((mask, full ^ mask))
    return validate(points, pairs)


def parse_wallspace(doc: str | dict, notes: list[str] | None = None) -> WallSpace:
    report = wallspace_report(doc)
    for note in report.notes:
        log.info("normalization: %s", note)
    if notes is not None:
        notes.extend(report.notes)
    return report.raise_first()


def export_wallspace(space: WallSpace) -> dict:
    """Nontrivial walls only, each by its side0."""
    return {
        "points": list(space.names),
        "walls": [space.side_names(w.side0) for w in space.walls[1:]],
    }


def load_fixture(name: str) -> WallSpace:
    if name not in FIXTURES:
        raise ParseError(f"unknown fixture {name!r}")
    text = resources.files("wallcube.fixtures").joinpath(f"{name}.json").read_text()
    return parse_wallspace(text)


def parse_graph(doc: str | dict) -> nx.Graph:
    data = _load_json(doc) if isinstance(doc, str) else doc
    if not isinstance(data, dict) or "vertices" not in data:
        raise ParseError('expected an object with "vertices" and "edges"')
    g = nx.Graph()
    verts = data["vertices"]
    if len(set(map(str, verts))) != len(verts):
        raise ParseError("duplicate vertex names")
    g.add_nodes_from(str(v) for v in verts)
    for e in data.get("edges", []):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"edge must be a pair, got {e!r}")
        a, b = map(str, e)
        for x in (a, b):
            if x not in g:
                raise ParseError(f"unknown vertex {x!r} in edge {e!r}")
        if a == b or g.has_edge(a, b):
            raise ParseError(f"loop or repeated edge {e!r}")
        g.add_edge(a, b)
    return g


def export_graph_doc(g: nx.Graph) -> dict:
    return {"vertices": [str(v) for v in g.nodes], "edges": [[str(a), str(b)] for a, b in g.edges]}


def parse_morphism(doc: str | dict, source: WallSpace, target: WallSpace) -> WallMap:
    """``{"map": [["a", "a"], ["b", "a"], ["c", "b"]]}``"""
    data = _load_json(doc) if isinstance(doc, str) else doc
    pairs = data.get("map") if isinstance(data, dict) else None
    if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise ParseError('"map" must be a list of [source, target] name pairs')
    try:
        return WallMap.from_names(source, target, [tuple(p) for p in pairs])
    except WallCubeError as exc:
        raise ParseError(str(exc)) from None


def graph_doc(g: MedianGraph) -> dict:
    names = g.principal_names
    return {
        "walls": g.space.w,
        "vertices": [
            {"index": k, "bits": g.bitstring(k), "point": names.get(k)} for k in range(g.order)
        ],
        "edges": [{"u": u, "v": v, "wall": i} for u, v, i in g.edges],
    }


def graph_dot(g: MedianGraph) -> str:
    names = g.principal_names
    lines = ["graph cubulation {"]
    for k in range(g.order):
        label = f"σ_{names[k]}" if k in names else g.bitstring(k)
        lines.append(f'  v{k} [label="{label}"];')
    for u, v, i in g.edges:
        lines.append(f'  v{u} -- v{v} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def complex_doc(c: CubeComplex) -> dict:
    return {
        "f_vector": list(c.f_vector),
        "cubes": {str(k): [c.describe(x) for x in level] for k, level in enumerate(c.cubes)},
    }


def squares_off(c: CubeComplex) -> str:
    """OFF-style dump: vertices by index, then one quad face per square."""
    g = c.graph
    squares = c.cubes[2] if len(c.cubes) > 2 else ()
    lines = ["OFF", f"{g.order} {len(squares)} 0"]
    lines += [g.bitstring(k) for k in range(g.order)]
    for sq in squares:
        i, j = sq.walls
        b = sq.base
        ring = [b, b | 1 << i, b | 1 << i | 1 << j, b | 1 << j]
        lines.append("4 " + " ".join(str(g.index[x]) for x in ring))
    return "\n".join(lines) + "\n"


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
