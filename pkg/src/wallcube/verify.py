"""Independent verifiers for the structural claims about cubulations.

The graph-level checks (medianness, brute-force halfspaces, isomorphism) run
on plain ``networkx`` graphs through all-pairs BFS and never consult wall
labels, so they can be pointed at a cubulation and at arbitrary input alike.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

import networkx as nx
import numpy as np

from .cubecomplex import fill_cubes, square_wall_pairs
from .cubulation import MedianGraph, cubulate, halfspace_lift, interval
from .errors import GraphTooLarge, NotMedian
from .graphs import (
    ISO_MAX_VERTICES,
    all_pairs_distances,
    graphs_isomorphic,
    indexed,
    interval_masks,
    interval_words,
    is_convex,
    words_to_set,
)
from .ultrafilter import majority
from .wallspace import WallSpace, validate, walls_cross

HALFSPACE_MAX_VERTICES = 16


@dataclass
class VerificationReport:
    check: str
    passed: bool
    counterexample: Any = None
    exhaustive: bool = True
    seed: int | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "status": "pass" if self.passed else "fail",
            "counterexample": self.counterexample,
            "exhaustive": self.exhaustive,
            "seed": self.seed,
            "details": self.details,
        }

    def __bool__(self) -> bool:
        return self.passed


def _as_nx(g: nx.Graph | MedianGraph) -> nx.Graph:
    return g.to_networkx() if isinstance(g, MedianGraph) else g


def verify_median_graph(g: nx.Graph | MedianGraph) -> VerificationReport:
    """Every triple of vertices has exactly one common point of its three intervals.

    Triples are scanned in lexicographic order (node order); the first one
    whose intersection is not a singleton is reported.
    """
    ig = indexed(_as_nx(g))
    dist = all_pairs_distances(ig)
    n = ig.order
    if n == 0:
        return VerificationReport("median_graph", True, details={"vertices": 0})
    words = interval_words(dist)
    for u in range(n):
        # inter[v, t] = [u,v] & [v,t] & [t,u]
        inter = words[u][:, None, :] & words & words[:, u][None, :, :]
        counts = np.bitwise_count(inter).sum(axis=-1)
        bad = np.argwhere(counts != 1)
        if len(bad):
            v, t = (int(x) for x in bad[0])
            common = sorted(words_to_set(inter[v, t]))
            return VerificationReport(
                "median_graph",
                False,
                counterexample={
                    "triple": [ig.nodes[u], ig.nodes[v], ig.nodes[t]],
                    "intersection_size": int(counts[v, t]),
                    "intersection": [ig.nodes[x] for x in common],
                },
                details={"vertices": n},
            )
    return VerificationReport("median_graph", True, details={"vertices": n, "triples": n**3})


def verify_metric_coincidence(g: MedianGraph) -> VerificationReport:
    """Walls of the graph separating two vertices, counted through the lifted
    halfspaces, against BFS path distance."""
    dist = all_pairs_distances(indexed(g.to_networkx()))
    lifts = [halfspace_lift(g, i, 0) for i in range(g.space.w)]
    for u, v in combinations(range(g.order), 2):
        walls = sum(1 for h in lifts if (u in h) != (v in h))
        if walls != dist[u, v]:
            return VerificationReport(
                "metric_coincidence",
                False,
                counterexample={"pair": [u, v], "walls": walls, "path": int(dist[u, v])},
            )
    return VerificationReport("metric_coincidence", True, details={"pairs": g.order * (g.order - 1) // 2})


def median_closure(g: MedianGraph) -> list[list[int]]:
    """Close the principal vertices under the boolean median, round by round.

    Returns the vertices added in each round; an empty list means the
    principal vertices are already closed.
    """
    current = sorted(set(g.sigma))
    have = set(current)
    rounds: list[list[int]] = []
    while True:
        bits = np.array([g.vertices[v] for v in current], dtype=np.uint64)
        found: set[int] = set()
        for a in bits:
            med = majority(a, bits[:, None], bits[None, :])
            found.update(int(x) for x in np.unique(med))
        stray = [b for b in found if b not in g.index]
        if stray:
            raise AssertionError(f"median of vertices left the graph: {stray[:3]}")
        new = sorted(g.index[b] for b in found if g.index[b] not in have)
        if not new:
            return rounds
        rounds.append(new)
        have.update(new)
        current = sorted(have)


def verify_span(g: MedianGraph) -> VerificationReport:
    rounds = median_closure(g)
    reached = set(g.sigma).union(*rounds) if rounds else set(g.sigma)
    missing = sorted(set(range(g.order)) - reached)
    details = {"rounds": rounds, "added": sum(len(r) for r in rounds)}
    if missing:
        return VerificationReport("span", False, counterexample={"unreached": missing}, details=details)
    return VerificationReport("span", True, details=details)


def graph_halfspaces_bruteforce(g: nx.Graph | MedianGraph) -> set[frozenset]:
    """All vertex subsets that are convex with convex complement."""
    ig = indexed(_as_nx(g))
    n = ig.order
    if n > HALFSPACE_MAX_VERTICES:
        raise GraphTooLarge(f"{n} vertices; halfspace enumeration is capped at {HALFSPACE_MAX_VERTICES}")
    masks = interval_masks(all_pairs_distances(ig))
    full = (1 << n) - 1
    convex = [is_convex(s, masks) for s in range(1 << n)]
    return {
        frozenset(ig.nodes[x] for x in range(n) if s >> x & 1)
        for s in range(1 << n)
        if convex[s] and convex[full ^ s]
    }


def verify_halfspace_bijection(g: MedianGraph) -> VerificationReport:
    brute = graph_halfspaces_bruteforce(g.to_networkx())
    lifted = {}
    for i in range(g.space.w):
        for s in (0, 1):
            lifted[(i, s)] = halfspace_lift(g, i, s)
    image = set(lifted.values())
    if len(image) != len(lifted):
        seen: dict[frozenset, tuple[int, int]] = {}
        for key, h in lifted.items():
            if h in seen:
                return VerificationReport(
                    "halfspace_bijection", False, counterexample={"collision": [seen[h], key]}
                )
            seen[h] = key
    if image != brute:
        extra = sorted(sorted(h) for h in brute - image)
        lost = sorted(sorted(h) for h in image - brute)
        return VerificationReport(
            "halfspace_bijection",
            False,
            counterexample={"bruteforce_only": extra[:1], "lifted_only": lost[:1]},
        )
    return VerificationReport("halfspace_bijection", True, details={"halfspaces": len(brute)})


def verify_interval_bound(g: MedianGraph) -> VerificationReport:
    for u in range(g.order):
        for v in range(u, g.order):
            walls = (g.vertices[u] ^ g.vertices[v]).bit_count()
            size = len(interval(g, u, v))
            if walls > size - 1:
                return VerificationReport(
                    "interval_bound", False, counterexample={"pair": [u, v], "walls": walls, "interval": size}
                )
    return VerificationReport("interval_bound", True)


def derive_wallspace(g: nx.Graph | MedianGraph) -> WallSpace:
    """Walls of a median graph: each edge uv splits the vertices by which
    endpoint is closer.  Points are the vertices in node order, named by
    ``str(node)``."""
    ig = indexed(_as_nx(g))
    report = verify_median_graph(g)
    if not report.passed:
        raise NotMedian(f"graph is not median: {report.counterexample}")
    dist = all_pairs_distances(ig)
    n = ig.order
    sides = []
    for u in range(n):
        for v in ig.adj[u]:
            if v < u:
                continue
            du, dv = dist[:, u], dist[:, v]
            if (du == dv).any():
                raise NotMedian(f"vertex equidistant from the ends of edge {ig.nodes[u]!r}-{ig.nodes[v]!r}")
            a = sum(1 << x for x in range(n) if du[x] < dv[x])
            sides.append((a, ((1 << n) - 1) ^ a))
    names = [str(x) for x in ig.nodes]
    return validate(names, sides).raise_first()


def sigma_isomorphism(g: nx.Graph, c: MedianGraph) -> tuple[bool, Any]:
    """Is x -> sigma_x an isomorphism from ``g`` (points in node order) onto ``c``?"""
    ig = indexed(g)
    if len(set(c.sigma)) != c.order or ig.order != c.order:
        return False, {"reason": "sigma not onto", "vertices": c.order, "points": ig.order}
    ours = {frozenset((c.sigma[u], c.sigma[v])) for u in range(ig.order) for v in ig.adj[u]}
    theirs = {frozenset((u, v)) for u, v, _ in c.edges}
    if ours != theirs:
        diff = sorted(sorted(e) for e in ours ^ theirs)
        return False, {"reason": "adjacency differs", "edge": diff[0]}
    return True, None


def verify_idempotence(g: nx.Graph | MedianGraph) -> VerificationReport:
    raw = _as_nx(g)
    if raw.number_of_nodes() > ISO_MAX_VERTICES:
        raise GraphTooLarge(f"{raw.number_of_nodes()} vertices; idempotence check is capped at {ISO_MAX_VERTICES}")
    space = derive_wallspace(raw)
    c = cubulate(space)
    ok, why = sigma_isomorphism(raw, c)
    iso, _ = graphs_isomorphic(raw, c.to_networkx())
    details = {"vertices": c.order, "walls": space.w - 1, "isomorphic": iso}
    if not ok or not iso:
        return VerificationReport("idempotence", False, counterexample=why or {"reason": "not isomorphic"}, details=details)
    return VerificationReport("idempotence", True, details=details)


def verify_cube_crossing(g: MedianGraph) -> VerificationReport:
    """Square labels of the filled complex are exactly the crossing wall pairs."""
    squares = square_wall_pairs(fill_cubes(g))
    crossing = {(i, j) for i, j in combinations(range(1, g.space.w), 2) if walls_cross(g.space, i, j)}
    if squares != crossing:
        diff = sorted(squares ^ crossing)
        return VerificationReport("cube_crossing", False, counterexample={"pair": list(diff[0])})
    return VerificationReport("cube_crossing", True, details={"squares_pairs": len(squares)})


def verify_cubulation(g: MedianGraph) -> list[VerificationReport]:
    """The full battery, in a fixed order."""
    reports = [verify_median_graph(g), verify_metric_coincidence(g), verify_span(g)]
    if g.order <= HALFSPACE_MAX_VERTICES:
        reports.append(verify_halfspace_bijection(g))
    else:
        reports.append(
            VerificationReport("halfspace_bijection", True, exhaustive=False, details={"skipped": "too many vertices"})
        )
    reports += [verify_interval_bound(g), verify_cube_crossing(g)]
    return reports
