"""Command-line front end.

Exit codes: 0 success, 1 a verification failed (report still printed),
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

from . import io
from .cubecomplex import euler_characteristic, fill_cubes, maximal_cubes
from .cubulation import MedianGraph, cubulate, geodesic_path, median_vertex
from .corpus import random_corpus
from .errors import ParseError, WallCubeError
from .morphism import (
    GroupAction,
    WallMap,
    compose,
    extend_action,
    induced_graph_map,
    order_of,
    parse_cycles,
    preserves_medians,
    validate_morphism,
)
from .ultrafilter import Orientation
from .verify import VerificationReport, verify_cubulation, verify_idempotence, verify_median_graph
from .wallspace import WallSpace, wall_metric

log = logging.getLogger("wallcube")


def load_space(arg: str, notes: list[str] | None = None) -> WallSpace:
    if arg in io.FIXTURES:
        return io.load_fixture(arg)
    path = Path(arg)
    if not path.exists():
        raise ParseError(f"no such fixture or file: {arg!r}")
    return io.parse_wallspace(path.read_text(encoding="utf-8"), notes)


def resolve_vertex(g: MedianGraph, token: str) -> int:
    """A point name selects its principal vertex; a bitstring selects itself."""
    if token in g.space.names:
        return g.sigma[g.space.names.index(token)]
    if len(token) == g.space.w and set(token) <= {"0", "1"}:
        return g.vertex_of(Orientation.from_bitstring(g.space, token))
    raise ParseError(f"{token!r} is neither a point name nor a vertex bitstring")


def vertex_label(g: MedianGraph, v: int) -> str:
    name = g.principal_names.get(v)
    return f"σ_{name}" if name is not None else g.bitstring(v)


def table(headers: list[str], rows: list[list[Any]]) -> str:
    cells = [headers] + [[("-" if c is None else str(c)) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def report_table(reports: list[VerificationReport]) -> str:
    rows = []
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        if r.details.get("skipped"):
            status = "skip"
        rows.append([r.check, status, "" if r.counterexample is None else json.dumps(r.counterexample, sort_keys=True)])
    return table(["check", "status", "counterexample"], rows)


def emit(out, text: str) -> None:
    out.write(text)


def cmd_validate(args, out) -> int:
    if args.space in io.FIXTURES:
        report = io.wallspace_report(io.export_wallspace(io.load_fixture(args.space)))
    else:
        path = Path(args.space)
        if not path.exists():
            raise ParseError(f"no such fixture or file: {args.space!r}")
        report = io.wallspace_report(path.read_text(encoding="utf-8"))
    violations = [f"{type(v).__name__}: {v}" for v in report.violations]
    if args.format == "json":
        doc = {"ok": report.ok, "notes": report.notes, "violations": violations}
        if report.space is not None:
            doc["space"] = io.export_wallspace(report.space)
        emit(out, io.dumps(doc))
    else:
        if report.space is not None:
            emit(out, f"ok: {report.space.n} points, {report.space.w} walls (including trivial)\n")
        for n in report.notes:
            emit(out, f"note: {n}\n")
        for v in violations:
            emit(out, f"violation: {v}\n")
    return 0 if report.ok else 2


def cmd_cubulate(args, out) -> int:
    g = cubulate(load_space(args.space))
    if args.format == "json":
        emit(out, io.dumps(io.graph_doc(g)))
    elif args.format == "dot":
        emit(out, io.graph_dot(g))
    else:
        emit(out, f"{g.order} vertices, {len(g.edges)} edges\n")
        emit(out, table(["vertex", "bits", "point"], [[k, g.bitstring(k), g.principal_names.get(k)] for k in range(g.order)]))
    return 0


def cmd_dist(args, out) -> int:
    space = load_space(args.space)
    d = wall_metric(space, args.x, args.y)
    if args.format == "json":
        emit(out, io.dumps({"x": args.x, "y": args.y, "distance": d}))
    else:
        emit(out, f"{d}\n")
    return 0


def cmd_median(args, out) -> int:
    g = cubulate(load_space(args.space))
    u, v, t = (resolve_vertex(g, a) for a in (args.u, args.v, args.t))
    m = median_vertex(g, u, v, t, check=True)
    if args.format == "json":
        emit(out, io.dumps({"median": {"index": m, "bits": g.bitstring(m), "point": g.principal_names.get(m)}}))
    else:
        emit(out, f"{vertex_label(g, m)}\n")
    return 0


def cmd_path(args, out) -> int:
    g = cubulate(load_space(args.space))
    p = geodesic_path(g, resolve_vertex(g, args.u), resolve_vertex(g, args.v))
    if args.format == "json":
        emit(out, io.dumps({"path": [{"index": k, "bits": g.bitstring(k), "point": g.principal_names.get(k)} for k in p]}))
    else:
        emit(out, " -> ".join(vertex_label(g, k) for k in p) + "\n")
    return 0


def cmd_cubes(args, out) -> int:
    c = fill_cubes(cubulate(load_space(args.space)))
    if args.off:
        emit(out, io.squares_off(c))
    elif args.format == "json":
        doc = io.complex_doc(c)
        doc["euler_characteristic"] = euler_characteristic(c)
        doc["maximal"] = [c.describe(x) for x in maximal_cubes(c)]
        emit(out, io.dumps(doc))
    else:
        emit(out, f"f-vector: {' '.join(map(str, c.f_vector))}\n")
        emit(out, f"euler characteristic: {euler_characteristic(c)}\n")
        rows = [[x.dim, c.describe(x)["base"], ",".join(map(str, x.walls))] for x in maximal_cubes(c)]
        emit(out, table(["dim", "base", "walls"], rows))
    return 0


def _emit_reports(args, out, reports: list[VerificationReport], extra: dict | None = None) -> int:
    if args.format == "json":
        doc = {"reports": [r.to_dict() for r in reports]}
        doc.update(extra or {})
        emit(out, io.dumps(doc))
    else:
        emit(out, report_table(reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_verify(args, out) -> int:
    if args.graph:
        g = io.parse_graph(Path(args.graph).read_text(encoding="utf-8"))
        return _emit_reports(args, out, [verify_median_graph(g)])
    if not args.space:
        raise ParseError("verify needs a wall space or --graph")
    reports = verify_cubulation(cubulate(load_space(args.space)))
    if args.random:
        for k, s in enumerate(random_corpus(args.seed, args.random)):
            for r in verify_cubulation(cubulate(s)):
                r.seed = args.seed
                r.check = f"random[{k}].{r.check}"
                if not r.passed:
                    r.counterexample = {"space": io.export_wallspace(s), "detail": r.counterexample}
                reports.append(r)
    return _emit_reports(args, out, reports)


def cmd_act(args, out) -> int:
    space = load_space(args.space)
    g = cubulate(space)
    if args.map:
        target_space = load_space(args.target) if args.target else space
        m = io.parse_morphism(Path(args.map).read_text(encoding="utf-8"), space, target_space)
        check = validate_morphism(m)
        if not check:
            doc = {"morphism": False, "offending_side": check.offending_side, "preimage": check.preimage}
            emit(out, io.dumps(doc) if args.format == "json" else f"not a morphism: preimage {check.preimage} of {check.offending_side}\n")
            return 1
        tg = cubulate(target_space)
        im = induced_graph_map(m, g, tg)
        doc = {
            "morphism": True,
            "labels": im.labels,
            "median_preserving": preserves_medians(g, tg, im.vmap),
            "vertex_map": [[g.bitstring(k), tg.bitstring(im(k))] for k in range(g.order)],
        }
        if args.format == "json":
            emit(out, io.dumps(doc))
        else:
            emit(out, f"labels: {', '.join(im.labels)}\n")
            emit(out, table(["source", "target"], doc["vertex_map"]))
        return 0 if doc["median_preserving"] else 1

    if not args.gen:
        raise ParseError("act needs at least one --gen or a --map")
    gens = tuple(parse_cycles(space, text) for text in args.gen)
    action = GroupAction(space, gens)
    exts = extend_action(action, g)
    records = []
    ok = True
    for text, gen, ext in zip(args.gen, gens, exts):
        equivariant = all(ext(g.sigma[x]) == g.sigma[gen[x]] for x in range(space.n))
        ok &= ext.is_graph_automorphism and equivariant
        records.append(
            {
                "generator": text,
                "order": order_of(ext) if ext.is_bijective else None,
                "labels": ext.labels,
                "equivariant": equivariant,
                "vertex_map": list(ext.vmap),
            }
        )
    # (g h)_* = g_* h_* on all products of two generators
    for a, ea in zip(gens, exts):
        for b, eb in zip(gens, exts):
            prod = induced_graph_map(WallMap(space, space, compose(a, b)), g, g)
            ok &= prod.vmap == tuple(ea(eb(v)) for v in range(g.order))
    if args.format == "json":
        emit(out, io.dumps({"generators": records, "functorial": ok}))
    else:
        rows = [[r["generator"], r["order"], ", ".join(r["labels"]), r["equivariant"]] for r in records]
        emit(out, table(["generator", "order", "labels", "equivariant"], rows))
    return 0 if ok else 1


def cmd_roundtrip(args, out) -> int:
    g = io.parse_graph(Path(args.graph).read_text(encoding="utf-8"))
    return _emit_reports(args, out, [verify_idempotence(g)])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wallcube", description="Cubulate finite spaces with walls.")
    p.add_argument("-v", "--verbose", action="store_true", help="log normalization notes to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, space: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        if space:
            sp.add_argument("space", help="fixture name (PT, TWO, P3, HEX6) or path to a wall-space JSON file")
        sp.add_argument("--format", choices=["json", "dot", "table"], default="table")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check and normalize a wall space")
    add("cubulate", cmd_cubulate, "build the median graph of ultrafilters")
    sp = add("dist", cmd_dist, "wall metric between two points")
    sp.add_argument("x")
    sp.add_argument("y")
    sp = add("median", cmd_median, "median of three vertices (point names or bitstrings)")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("t")
    sp = add("path", cmd_path, "deterministic geodesic between two vertices")
    sp.add_argument("u")
    sp.add_argument("v")
    sp = add("cubes", cmd_cubes, "fill cubes and report the f-vector")
    sp.add_argument("--off", action="store_true", help="dump squares in OFF format")
    sp = add("verify", cmd_verify, "run the verification battery", space=False)
    sp.add_argument("space", nargs="?")
    sp.add_argument("--graph", help="verify medianness of a raw graph JSON file instead")
    sp.add_argument("--random", type=int, default=0, metavar="N", help="also verify N random wall spaces")
    sp.add_argument("--seed", type=int, default=0)
    sp = add("act", cmd_act, "extend a group action or a morphism to the cubulation")
    sp.add_argument("--gen", action="append", help="generator in cycle notation, e.g. '(0 1 2 3 4 5)'")
    sp.add_argument("--map", help="morphism JSON file with a \"map\" list of [source, target] pairs")
    sp.add_argument("--target", help="target wall space for --map (default: the source)")
    sp = add("roundtrip", cmd_roundtrip, "derive walls from a median graph, cubulate, compare", space=False)
    sp.add_argument("graph", help="graph JSON file")
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args, out)
    except WallCubeError as exc:
        sys.stderr.write(f"error [{exc.module}] {type(exc).__name__}: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
