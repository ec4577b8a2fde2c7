"""Command-line front end. Every command prints one JSON report on stdout.

Exit codes: 0 success, 2 input error, 3 limit hit without fixpoint,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .candidate import candidate, check_candidate_properties
from .classify import DEFAULT_PROBE, LineWitness, NestedTrianglesWitness, ProbeWitness, classify
from .constructible import closure, farey
from .density import density_profile
from .geometry import ConvexPolygon, Point
from .io import SCHEMA, PointFileError, exact, parse_point_file, parse_rational, point_json, write_points_csv
from .iteration import IterationLimits, IterationReport, iterate
from .projective import Ray, collapse_through, convergence_sequence
from .svg import SvgOptions, render_svg

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_INVARIANT = 0, 2, 3, 4

log = logging.getLogger("segiter")


class InvariantViolation(RuntimeError):
    pass


def _region_json(region: ConvexPolygon) -> dict:
    return {"kind": region.kind, "vertices": [point_json(v) for v in region.vertices]}


def _report_json(report: IterationReport) -> dict:
    return {
        "rounds": report.rounds,
        "new_points_per_round": report.new_counts,
        "total_points": report.total_points,
        "fixpoint": report.fixpoint,
        "limit_hit": report.limit_hit,
        "round_seconds": [round(t, 6) for t in report.round_seconds],
    }


def _witness_json(w) -> dict | None:
    if isinstance(w, LineWitness):
        return {"on_line": [point_json(p) for p in w.on_line], "off_line": [point_json(p) for p in w.off_line]}
    if isinstance(w, NestedTrianglesWitness):
        return {
            "outer": [point_json(p) for p in w.outer],
            "inner": [point_json(p) for p in w.inner],
            "pairing": [{"inner_pair": [point_json(a), point_json(b)], "outer": point_json(o)}
                        for (a, b), o in w.pairing],
        }
    if isinstance(w, ProbeWitness):
        return {"probe_limits": vars(w.limits), "probe": _report_json(w.report)}
    return None


def _limits(args, default: IterationLimits) -> IterationLimits:
    return IterationLimits(
        max_depth=args.depth if args.depth is not None else default.max_depth,
        max_points=args.max_points if args.max_points is not None else default.max_points,
        max_bits=args.max_bits if args.max_bits is not None else default.max_bits,
    )


def _points(args) -> list[Point]:
    return parse_point_file(Path(args.points).read_text())


def _emit(command: str, body: dict) -> None:
    print(json.dumps({"schema": SCHEMA, "command": command, **body}, indent=2))


def cmd_classify(args) -> int:
    cls = classify(_points(args), _limits(args, DEFAULT_PROBE))
    _emit("classify", {"kind": cls.kind.value, "exceptional": cls.exceptional, "witness": _witness_json(cls.witness)})
    return EXIT_OK


def _run(args):
    pts = _points(args)
    g, report = iterate(pts, _limits(args, IterationLimits()))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_points_csv(g.sorted_points(), fh)
    return pts, g, report


def _write_svg(args, g, region):
    if args.svg:
        opts = SvgOptions(show_segments=not getattr(args, "hide_segments", False))
        Path(args.svg).write_text(render_svg(g, region, opts))


def cmd_iterate(args) -> int:
    pts, g, report = _run(args)
    _write_svg(args, g, candidate(pts) if len(pts) >= 3 else None)
    _emit("iterate", {"start_points": len(pts), "points_per_depth": g.counts(), **_report_json(report)})
    if report.limit_hit and not report.fixpoint:
        return EXIT_LIMIT
    return EXIT_OK


def cmd_candidate(args) -> int:
    pts, g, report = _run(args)
    result = candidate(pts)
    check = check_candidate_properties(pts, g, result)
    _write_svg(args, g, result)
    _emit("candidate", {
        "region": _region_json(result.region),
        "iteration": _report_json(report),
        "vertex_depths": [{"vertex": point_json(v), "depth": d} for v, d in check.vertex_witness.items()],
        "points_outside": [point_json(p) for p in check.outside_points],
        "invariant_violation": check.invariant_violation,
        "passed": check.passed,
    })
    if not check.passed:
        raise InvariantViolation("candidate property check failed")
    return EXIT_OK


def cmd_density(args) -> int:
    pts = _points(args)
    reports = density_profile(pts, _limits(args, IterationLimits()), args.grid)
    _emit("density", {
        "grid": args.grid,
        "profile": [{
            "depth": r.depth, "points": r.points, "samples": r.samples,
            "radius_squared": exact(r.radius_sq), "radius": r.radius,
            "worst_sample": point_json(r.worst_sample),
        } for r in reports],
    })
    return EXIT_OK


def cmd_fractions(args) -> int:
    n = args.max_denominator
    if n < 1:
        raise ValueError("max denominator must be at least 1")
    traces = closure(n)
    reference = farey(n)
    if set(traces) != set(reference):
        raise InvariantViolation("closure differs from the Farey sequence")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("fraction,derivation\n")
            for f in sorted(traces):
                chain = " ".join(f"{rule}({arg})" for rule, arg in traces[f].steps)
                fh.write(f"{f},{chain}\n")
    _emit("fractions", {
        "max_denominator": n,
        "count": len(traces),
        "equals_farey": True,
        "fractions": [str(f) for f in sorted(traces)],
    })
    return EXIT_OK


def cmd_converge(args) -> int:
    try:
        doc = json.loads(Path(args.config).read_text())
        get = lambda key: Point(parse_rational(doc[key][0], key), parse_rational(doc[key][1], key))
        l, m, n, p0 = get("L"), get("M"), get("N"), get("P0")
        a, b = Ray(m, get("a")), Ray(m, get("b"))
    except (KeyError, IndexError, TypeError, json.JSONDecodeError) as exc:
        raise PointFileError(f"malformed convergence config: {exc}") from None
    tol2 = parse_rational(args.tol2) if args.tol2 else None
    seq = convergence_sequence(l, m, n, a, b, p0, args.iterations, tol2)
    body = {"steps": [{"i": i, "P": point_json(p), "Q": point_json(q)} for i, (p, q) in enumerate(seq)]}
    try:
        h = collapse_through(l, n)
        body["projected_P"] = [point_json(h(p)) for p, _ in seq]
    except ValueError:
        pass
    _emit("converge", body)
    return EXIT_OK


def cmd_render(args) -> int:
    if not args.svg:
        raise ValueError("render needs --svg FILE")
    pts, g, report = _run(args)
    _write_svg(args, g, candidate(pts) if len(pts) >= 3 else None)
    _emit("render", {"svg": args.svg, "points": len(g), **_report_json(report)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="segiter", description="Iterated segment intersections in exact arithmetic.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def limits(sp, depth_help="number of rounds"):
        sp.add_argument("--depth", type=int, help=depth_help)
        sp.add_argument("--max-points", type=int, dest="max_points")
        sp.add_argument("--max-bits", type=int, dest="max_bits")

    sp = sub.add_parser("classify", help="decide whether a point set is an exceptional configuration")
    sp.add_argument("points")
    limits(sp, "probe depth")
    sp.set_defaults(func=cmd_classify)

    for name, func, helptext in (("iterate", cmd_iterate, "run the iteration"),
                                 ("candidate", cmd_candidate, "compute K(S) and check it against a run"),
                                 ("render", cmd_render, "draw a run as SVG")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("points")
        limits(sp)
        sp.add_argument("--out", help="CSV dump of the points (x, y, depth)")
        sp.add_argument("--svg", help="write an SVG figure")
        sp.add_argument("--hide-segments", action="store_true", dest="hide_segments")
        sp.set_defaults(func=func)

    sp = sub.add_parser("density", help="coverage radius of K(S) per depth")
    sp.add_argument("points")
    limits(sp)
    sp.add_argument("--grid", type=int, default=20)
    sp.set_defaults(func=cmd_density)

    sp = sub.add_parser("fractions", help="constructible fractions up to a denominator")
    sp.add_argument("max_denominator", type=int)
    sp.add_argument("--out", help="CSV of fractions with their derivations")
    sp.set_defaults(func=cmd_fractions)

    sp = sub.add_parser("converge", help="converging sequence between two rays")
    sp.add_argument("config", help='JSON with "L", "M", "N", "P0" points and "a", "b" ray directions')
    sp.add_argument("--iterations", type=int, default=10)
    sp.add_argument("--tol2", help="stop once both squared distances to M drop below this rational")
    sp.set_defaults(func=cmd_converge)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
