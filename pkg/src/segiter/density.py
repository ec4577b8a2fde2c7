"""Finite-depth density measurements inside the candidate region.

The coverage radius of a point set over a region is the largest distance from
a grid sample in the region to its nearest point. All reported values are
exact squared distances; floats are only used to shortlist nearest-point
candidates before the exact comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .candidate import candidate
from .classify import ConfigKind, classify
from .geometry import POLYGON, ConvexPolygon, Point, as_point, dist2, point_in_convex_polygon, OUTSIDE
from .iteration import IterationLimits, iterate

# Absolute slack on float squared distances when shortlisting candidates.
# Float error is around 1e-15 relative to the squared coordinate magnitude.
_SLACK = 1e-9


class ExceptionalConfigurationError(ValueError):
    pass


class DegenerateCandidateError(ValueError):
    pass


@dataclass(frozen=True)
class CoverageReport:
    depth: int
    samples: int
    radius_sq: Fraction
    worst_sample: Point
    grid_n: int
    points: int

    @property
    def radius(self) -> float:
        return float(self.radius_sq) ** 0.5


def grid_samples(region: ConvexPolygon, grid_n: int) -> list[Point]:
    """Cell centres of a grid_n x grid_n grid over the bounding box, kept if inside or on the region."""
    if grid_n < 1:
        raise ValueError("grid_n must be at least 1")
    x0, y0, x1, y1 = region.bbox()
    out = []
    for j in range(grid_n):
        y = y0 + (y1 - y0) * Fraction(2 * j + 1, 2 * grid_n)
        for i in range(grid_n):
            x = x0 + (x1 - x0) * Fraction(2 * i + 1, 2 * grid_n)
            p = Point(x, y)
            if point_in_convex_polygon(p, region) != OUTSIDE:
                out.append(p)
    return out


def coverage_radius(points: Iterable, region: ConvexPolygon, grid_n: int, depth: int = 0) -> CoverageReport:
    pts = sorted(set(as_point(p) for p in points))
    if not pts:
        raise ValueError("no points to measure")
    if region.kind != POLYGON:
        raise DegenerateCandidateError(f"coverage needs a polygon region, got {region.kind}")
    samples = grid_samples(region, grid_n)
    if not samples:
        raise ValueError("no grid sample falls inside the region")

    xy = np.array([[float(p.x), float(p.y)] for p in pts])
    scale = float(np.max(np.abs(xy))) if xy.size else 0.0
    slack = _SLACK * max(1.0, scale * scale)
    best: Fraction | None = None
    worst_sample = samples[0]
    for s in samples:
        d = (xy[:, 0] - float(s.x)) ** 2 + (xy[:, 1] - float(s.y)) ** 2
        shortlist = np.nonzero(d <= d.min() + slack)[0]
        nearest = min(dist2(s, pts[k]) for k in shortlist)
        if best is None or nearest > best:
            best, worst_sample = nearest, s
    return CoverageReport(depth, len(samples), best, worst_sample, grid_n, len(pts))


def density_profile(points: Iterable, limits: IterationLimits | None = None, grid_n: int = 20,
                    probe_limits: IterationLimits | None = None) -> list[CoverageReport]:
    """Coverage radius of the points found up to each depth, measured over K(S)."""
    pts = [as_point(p) for p in points]
    region = candidate(pts).region
    if region.is_empty:
        raise DegenerateCandidateError("degenerate candidate: K(S) is empty")
    cls = classify(pts, probe_limits)
    if cls.kind is not ConfigKind.NON_EXCEPTIONAL:
        raise ExceptionalConfigurationError(f"exceptional configuration ({cls.kind.value}); run classify first")
    if region.kind != POLYGON:
        raise DegenerateCandidateError(f"degenerate candidate: K(S) is a {region.kind}")
    g, _ = iterate(pts, limits)
    return [coverage_radius(g.points(d), region, grid_n, depth=d) for d in range(1, g.reached_depth + 1)]


def largest_gap(ratios: Iterable[Fraction]) -> Fraction:
    """Widest gap between consecutive values of a set of ratios in [0, 1] (endpoints included)."""
    vals = sorted(set(ratios) | {Fraction(0), Fraction(1)})
    return max(b - a for a, b in zip(vals, vals[1:]))
