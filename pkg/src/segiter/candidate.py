"""The candidate region K(S) and checks of its structural properties.

The intersection of all closed half-planes containing a finite set is its
convex hull, so K(S) is computed as the intersection of the hulls of S with
one point removed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable

from .geometry import ConvexPolygon, Point, as_point, convex_hull, intersect_convex_polygons, points_outside
from .iteration import GenerationSet


@dataclass(frozen=True)
class RegionResult:
    region: ConvexPolygon
    supporting_hulls: tuple[ConvexPolygon, ...]
    removed: tuple[Point, ...]   # removed[i] is the point left out of supporting_hulls[i]

    @property
    def kind(self) -> str:
        return self.region.kind


def candidate(points: Iterable) -> RegionResult:
    pts = sorted(set(as_point(p) for p in points))
    if len(pts) < 3:
        raise ValueError(f"the candidate needs at least 3 points, got {len(pts)}")
    hulls = tuple(convex_hull(pts[:i] + pts[i + 1:]) for i in range(len(pts)))
    region = reduce(intersect_convex_polygons, hulls)
    return RegionResult(region, hulls, tuple(pts))


@dataclass
class CandidateCheck:
    region: ConvexPolygon
    vertex_witness: dict[Point, int | None]        # vertex -> depth of the matching known point
    outside_points: list[Point] = field(default_factory=list)
    invariant_violation: str | None = None

    @property
    def unmatched_vertices(self) -> list[Point]:
        return [v for v, d in self.vertex_witness.items() if d is None or d > 1]

    @property
    def passed(self) -> bool:
        return not self.unmatched_vertices and not self.outside_points and self.invariant_violation is None


def check_candidate_properties(points: Iterable, g: GenerationSet,
                               result: RegionResult | None = None) -> CandidateCheck:
    """Check that K(S) vertices are known points of depth <= 1 and that K(S)
    contains every generated point."""
    result = result or candidate(points)
    region = result.region
    generated = [p for p, d in g.depth_of.items() if d >= 1]
    check = CandidateCheck(region, {v: g.depth_of.get(v) for v in region.vertices})
    if region.is_empty:
        if generated:
            check.invariant_violation = (
                f"candidate is empty but {len(generated)} intersection points were generated")
        return check
    check.outside_points = sorted(points_outside(generated, region))
    return check
