"""Iterated segment intersections: S1, S2, ... under resource limits.

Segments spanned by the known points are grouped by supporting line. Two
segments on the same line meet in a singleton only at a shared endpoint,
which is already known, so every new point is the crossing of two distinct
lines that falls inside the extent (lexicographic min..max of the known
points) of both. That turns the quadratic pass over segment pairs into a
pass over pairs of lines, with identical output.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable

from .geometry import Point, as_point, homogeneous, line_through_homogeneous

log = logging.getLogger(__name__)

Line = tuple[int, int, int]

MAX_DEPTH, MAX_POINTS, MAX_BITS = "max_depth", "max_points", "max_bits"


@dataclass(frozen=True)
class IterationLimits:
    max_depth: int = 3
    max_points: int = 20000
    max_bits: int = 256

    def __post_init__(self):
        for name in ("max_depth", "max_points", "max_bits"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")


@dataclass
class GenerationSet:
    """Known points with the round in which each was first found (0 = starting set)."""

    depth_of: dict[Point, int]
    current_depth: int = 0

    @classmethod
    def start(cls, points: Iterable) -> GenerationSet:
        return cls({as_point(p): 0 for p in points}, 0)

    def __len__(self) -> int:
        return len(self.depth_of)

    def __contains__(self, p) -> bool:
        return p in self.depth_of

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenerationSet):
            return NotImplemented
        return self.current_depth == other.current_depth and self.depth_of == other.depth_of

    def points(self, max_depth: int | None = None) -> set[Point]:
        if max_depth is None:
            return set(self.depth_of)
        return {p for p, d in self.depth_of.items() if d <= max_depth}

    def at_depth(self, depth: int) -> set[Point]:
        return {p for p, d in self.depth_of.items() if d == depth}

    @property
    def start_points(self) -> set[Point]:
        return self.at_depth(0)

    @property
    def reached_depth(self) -> int:
        """Largest discovery depth present."""
        return max(self.depth_of.values(), default=0)

    def counts(self) -> list[int]:
        out = [0] * (self.reached_depth + 1)
        for d in self.depth_of.values():
            out[d] += 1
        return out

    def sorted_points(self) -> list[tuple[Point, int]]:
        return sorted(self.depth_of.items(), key=lambda kv: (kv[1], kv[0]))


@dataclass
class IterationReport:
    new_counts: list[int] = field(default_factory=list)   # one entry per completed round
    fixpoint: bool = False
    limit_hit: str | None = None
    round_seconds: list[float] = field(default_factory=list)
    start_count: int = 0

    @property
    def rounds(self) -> int:
        return len(self.new_counts)

    @property
    def total_points(self) -> int:
        return self.start_count + sum(self.new_counts)


class _PointLimit(Exception):
    pass


class LineIndex:
    """Supporting lines of all segments between known points, with their extents."""

    def __init__(self):
        self.extent: dict[Line, list[Point]] = {}
        self._hom: dict[Point, tuple[int, int, int]] = {}

    def hom(self, p: Point) -> tuple[int, int, int]:
        """Cached integer homogeneous coordinates of p."""
        h = self._hom.get(p)
        if h is None:
            h = self._hom[p] = homogeneous(p)
        return h

    def add_point(self, p: Point, others: Iterable[Point], touched: set[Line] | None = None):
        hp = self.hom(p)
        for q in others:
            key = line_through_homogeneous(hp, self.hom(q))
            ext = self.extent.get(key)
            if ext is None:
                self.extent[key] = [min(p, q), max(p, q)]
            else:
                if p < ext[0]:
                    ext[0] = p
                elif p > ext[1]:
                    ext[1] = p
            if touched is not None:
                touched.add(key)

    @classmethod
    def build(cls, points: Iterable[Point]) -> LineIndex:
        idx = cls()
        seen: list[Point] = []
        for p in sorted(points):
            idx.add_point(p, seen)
            seen.append(p)
        return idx

    def lines_through(self, points: set[Point]) -> set[Line]:
        out = set()
        for key in self.extent:
            a, b, c = key
            for p in points:
                if a * p.x + b * p.y + c == 0:
                    out.add(key)
                    break
        return out


def _span(line: Line, ext: list[tuple[int, int, int]]) -> tuple:
    """Line and extent as integers: the extent becomes lo_n/lo_d <= t <= hi_n/hi_d
    for the parameter t = a*y - b*x, which is strictly monotone along the line."""
    a, b, _ = line
    (n0, d0), (n1, d1) = ((a * y - b * x, w) for x, y, w in ext)
    if n0 * d1 <= n1 * d0:
        return line + (n0, d0, n1, d1)
    return line + (n1, d1, n0, d0)


def _new_points(idx: LineIndex, known, dirty: set[Line] | None, room: int | None) -> set[Point]:
    """Crossings of line pairs (at least one dirty, unless dirty is None) inside both extents.

    With W = a1*b2 - a2*b1 > 0 the crossing is (X/W, Y/W), its parameter on a
    line is (a*Y - b*X)/W, and both extent tests are integer comparisons.
    Crossings are deduplicated by their primitive (X, Y, W), which hashes far
    faster than a pair of Fractions.
    """
    keys = sorted(idx.extent)
    spans = [_span(k, [idx.hom(p) for p in idx.extent[k]]) for k in keys]
    is_dirty = [dirty is None or k in dirty for k in keys]
    seen = {idx.hom(p) for p in known}
    found: list[tuple[int, int, int]] = []
    limit = None if room is None else room + len(seen)
    n = len(spans)
    for i in range(n):
        if not is_dirty[i]:
            continue
        a1, b1, c1, lo1n, lo1d, hi1n, hi1d = spans[i]
        for j in range(n):
            if j <= i and is_dirty[j]:
                continue
            a2, b2, c2, lo2n, lo2d, hi2n, hi2d = spans[j]
            w = a1 * b2 - a2 * b1
            if w == 0:
                continue
            x = b1 * c2 - b2 * c1
            y = c1 * a2 - c2 * a1
            if w < 0:
                w, x, y = -w, -x, -y
            t = a1 * y - b1 * x
            if t * lo1d < lo1n * w or t * hi1d > hi1n * w:
                continue
            t = a2 * y - b2 * x
            if t * lo2d < lo2n * w or t * hi2d > hi2n * w:
                continue
            g = gcd(x, y, w)
            key = (x // g, y // g, w // g)
            if key in seen:
                continue
            seen.add(key)
            found.append(key)
            if limit is not None and len(seen) > limit:
                raise _PointLimit
    return {Point(Fraction(x, w), Fraction(y, w)) for x, y, w in found}


def next_generation(g: GenerationSet) -> set[Point]:
    """All singleton intersections of segments between points of g that g does not hold yet.

    After the first round only line pairs with at least one line through a
    newest-depth point are examined; the remaining pairs were examined in the
    previous round with the same extents.
    """
    if len(g) < 2:
        raise ValueError("need at least two points")
    idx = LineIndex.build(g.depth_of)
    dirty = None
    if g.current_depth >= 1:
        dirty = idx.lines_through(g.at_depth(g.current_depth))
    return _new_points(idx, g.depth_of, dirty, None)


def _bits(p: Point) -> int:
    return max(p.x.numerator.bit_length(), p.x.denominator.bit_length(),
               p.y.numerator.bit_length(), p.y.denominator.bit_length())


def iterate(points: Iterable, limits: IterationLimits | None = None) -> tuple[GenerationSet, IterationReport]:
    """Run rounds until no new point appears or a limit trips.

    A round that would break ``max_points`` or ``max_bits`` is discarded, so the
    returned set always respects the limits; ``report.limit_hit`` names the cause.
    """
    limits = limits or IterationLimits()
    pts = [as_point(p) for p in points]
    if len(pts) < 2:
        raise ValueError("need at least two starting points")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate starting points")

    g = GenerationSet.start(pts)
    report = IterationReport(start_count=len(pts))
    if len(pts) > limits.max_points:
        report.limit_hit = MAX_POINTS
        return g, report

    idx = LineIndex.build(pts)
    dirty: set[Line] | None = None
    fresh: list[Point] = []
    while True:
        if g.current_depth >= limits.max_depth:
            report.limit_hit = MAX_DEPTH
            break
        t0 = time.perf_counter()
        if fresh:
            # the index is extended only when another round will use it
            dirty = set()
            old = [p for p, d in g.depth_of.items() if d < g.current_depth]
            for p in fresh:
                idx.add_point(p, old, dirty)
                old.append(p)
        try:
            new = _new_points(idx, g.depth_of, dirty, limits.max_points - len(g))
        except _PointLimit:
            report.limit_hit = MAX_POINTS
            break
        if any(_bits(p) > limits.max_bits for p in new):
            report.limit_hit = MAX_BITS
            break
        report.round_seconds.append(time.perf_counter() - t0)
        if not new:
            report.fixpoint = True
            report.new_counts.append(0)
            break
        g.current_depth += 1
        fresh = list(new)
        for p in fresh:
            g.depth_of[p] = g.current_depth
        report.new_counts.append(len(new))
        log.debug("round %d: %d new points, %d total", g.current_depth, len(new), len(g))
    return g, report
