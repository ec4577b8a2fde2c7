"""Exact projective tools: collapsing a line to infinity, the cevian-to-midpoint
reduction, converging point sequences between two rays, and visibility cones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import (
    OUTSIDE,
    ConvexPolygon,
    Point,
    Segment,
    add,
    as_point,
    collinear,
    convex_hull,
    dist2,
    line_through,
    midpoint,
    orientation,
    point_in_convex_polygon,
    segment_intersection,
    strictly_between,
    sub,
)

Matrix = tuple[tuple[Fraction, Fraction, Fraction], ...]


class PointAtInfinity(ValueError):
    pass


def _det3(m: Matrix) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@dataclass(frozen=True)
class Homography:
    matrix: Matrix

    def __post_init__(self):
        m = tuple(tuple(Fraction(v) for v in row) for row in self.matrix)
        if len(m) != 3 or any(len(row) != 3 for row in m):
            raise ValueError("homography needs a 3x3 matrix")
        if _det3(m) == 0:
            raise ValueError("singular homography")
        object.__setattr__(self, "matrix", m)

    @property
    def determinant(self) -> Fraction:
        return _det3(self.matrix)

    def __call__(self, p: Point) -> Point:
        p = as_point(p)
        x, y, w = (r[0] * p.x + r[1] * p.y + r[2] for r in self.matrix)
        if w == 0:
            raise PointAtInfinity(f"point maps to infinity: {p}")
        return Point(x / w, y / w)


def collapse_line_to_infinity(line: Sequence) -> Homography:
    """Homography whose third row is the line a*x + b*y + c, sending that line to infinity.

    With c != 0 this is [x : y : ax + by + c]. Lines through the origin would
    make that matrix singular, so there the row of the vanishing coordinate
    is swapped for the constant row: [x : 1 : ax + by] when b != 0, else
    [1 : y : ax].
    """
    a, b, c = (Fraction(v) for v in line)
    if a == 0 and b == 0:
        raise ValueError("degenerate line: a and b are both zero")
    if c != 0:
        rows = ((1, 0, 0), (0, 1, 0), (a, b, c))
    elif b != 0:
        rows = ((1, 0, 0), (0, 0, 1), (a, b, c))
    else:
        rows = ((0, 0, 1), (0, 1, 0), (a, b, c))
    return Homography(rows)


def collapse_through(p: Point, q: Point) -> Homography:
    """Collapse the line through p and q, using its primitive integer equation."""
    return collapse_line_to_infinity(line_through(as_point(p), as_point(q)))


@dataclass(frozen=True)
class MidpointReduction:
    f: Point                        # BE meet CD
    g: Point                        # AF meet DE
    images: dict[str, Point]        # A', D', E', F', G'
    residual: Point                 # F' - (D' + E' - A')

    @property
    def passed(self) -> bool:
        return self.residual == (0, 0) and self.images["G"] == midpoint(self.images["D"], self.images["E"])


def verify_midpoint_reduction(a: Point, b: Point, c: Point, d: Point, e: Point) -> MidpointReduction:
    """Send line BC to infinity and check that A'D'F'E' is a parallelogram."""
    a, b, c, d, e = (as_point(p) for p in (a, b, c, d, e))
    if collinear(a, b, c):
        raise ValueError("A, B, C are collinear")
    if not strictly_between(d, a, b):
        raise ValueError("D must lie strictly inside segment AB")
    if not strictly_between(e, a, c):
        raise ValueError("E must lie strictly inside segment AC")
    f = segment_intersection(Segment(b, e), Segment(c, d))
    g = segment_intersection(Segment(a, f), Segment(d, e))
    h = collapse_through(b, c)
    images = {name: h(p) for name, p in zip("ADEFG", (a, d, e, f, g))}
    expected = sub(add(images["D"], images["E"]), images["A"])
    return MidpointReduction(f, g, images, sub(images["F"], expected))


# ---------------------------------------------------------------------------
# Converging sequences


@dataclass(frozen=True)
class Ray:
    origin: Point
    direction: Point

    def __post_init__(self):
        object.__setattr__(self, "origin", as_point(self.origin))
        object.__setattr__(self, "direction", as_point(self.direction))
        if self.direction == (0, 0):
            raise ValueError("ray direction is zero")

    def contains(self, p: Point) -> bool:
        v = sub(as_point(p), self.origin)
        d = self.direction
        return v.x * d.y - v.y * d.x == 0 and v.x * d.x + v.y * d.y >= 0


class SequenceError(ValueError):
    def __init__(self, index: int, message: str):
        super().__init__(f"step {index}: {message}")
        self.index = index


def _segment_meets_ray(p: Point, q: Point, ray: Ray) -> Point | None:
    """Single common point of segment pq and the ray, if any."""
    o, d = ray.origin, ray.direction
    r = sub(q, p)
    den = r.x * d.y - r.y * d.x
    if den == 0:
        return None
    op = sub(o, p)
    s = (op.x * d.y - op.y * d.x) / den       # position on pq
    t = (op.x * r.y - op.y * r.x) / den       # position on the ray
    if 0 <= s <= 1 and t >= 0:
        return Point(p.x + s * r.x, p.y + s * r.y)
    return None


def convergence_sequence(l: Point, m: Point, n: Point, a: Ray, b: Ray, p0: Point,
                         max_iter: int, tol2: Fraction | None = None) -> list[tuple[Point, Point]]:
    """Iterate Q_i = P_iN meet b and P_{i+1} = Q_iL meet a.

    Returns the pairs (P_i, Q_i). Stops after ``max_iter`` pairs, or earlier
    once |P_i M|^2 and |Q_i M|^2 both drop below ``tol2``.
    """
    l, m, n, p = (as_point(x) for x in (l, m, n, p0))
    if not a.contains(p):
        raise SequenceError(0, "P0 is not on ray a")
    out: list[tuple[Point, Point]] = []
    for i in range(max_iter):
        q = m if p == m else _segment_meets_ray(p, n, b)
        if q is None:
            raise SequenceError(i, "segment P_i N misses ray b")
        out.append((p, q))
        if tol2 is not None and dist2(p, m) < tol2 and dist2(q, m) < tol2:
            break
        nxt = m if q == m else _segment_meets_ray(q, l, a)
        if nxt is None:
            raise SequenceError(i, "segment Q_i L misses ray a")
        p = nxt
    return out


# ---------------------------------------------------------------------------
# Visibility cones


@dataclass(frozen=True)
class VisibilityCone:
    apex: Point
    tangent_vertices: tuple[Point, Point]
    region: ConvexPolygon


def visibility_tangents(p: Point, c: ConvexPolygon) -> VisibilityCone:
    """Tangent vertices of c seen from p and the closed cone between them.

    The first tangent vertex has every vertex of c on or left of the ray from
    p through it, the second on or right. Along a tangent carrying two
    vertices the one nearer p is used.
    """
    p = as_point(p)
    vs = c.vertices
    if not vs:
        raise ValueError("empty polygon")
    if point_in_convex_polygon(p, c) != OUTSIDE:
        raise ValueError(f"apex {p} is not strictly outside the polygon")

    def tangent(sign: int) -> Point:
        cands = [v for v in vs if all(sign * orientation(p, v, w) >= 0 for w in vs)]
        return min(cands, key=lambda v: dist2(p, v))

    right, left = tangent(+1), tangent(-1)
    if len(vs) >= 3:
        visible = set()
        for u, w in c.edges():
            if orientation(u, w, p) < 0:
                visible.update((u, w))
    else:
        visible = set(vs)
    region = convex_hull({p, right, left} | visible)
    return VisibilityCone(p, (right, left), region)


def on_tangent_line(p: Point, t: Point, c: ConvexPolygon) -> bool:
    """Every vertex of c lies on one closed side of line pt."""
    signs = {orientation(p, t, v) for v in c.vertices} - {0}
    return len(signs) <= 1

