"""Exact rational geometry kernel.

Coordinates are :class:`fractions.Fraction` values, so every predicate here is
exact. Nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence, Union

Scalar = Fraction
Number = Union[int, Fraction, str]


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def pt(x: Number, y: Number) -> Point:
    """Build a point, coercing both coordinates to ``Fraction``."""
    return Point(Fraction(x), Fraction(y))


def as_point(p) -> Point:
    if isinstance(p, Point) and type(p.x) is Fraction and type(p.y) is Fraction:
        return p
    return pt(p[0], p[1])


def sub(p: Point, q: Point) -> Point:
    return Point(p.x - q.x, p.y - q.y)


def add(p: Point, q: Point) -> Point:
    return Point(p.x + q.x, p.y + q.y)


def scale(p: Point, s: Fraction) -> Point:
    return Point(p.x * s, p.y * s)


def dot(u: Point, v: Point) -> Fraction:
    return u.x * v.x + u.y * v.y


def cross(u: Point, v: Point) -> Fraction:
    return u.x * v.y - u.y * v.x


def dist2(p: Point, q: Point) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (d > 0) - (d < 0)


def collinear(p: Point, q: Point, r: Point) -> bool:
    return orientation(p, q, r) == 0


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True if p lies on the closed segment ab (a may equal b)."""
    if orientation(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def strictly_between(p: Point, a: Point, b: Point) -> bool:
    return p != a and p != b and on_segment(p, a, b)


@dataclass(frozen=True)
class Segment:
    """Closed segment between two distinct points, endpoints kept in sorted order."""

    a: Point
    b: Point

    def __post_init__(self):
        a, b = as_point(self.a), as_point(self.b)
        if a == b:
            raise ValueError(f"degenerate segment: both endpoints are {a}")
        if b < a:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __iter__(self):
        yield self.a
        yield self.b

    def contains(self, p: Point) -> bool:
        return on_segment(p, self.a, self.b)


def homogeneous(p: Point) -> tuple[int, int, int]:
    """Primitive integers (X, Y, W), W > 0, with p = (X/W, Y/W)."""
    w = lcm(p.x.denominator, p.y.denominator)
    return p.x.numerator * (w // p.x.denominator), p.y.numerator * (w // p.y.denominator), w


def line_through(p: Point, q: Point) -> tuple[int, int, int]:
    """Primitive integer coefficients (a, b, c) with a*x + b*y + c = 0 through p and q.

    The sign is fixed so that the first non-zero of (a, b) is positive, which
    makes the triple a canonical key for the line.
    """
    if p == q:
        raise ValueError("a line needs two distinct points")
    return line_through_homogeneous(homogeneous(as_point(p)), homogeneous(as_point(q)))


def line_through_homogeneous(p: tuple[int, int, int], q: tuple[int, int, int]) -> tuple[int, int, int]:
    """``line_through`` for distinct points given as integer (X, Y, W): the cross product."""
    x1, y1, w1 = p
    x2, y2, w2 = q
    a = y1 * w2 - w1 * y2
    b = w1 * x2 - x1 * w2
    c = x1 * y2 - y1 * x2
    g = gcd(a, b, c)
    a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return a, b, c


def line_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Point | None:
    """Intersection of the infinite lines p1p2 and q1q2, or None if parallel."""
    r = sub(p2, p1)
    s = sub(q2, q1)
    den = cross(r, s)
    if den == 0:
        return None
    t = cross(sub(q1, p1), s) / den
    return Point(p1.x + t * r.x, p1.y + t * r.y)


def segment_intersection(s1: Segment, s2: Segment) -> Point | None:
    """The unique common point of two closed segments, if there is exactly one.

    Proper crossings, T-junctions and shared endpoints all count. Disjoint
    segments and collinear overlaps of positive length give ``None``.
    """
    p, p2 = s1.a, s1.b
    q, q2 = s2.a, s2.b
    r = sub(p2, p)
    s = sub(q2, q)
    den = cross(r, s)
    qp = sub(q, p)
    if den == 0:
        if cross(qp, r) != 0:
            return None  # parallel, distinct lines
        # Collinear: the overlap is a singleton only when the segments touch end to end.
        lo = max(p, q)
        hi = min(p2, q2)
        if lo == hi:
            return lo
        return None
    t = cross(qp, s) / den
    u = cross(qp, r) / den
    if 0 <= t <= 1 and 0 <= u <= 1:
        return Point(p.x + t * r.x, p.y + t * r.y)
    return None


# ---------------------------------------------------------------------------
# Convex polygons

EMPTY, POINT, SEGMENT, POLYGON = "empty", "point", "segment", "polygon"

INTERIOR, BOUNDARY, OUTSIDE = "interior", "boundary", "outside"


@dataclass(frozen=True)
class ConvexPolygon:
    """A convex region given by its counterclockwise vertex cycle.

    Zero, one or two vertices stand for the empty set, a point and a segment.
    The cycle is rotated to start at the lexicographically smallest vertex so
    equal regions compare equal.
    """

    vertices: tuple[Point, ...] = ()

    def __post_init__(self):
        vs = tuple(as_point(v) for v in self.vertices)
        if vs:
            k = vs.index(min(vs))
            vs = vs[k:] + vs[:k]
        object.__setattr__(self, "vertices", vs)
        if len(vs) >= 3:
            n = len(vs)
            for i in range(n):
                if orientation(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) <= 0:
                    raise ValueError("polygon vertices are not in strictly convex counterclockwise order")
        elif len(vs) == 2 and vs[0] == vs[1]:
            raise ValueError("segment endpoints coincide")

    @property
    def kind(self) -> str:
        return (EMPTY, POINT, SEGMENT)[len(self.vertices)] if len(self.vertices) < 3 else POLYGON

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        if len(vs) < 2:
            return []
        if len(vs) == 2:
            return [(vs[0], vs[1])]
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def bbox(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        if not self.vertices:
            raise ValueError("empty region has no bounding box")
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def area2(self) -> Fraction:
        """Twice the signed area."""
        vs = self.vertices
        if len(vs) < 3:
            return Fraction(0)
        return sum((cross(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))), Fraction(0))

    def contains(self, p: Point) -> bool:
        return point_in_convex_polygon(p, self) != OUTSIDE


def convex_hull(points: Iterable) -> ConvexPolygon:
    """Convex hull by Andrew's monotone chain; points on hull edges are dropped."""
    pts = sorted(set(as_point(p) for p in points))
    if not pts:
        raise ValueError("convex hull of an empty point set")
    if len(pts) <= 2:
        return ConvexPolygon(tuple(pts))

    def chain(seq: Sequence[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2:
        # all collinear: lower chain is just the two extremes
        return ConvexPolygon((pts[0], pts[-1]))
    return ConvexPolygon(tuple(hull))


def point_in_convex_polygon(p: Point, c: ConvexPolygon) -> str:
    """Classify p as ``interior``, ``boundary`` or ``outside`` of c.

    Degenerate regions (point, segment) have no interior; their points are
    reported as boundary.
    """
    p = as_point(p)
    vs = c.vertices
    if not vs:
        raise ValueError("containment test against an empty region")
    if len(vs) == 1:
        return BOUNDARY if p == vs[0] else OUTSIDE
    if len(vs) == 2:
        return BOUNDARY if on_segment(p, vs[0], vs[1]) else OUTSIDE
    on_edge = False
    n = len(vs)
    for i in range(n):
        o = orientation(vs[i], vs[(i + 1) % n], p)
        if o < 0:
            return OUTSIDE
        if o == 0:
            on_edge = True
    return BOUNDARY if on_edge else INTERIOR


# Half-plane a*x + b*y + c >= 0
HalfPlane = tuple[Fraction, Fraction, Fraction]


def _edge_halfplane(u: Point, w: Point) -> HalfPlane:
    # points left of (or on) the directed line u -> w
    a = u.y - w.y
    b = w.x - u.x
    return a, b, -(a * u.x + b * u.y)


def halfplanes(c: ConvexPolygon) -> list[HalfPlane]:
    """Closed half-planes whose intersection is exactly c (c non-empty)."""
    vs = c.vertices
    if not vs:
        raise ValueError("empty region has no half-plane description")
    one, zero = Fraction(1), Fraction(0)
    if len(vs) == 1:
        p = vs[0]
        return [(one, zero, -p.x), (-one, zero, p.x), (zero, one, -p.y), (zero, -one, p.y)]
    if len(vs) == 2:
        p, q = vs
        d = sub(q, p)
        return [
            _edge_halfplane(p, q),
            _edge_halfplane(q, p),
            (d.x, d.y, -dot(d, p)),       # (x - p) . d >= 0
            (-d.x, -d.y, dot(d, q)),      # (q - x) . d >= 0
        ]
    return [_edge_halfplane(u, w) for u, w in c.edges()]


def integer_halfplanes(c: ConvexPolygon) -> list[tuple[int, int, int]]:
    """``halfplanes(c)`` scaled to integer coefficients."""
    out = []
    for h in halfplanes(c):
        m = lcm(*(v.denominator for v in h))
        out.append(tuple(int(v * m) for v in h))
    return out


def points_outside(points: Iterable[Point], c: ConvexPolygon) -> list[Point]:
    """The points not in the closed region c, in input order.

    Integer arithmetic throughout: with x = xn/xd and y = yn/yd the test
    a*x + b*y + c >= 0 becomes a*xn*yd + b*yn*xd + c*xd*yd >= 0.
    """
    hs = integer_halfplanes(c)
    out = []
    for p in points:
        xn, xd = p.x.numerator, p.x.denominator
        yn, yd = p.y.numerator, p.y.denominator
        for a, b, k in hs:
            if a * xn * yd + b * yn * xd + k * xd * yd < 0:
                out.append(p)
                break
    return out


def _clip(poly: list[Point], h: HalfPlane) -> list[Point]:
    a, b, c = h
    out: list[Point] = []
    n = len(poly)
    for i in range(n):
        p = poly[i]
        q = poly[(i + 1) % n]
        fp = a * p.x + b * p.y + c
        fq = a * q.x + b * q.y + c
        if fp >= 0:
            out.append(p)
        if (fp > 0 and fq < 0) or (fp < 0 and fq > 0):
            t = fp / (fp - fq)
            out.append(Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)))
    return out


def clip_to_halfplanes(c: ConvexPolygon, planes: Iterable[HalfPlane]) -> ConvexPolygon:
    """Intersect a convex region with closed half-planes (Sutherland-Hodgman)."""
    poly = list(c.vertices)
    for h in planes:
        if not poly:
            break
        poly = _clip(poly, h)
    if not poly:
        return ConvexPolygon()
    return convex_hull(poly)


def intersect_convex_polygons(a: ConvexPolygon, b: ConvexPolygon) -> ConvexPolygon:
    """Exact intersection of two convex regions of any degeneracy."""
    if a.is_empty or b.is_empty:
        return ConvexPolygon()
    return clip_to_halfplanes(a, halfplanes(b))
