"""Constructible fractions and the restricted iteration on the midpoint triangle.

Starting from A, B, C and the edge midpoints D (of AB), E (of BC) and F (of
AC), the restricted process only joins points on the boundary of DEF to the
outer vertices and keeps where those segments meet the boundary. The ratios
it produces along an edge are closed under ``mirror`` (k/l -> 1 - k/l) and
``step`` (k/l -> k/(k+l)), and that closure is the full Farey sequence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .geometry import Point, Segment, as_point, collinear, dist2, dot, midpoint, segment_intersection, sub

MIRROR, STEP = "mirror", "step"
BASE = (Fraction(0), Fraction(1))


def mirror(f: Fraction) -> Fraction:
    return 1 - f


def step(f: Fraction) -> Fraction:
    k, l = f.numerator, f.denominator
    return Fraction(k, k + l)


RULES = {MIRROR: mirror, STEP: step}


@dataclass(frozen=True)
class DerivationTrace:
    target: Fraction
    steps: tuple[tuple[str, Fraction], ...]   # (rule, input); the first input is 0 or 1

    def replay(self) -> Fraction:
        if not self.steps:
            if self.target not in BASE:
                raise ValueError(f"{self.target} is not a base fraction")
            return self.target
        current = self.steps[0][1]
        if current not in BASE:
            raise ValueError(f"trace starts from {current}, not from 0 or 1")
        for rule, arg in self.steps:
            if arg != current:
                raise ValueError(f"trace breaks at {rule}({arg}), expected input {current}")
            current = RULES[rule](arg)
        return current


def closure(max_denominator: int) -> dict[Fraction, DerivationTrace]:
    """Closure of {0, 1} under mirror and step, keeping denominators <= max_denominator.

    Breadth-first, so each trace is a shortest derivation.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be at least 1")
    traces = {f: DerivationTrace(f, ()) for f in BASE}
    queue = deque(sorted(BASE))
    while queue:
        f = queue.popleft()
        for rule in (MIRROR, STEP):
            g = RULES[rule](f)
            if g.denominator > max_denominator or g in traces:
                continue
            traces[g] = DerivationTrace(g, traces[f].steps + ((rule, f),))
            queue.append(g)
    return traces


def farey(n: int) -> list[Fraction]:
    """Farey sequence F_n by direct enumeration."""
    return sorted({Fraction(k, l) for l in range(1, n + 1) for k in range(l + 1) if gcd(k, l) == 1})


def fraction_to_edge_point(d: Point, e: Point, f: Fraction) -> Point:
    """The point H on DE with |EH| / |DE| = f."""
    d, e = as_point(d), as_point(e)
    if d == e:
        raise ValueError("edge endpoints coincide")
    f = Fraction(f)
    return Point(e.x + f * (d.x - e.x), e.y + f * (d.y - e.y))


def edge_ratio(p: Point, q: Point, h: Point) -> Fraction:
    """|PH| / |PQ| for h on the line PQ, by projection (no square roots)."""
    v = sub(q, p)
    return dot(sub(h, p), v) / dot(v, v)


@dataclass(frozen=True)
class MidpointConfig:
    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, as_point(getattr(self, name)))
        if collinear(self.a, self.b, self.c):
            raise ValueError("A, B, C are collinear")

    @property
    def d(self) -> Point:
        return midpoint(self.a, self.b)

    @property
    def e(self) -> Point:
        return midpoint(self.b, self.c)

    @property
    def f(self) -> Point:
        return midpoint(self.a, self.c)

    def edges(self) -> dict[str, tuple[Point, Point]]:
        """Edges of the inner triangle as (P, Q), ratios measured as |PH| / |PQ|."""
        d, e, f = self.d, self.e, self.f
        return {"DE": (e, d), "EF": (f, e), "FD": (d, f)}


@dataclass
class RestrictedRun:
    config: MidpointConfig
    depth: int
    point_depth: dict[Point, int]
    first_depth: dict[str, dict[Fraction, int]] = field(default_factory=dict)

    def ratios(self, edge: str, depth: int | None = None) -> set[Fraction]:
        depth = self.depth if depth is None else depth
        return {f for f, d in self.first_depth[edge].items() if d <= depth}

    def counts(self) -> list[int]:
        out = [0] * (self.depth + 1)
        for d in self.point_depth.values():
            out[d] += 1
        return out


def restricted_iteration(cfg: MidpointConfig, depth: int) -> RestrictedRun:
    if depth <= 0:
        raise ValueError("depth must be positive")
    edges = cfg.edges()
    edge_segs = {name: Segment(p, q) for name, (p, q) in edges.items()}
    outer = (cfg.a, cfg.b, cfg.c)
    known = {cfg.d: 0, cfg.e: 0, cfg.f: 0}
    frontier = sorted(known)
    for level in range(1, depth + 1):
        found = set()
        for p in frontier:
            for q in outer:
                ray = Segment(p, q)
                for seg in edge_segs.values():
                    x = segment_intersection(ray, seg)
                    if x is not None and x not in known:
                        found.add(x)
        for x in found:
            known[x] = level
        frontier = sorted(found)
    run = RestrictedRun(cfg, depth, known)
    for name, (p, q) in edges.items():
        seg = edge_segs[name]
        run.first_depth[name] = {edge_ratio(p, q, x): d for x, d in known.items() if seg.contains(x)}
    return run


def step_construction(cfg: MidpointConfig, f: Fraction) -> tuple[Point, Point]:
    """G on EF with |EG|/|EF| = f, and H = BG meet DE (then |EH|/|DE| = k/(k+l))."""
    e, fpt = cfg.e, cfg.f
    g = fraction_to_edge_point(fpt, e, f)
    h = segment_intersection(Segment(cfg.b, g), Segment(cfg.d, e)) if g != cfg.b else None
    if h is None:
        raise ValueError("BG does not meet DE in a single point")
    return g, h


def squared_ratio(p: Point, q: Point, h: Point) -> Fraction:
    """|PH|^2 / |PQ|^2."""
    return dist2(p, h) / dist2(p, q)
