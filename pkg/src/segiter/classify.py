"""Recognition of the exceptional starting configurations.

A starting set is exceptional when it is a subset of the vertex set of a
dilation-free planar graph; exactly then the iteration stops. Four
structural shapes are tested directly; small sets that match none of them
are settled by running the iteration and watching for a fixpoint.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Union

from .geometry import INTERIOR, Point, as_point, convex_hull, orientation, point_in_convex_polygon
from .iteration import IterationLimits, IterationReport, iterate


class ConfigKind(enum.Enum):
    NON_EXCEPTIONAL = "NonExceptional"
    EXCEPTIONAL_I = "ExceptionalI"
    EXCEPTIONAL_II = "ExceptionalII"
    EXCEPTIONAL_III = "ExceptionalIII"
    EXCEPTIONAL_IV = "ExceptionalIV"
    UNDECIDED_STRUCTURAL = "UndecidedStructural"

    @property
    def exceptional(self) -> bool:
        return self not in (ConfigKind.NON_EXCEPTIONAL,)


@dataclass(frozen=True)
class LineWitness:
    """Points on a common line and the points off it (cases i-iii)."""

    on_line: tuple[Point, ...]
    off_line: tuple[Point, ...]


@dataclass(frozen=True)
class NestedTrianglesWitness:
    """Case iv: each inner pair is collinear with the outer point it maps to."""

    outer: tuple[Point, Point, Point]
    inner: tuple[Point, Point, Point]
    pairing: tuple[tuple[tuple[Point, Point], Point], ...]


@dataclass(frozen=True)
class ProbeWitness:
    limits: IterationLimits
    report: IterationReport
    total_points: int


Witness = Union[LineWitness, NestedTrianglesWitness, ProbeWitness, None]


@dataclass(frozen=True)
class ConfigClass:
    kind: ConfigKind
    witness: Witness = None

    @property
    def exceptional(self) -> bool:
        return self.kind.exceptional


DEFAULT_PROBE = IterationLimits(max_depth=4, max_points=500, max_bits=512)


def _collinear_with(pts: list[Point], p: Point, q: Point) -> list[Point]:
    return [r for r in pts if orientation(p, q, r) == 0]


def _largest_line(pts: list[Point], size: int) -> list[list[Point]]:
    """All distinct lines carrying exactly ``size`` of the points."""
    seen: set[frozenset] = set()
    out = []
    for p, q in combinations(pts, 2):
        on = _collinear_with(pts, p, q)
        key = frozenset(on)
        if len(on) == size and key not in seen:
            seen.add(key)
            out.append(sorted(on))
    return out


def nested_triangles(pts: list[Point]) -> NestedTrianglesWitness | None:
    """Find a case-iv split of six points, if there is one."""
    if len(pts) != 6:
        return None
    pts = sorted(pts)
    for outer in combinations(pts, 3):
        if orientation(*outer) == 0:
            continue
        inner = tuple(p for p in pts if p not in outer)
        if orientation(*inner) == 0:
            continue
        tri = convex_hull(outer)
        if any(point_in_convex_polygon(p, tri) != INTERIOR for p in inner):
            continue
        pairs = [(inner[0], inner[1]), (inner[0], inner[2]), (inner[1], inner[2])]
        for perm in permutations(outer):
            if all(orientation(a, b, o) == 0 for (a, b), o in zip(pairs, perm)):
                return NestedTrianglesWitness(tuple(outer), inner, tuple(zip(pairs, perm)))
    return None


def classify_structural(points: Iterable) -> ConfigClass | None:
    pts = sorted(set(as_point(p) for p in points))
    n = len(pts)
    if n < 2:
        raise ValueError(f"classification needs at least 2 points, got {n}")
    if n == 2 or all(orientation(pts[0], pts[1], r) == 0 for r in pts[2:]):
        return ConfigClass(ConfigKind.EXCEPTIONAL_I, LineWitness(tuple(pts), ()))
    for size, kind in ((n - 1, ConfigKind.EXCEPTIONAL_II), (n - 2, ConfigKind.EXCEPTIONAL_III)):
        if size < 2:
            continue
        for on in _largest_line(pts, size):
            off = tuple(p for p in pts if p not in on)
            if kind is ConfigKind.EXCEPTIONAL_III:
                s1 = orientation(on[0], on[-1], off[0])
                s2 = orientation(on[0], on[-1], off[1])
                if s1 * s2 != -1:
                    continue
            return ConfigClass(kind, LineWitness(tuple(on), off))
    w = nested_triangles(pts)
    if w is not None:
        return ConfigClass(ConfigKind.EXCEPTIONAL_IV, w)
    return None


def classify(points: Iterable, probe_limits: IterationLimits | None = None) -> ConfigClass:
    """Structural tests for cases i-iv, then a fixpoint probe for sets of at most six points."""
    pts = [as_point(p) for p in points]
    found = classify_structural(pts)
    if found is not None:
        return found
    if len(set(pts)) > 6:
        return ConfigClass(ConfigKind.NON_EXCEPTIONAL)
    limits = probe_limits or DEFAULT_PROBE
    g, report = iterate(sorted(set(pts)), limits)
    witness = ProbeWitness(limits, report, len(g))
    if report.fixpoint:
        return ConfigClass(ConfigKind.UNDECIDED_STRUCTURAL, witness)
    return ConfigClass(ConfigKind.NON_EXCEPTIONAL, witness)
