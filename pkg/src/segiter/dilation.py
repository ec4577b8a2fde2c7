"""Dilation of straight-line geometric graphs.

Path lengths are sums of square roots, so the dilation value itself is
evaluated in 50-digit decimal arithmetic. The statement "dilation is exactly
one" is certified separately and exactly: for every vertex pair there must be
a path that runs monotonically along the segment joining the pair.
"""

from __future__ import annotations

import decimal
import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .geometry import Point, Segment, as_point, dot, on_segment, segment_intersection, strictly_between, sub
from .iteration import IterationLimits, iterate

PRECISION = 50


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True)
class GeometricGraph:
    vertices: tuple[Point, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        vs = tuple(as_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate vertices")
        es = []
        for i, j in self.edges:
            if i == j or not (0 <= i < len(vs) and 0 <= j < len(vs)):
                raise ValueError(f"bad edge ({i}, {j})")
            es.append((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(sorted(set(es))))
        self._check_planar()

    def _check_planar(self):
        segs = [Segment(self.vertices[i], self.vertices[j]) for i, j in self.edges]
        for (i, j), s in zip(self.edges, segs):
            for v in self.vertices:
                if strictly_between(v, s.a, s.b):
                    raise ValueError(f"edge ({i}, {j}) passes through vertex {v}")
        for (e1, s1), (e2, s2) in combinations(zip(self.edges, segs), 2):
            x = segment_intersection(s1, s2)
            if x is None:
                continue
            shared = set(e1) & set(e2)
            if not any(self.vertices[k] == x for k in shared):
                raise ValueError(f"edges {e1} and {e2} cross at {x}")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj


@dataclass(frozen=True)
class DilationResult:
    value: decimal.Decimal
    certified: bool
    worst_pair: tuple[int, int] | None


def _length(p: Point, q: Point, ctx: decimal.Context) -> decimal.Decimal:
    dx, dy = p.x - q.x, p.y - q.y
    d2 = dx * dx + dy * dy
    return ctx.divide(decimal.Decimal(d2.numerator), decimal.Decimal(d2.denominator)).sqrt(ctx)


def _shortest_paths(g: GeometricGraph, src: int, ctx) -> list:
    adj = g.adjacency()
    dist = [None] * len(g.vertices)
    dist[src] = decimal.Decimal(0)
    heap = [(dist[src], src)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v in adj[u]:
            nd = ctx.add(d, _length(g.vertices[u], g.vertices[v], ctx))
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def straight_path_exists(g: GeometricGraph, i: int, j: int, adj=None) -> bool:
    """True if some path from i to j advances monotonically along segment ij."""
    adj = adj or g.adjacency()
    u, v = g.vertices[i], g.vertices[j]
    direction = sub(v, u)
    stack, seen = [i], {i}
    while stack:
        k = stack.pop()
        if k == j:
            return True
        pk = g.vertices[k]
        for m in adj[k]:
            pm = g.vertices[m]
            if m not in seen and on_segment(pm, u, v) and dot(sub(pm, pk), direction) > 0:
                seen.add(m)
                stack.append(m)
    return False


def graph_dilation(g: GeometricGraph) -> DilationResult:
    """Maximum over vertex pairs of shortest-path length over Euclidean distance.

    When every pair has a straight path the dilation is exactly one, and the
    value is reported as exactly one rather than as a rounded sum of roots.
    """
    n = len(g.vertices)
    ctx = decimal.Context(prec=PRECISION)
    adj = g.adjacency()
    worst = decimal.Decimal(0)
    worst_pair = None
    certified = True
    for i in range(n):
        dist = _shortest_paths(g, i, ctx)
        if any(d is None for d in dist):
            raise DisconnectedGraphError("graph is disconnected")
        for j in range(i + 1, n):
            ratio = ctx.divide(dist[j], _length(g.vertices[i], g.vertices[j], ctx))
            if worst_pair is None or ratio > worst:
                worst, worst_pair = ratio, (i, j)
            if certified and not straight_path_exists(g, i, j, adj):
                certified = False
    if certified:
        worst = decimal.Decimal(1)
    return DilationResult(worst, certified, worst_pair)


def visibility_graph(points: Sequence) -> GeometricGraph:
    """Join every pair of points whose connecting segment holds no third point.

    On a fixpoint of the iteration this graph is planar and dilation-free.
    """
    vs = sorted(set(as_point(p) for p in points))
    edges = []
    for i, j in combinations(range(len(vs)), 2):
        if not any(strictly_between(r, vs[i], vs[j]) for r in vs):
            edges.append((i, j))
    return GeometricGraph(tuple(vs), tuple(edges))


def exceptional_graph(points: Iterable, limits=None) -> GeometricGraph:
    """The dilation-free planar graph spanned by the finite closure of an exceptional set."""
    g, report = iterate(list(points), limits or IterationLimits(max_depth=6, max_points=500))
    if not report.fixpoint:
        raise ValueError("iteration did not reach a fixpoint; the set is not exceptional")
    return visibility_graph(g.points())
