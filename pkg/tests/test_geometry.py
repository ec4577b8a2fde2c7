from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from segiter.geometry import (
    BOUNDARY,
    INTERIOR,
    OUTSIDE,
    ConvexPolygon,
    Segment,
    convex_hull,
    intersect_convex_polygons,
    line_through,
    on_segment,
    orientation,
    point_in_convex_polygon,
    points_outside,
    pt,
    segment_intersection,
)
from segiter.fixtures import PENTAGON, UNIT_SQUARE

coords = st.fractions(min_value=-4, max_value=4, max_denominator=6)
points = st.builds(pt, coords, coords)


def square(x0=0, y0=0, size=1):
    return convex_hull([pt(x0, y0), pt(x0 + size, y0), pt(x0 + size, y0 + size), pt(x0, y0 + size)])


@pytest.mark.parametrize("p, q, r, expected", [
    ((0, 0), (1, 0), (0, 1), 1),
    ((0, 0), (1, 1), (2, 2), 0),
    ((0, 0), (1, 0), (2, -1), -1),
])
def test_orientation_examples(p, q, r, expected):
    assert orientation(pt(*p), pt(*q), pt(*r)) == expected


@given(points, points, points)
def test_orientation_antisymmetric(p, q, r):
    o = orientation(p, q, r)
    assert orientation(p, r, q) == -o
    assert orientation(q, p, r) == -o
    assert orientation(r, q, p) == -o
    assert orientation(q, r, p) == o


def test_segment_is_unordered():
    assert Segment(pt(1, 0), pt(0, 0)) == Segment(pt(0, 0), pt(1, 0))
    with pytest.raises(ValueError):
        Segment(pt(1, 1), pt(1, 1))


@pytest.mark.parametrize("s1, s2, expected", [
    (((0, 0), (2, 2)), ((0, 2), (2, 0)), (1, 1)),
    (((0, 0), (2, 0)), ((1, 0), (3, 0)), None),
    (((0, 0), (1, 0)), ((0, 0), (0, 1)), (0, 0)),
    (((0, 0), (1, 0)), ((2, 1), (3, 1)), None),
    (((0, 0), (1, 0)), ((1, 0), (3, 0)), (1, 0)),        # collinear, touching end to end
    (((0, 0), (2, 0)), ((1, 0), (1, 5)), (1, 0)),        # T-junction
    (((0, 0), (1, 0)), ((0, 1), (1, 1)), None),          # parallel
])
def test_segment_intersection_examples(s1, s2, expected):
    a = Segment(pt(*s1[0]), pt(*s1[1]))
    b = Segment(pt(*s2[0]), pt(*s2[1]))
    assert segment_intersection(a, b) == (pt(*expected) if expected else None)


@given(points, points, points, points)
def test_segment_intersection_symmetric_and_on_both(a, b, c, d):
    if a == b or c == d:
        return
    s1, s2 = Segment(a, b), Segment(c, d)
    x = segment_intersection(s1, s2)
    assert x == segment_intersection(s2, s1)
    if x is not None:
        assert on_segment(x, a, b) and on_segment(x, c, d)


def test_line_through_is_canonical():
    assert line_through(pt(4, 0), pt(0, 4)) == (1, 1, -4)
    assert line_through(pt(0, 4), pt(4, 0)) == (1, 1, -4)
    assert line_through(pt(-1, 0), pt(1, 0)) == (0, 1, 0)


def test_hull_drops_interior_point():
    hull = convex_hull(UNIT_SQUARE + [pt(F(1, 2), F(1, 2))])
    assert set(hull.vertices) == set(UNIT_SQUARE)
    assert hull.kind == "polygon"


def test_hull_collinear_is_segment():
    hull = convex_hull([pt(0, 0), pt(1, 1), pt(2, 2)])
    assert hull.kind == "segment"
    assert hull.vertices == (pt(0, 0), pt(2, 2))


def test_hull_single_point_and_empty():
    assert convex_hull([pt(3, 3), pt(3, 3)]).kind == "point"
    with pytest.raises(ValueError):
        convex_hull([])


def test_hull_pentagon_keeps_all():
    assert set(convex_hull(PENTAGON).vertices) == set(PENTAGON)


def test_hull_excludes_points_on_edges():
    hull = convex_hull(UNIT_SQUARE + [pt(F(1, 2), 0)])
    assert len(hull) == 4


@given(st.lists(points, min_size=1, max_size=12))
def test_hull_idempotent(pts):
    h = convex_hull(pts)
    assert convex_hull(h.vertices) == h
    for p in pts:
        assert point_in_convex_polygon(p, h) != OUTSIDE


def test_polygon_rejects_nonconvex_order():
    with pytest.raises(ValueError):
        ConvexPolygon((pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)))   # clockwise
    with pytest.raises(ValueError):
        ConvexPolygon((pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1)))   # collinear triple


def test_intersect_shifted_squares():
    got = intersect_convex_polygons(square(), square(F(1, 2), F(1, 2)))
    assert got == square(F(1, 2), F(1, 2), F(1, 2))


def test_intersect_triangles_share_an_edge():
    a = convex_hull([pt(0, 0), pt(1, 0), pt(0, 1)])
    b = convex_hull([pt(1, 0), pt(1, 1), pt(0, 1)])
    got = intersect_convex_polygons(a, b)
    assert got.kind == "segment"
    assert set(got.vertices) == {pt(1, 0), pt(0, 1)}


def test_intersect_disjoint_is_empty():
    a = convex_hull([pt(0, 0), pt(1, 0), pt(0, 1)])
    b = convex_hull([pt(5, 5), pt(6, 5), pt(5, 6)])
    assert intersect_convex_polygons(a, b).kind == "empty"


def test_intersect_degenerate_inputs():
    sq = square()
    diag = convex_hull([pt(-1, -1), pt(2, 2)])
    assert intersect_convex_polygons(sq, diag) == convex_hull([pt(0, 0), pt(1, 1)])
    assert intersect_convex_polygons(diag, sq) == convex_hull([pt(0, 0), pt(1, 1)])
    corner = convex_hull([pt(1, 1)])
    assert intersect_convex_polygons(sq, corner) == corner
    assert intersect_convex_polygons(corner, convex_hull([pt(2, 2)])).is_empty
    crossing = convex_hull([pt(0, 2), pt(2, 0)])
    assert intersect_convex_polygons(diag, crossing) == convex_hull([pt(1, 1)])
    assert intersect_convex_polygons(sq, ConvexPolygon()).is_empty


@settings(max_examples=60)
@given(st.lists(points, min_size=1, max_size=7), st.lists(points, min_size=1, max_size=7))
def test_intersection_commutes_and_is_contained(p1, p2):
    a, b = convex_hull(p1), convex_hull(p2)
    ab = intersect_convex_polygons(a, b)
    assert ab == intersect_convex_polygons(b, a)
    for v in ab.vertices:
        assert point_in_convex_polygon(v, a) != OUTSIDE
        assert point_in_convex_polygon(v, b) != OUTSIDE


@settings(max_examples=60)
@given(st.lists(points, min_size=3, max_size=7), st.lists(points, min_size=3, max_size=7), points)
def test_intersection_membership_matches_both(p1, p2, q):
    a, b = convex_hull(p1), convex_hull(p2)
    ab = intersect_convex_polygons(a, b)
    in_both = point_in_convex_polygon(q, a) != OUTSIDE and point_in_convex_polygon(q, b) != OUTSIDE
    assert (not ab.is_empty and point_in_convex_polygon(q, ab) != OUTSIDE) == in_both


@pytest.mark.parametrize("p, expected", [
    ((F(1, 2), F(1, 2)), INTERIOR),
    ((0, 0), BOUNDARY),
    ((F(1, 2), 0), BOUNDARY),
    ((2, 2), OUTSIDE),
])
def test_point_in_square(p, expected):
    assert point_in_convex_polygon(pt(*p), square()) == expected


def test_point_in_empty_raises():
    with pytest.raises(ValueError):
        point_in_convex_polygon(pt(0, 0), ConvexPolygon())


@settings(max_examples=60)
@given(st.lists(points, min_size=1, max_size=6), st.lists(points, max_size=10))
def test_points_outside_matches_classifier(hull_pts, probes):
    region = convex_hull(hull_pts)
    expected = [p for p in probes if point_in_convex_polygon(p, region) == OUTSIDE]
    assert points_outside(probes, region) == expected
