from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from segiter.constructible import MidpointConfig, farey, restricted_iteration
from segiter.density import (
    DegenerateCandidateError,
    ExceptionalConfigurationError,
    coverage_radius,
    density_profile,
    grid_samples,
    largest_gap,
)
from segiter.fixtures import MIDPOINT_TRIANGLE, PENTAGON, TRIANGLE, UNIT_SQUARE
from segiter.geometry import convex_hull, dist2, pt
from segiter.iteration import IterationLimits

SQUARE = convex_hull(UNIT_SQUARE)


def brute_radius_sq(points, samples):
    return max(min(dist2(s, p) for p in points) for s in samples)


def test_square_corners_centre():
    rep = coverage_radius(UNIT_SQUARE, SQUARE, 1)
    assert rep.samples == 1
    assert rep.radius_sq == F(1, 2) and rep.worst_sample == pt(F(1, 2), F(1, 2))


def test_grid_is_cell_centred():
    samples = grid_samples(SQUARE, 2)
    assert samples == [pt(F(1, 4), F(1, 4)), pt(F(3, 4), F(1, 4)), pt(F(1, 4), F(3, 4)), pt(F(3, 4), F(3, 4))]
    tri = convex_hull(TRIANGLE)
    assert len(grid_samples(tri, 4)) == 10     # cells on or below the diagonal


def test_superset_never_increases_radius():
    base = coverage_radius(UNIT_SQUARE, SQUARE, 7)
    more = coverage_radius(UNIT_SQUARE + [pt(F(1, 2), F(1, 2))], SQUARE, 7)
    assert more.radius_sq <= base.radius_sq


coords = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.builds(pt, coords, coords), min_size=1, max_size=15), st.integers(1, 6))
def test_matches_brute_force(pts, n):
    rep = coverage_radius(pts, SQUARE, n)
    samples = grid_samples(SQUARE, n)
    assert rep.radius_sq == brute_radius_sq(pts, samples)
    assert min(dist2(rep.worst_sample, p) for p in pts) == rep.radius_sq


def test_coverage_errors():
    with pytest.raises(ValueError):
        coverage_radius([], SQUARE, 3)
    with pytest.raises(DegenerateCandidateError):
        coverage_radius(UNIT_SQUARE, convex_hull([pt(0, 0), pt(1, 1)]), 3)
    with pytest.raises(ValueError):
        grid_samples(SQUARE, 0)


def test_gates():
    with pytest.raises(ExceptionalConfigurationError, match="exceptional configuration"):
        density_profile(UNIT_SQUARE)
    with pytest.raises(DegenerateCandidateError, match="degenerate candidate"):
        density_profile(TRIANGLE)


def test_pentagon_profile_two_depths():
    reports = density_profile(PENTAGON, IterationLimits(max_depth=2), grid_n=10)
    assert [r.depth for r in reports] == [1, 2]
    assert reports[1].radius_sq < reports[0].radius_sq
    assert reports[0].points == 10 and reports[1].points == 39


def test_largest_gap():
    assert largest_gap([]) == 1
    assert largest_gap([F(1, 2)]) == F(1, 2)
    for n in (3, 8, 15):
        assert largest_gap(farey(n)) == F(1, n)


def test_edge_gap_shrinks_with_depth():
    run = restricted_iteration(MidpointConfig(*MIDPOINT_TRIANGLE), 8)
    gaps = [largest_gap(run.ratios("DE", d)) for d in range(0, 9)]
    assert all(a >= b for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < gaps[0]
