import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_fixpoint, naive_next_generation
from segiter.candidate import candidate
from segiter.fixtures import PENTAGON, UNIT_SQUARE
from segiter.geometry import OUTSIDE, convex_hull, point_in_convex_polygon, pt
from segiter.iteration import (
    MAX_BITS,
    MAX_DEPTH,
    MAX_POINTS,
    GenerationSet,
    IterationLimits,
    iterate,
    next_generation,
)

small = st.integers(min_value=-3, max_value=3)
point_sets = st.lists(st.builds(pt, small, small), min_size=2, max_size=6, unique=True)


def test_square_first_round():
    assert next_generation(GenerationSet.start(UNIT_SQUARE)) == {pt(F(1, 2), F(1, 2))}


def test_collinear_has_nothing_new():
    assert next_generation(GenerationSet.start([pt(i, 2 * i) for i in range(5)])) == set()


def test_pentagon_first_round_is_five_diagonal_crossings():
    new = next_generation(GenerationSet.start(PENTAGON))
    assert len(new) == 5
    assert new == naive_next_generation(PENTAGON)


def test_next_generation_needs_two_points():
    with pytest.raises(ValueError):
        next_generation(GenerationSet.start([pt(0, 0)]))


def test_square_fixpoint():
    g, report = iterate(UNIT_SQUARE)
    assert report.fixpoint and report.limit_hit is None
    assert report.new_counts == [1, 0]
    assert g.counts() == [4, 1]
    assert g.depth_of[pt(F(1, 2), F(1, 2))] == 1


def test_pentagon_counts_frozen():
    g, report = iterate(PENTAGON, IterationLimits(max_depth=2))
    assert g.counts() == [5, 5, 29]
    assert report.limit_hit == MAX_DEPTH and not report.fixpoint


@settings(max_examples=40, deadline=None)
@given(point_sets)
def test_matches_naive_oracle(pts):
    g, report = iterate(pts, IterationLimits(max_depth=2, max_points=5000))
    history = naive_fixpoint(pts, 2)
    assert g.points() == history[-1]
    for depth, cumulative in enumerate(history):
        assert g.points(depth) == cumulative
    assert report.fixpoint == (len(history) <= 2 and g.current_depth < 2)


@settings(max_examples=25, deadline=None)
@given(point_sets, st.randoms(use_true_random=False))
def test_order_independent(pts, rnd):
    shuffled = list(pts)
    rnd.shuffle(shuffled)
    limits = IterationLimits(max_depth=2)
    assert iterate(pts, limits)[0] == iterate(shuffled, limits)[0]


@settings(max_examples=25, deadline=None)
@given(point_sets)
def test_generated_points_stay_in_hull_and_candidate(pts):
    g, _ = iterate(pts, IterationLimits(max_depth=2))
    hull = convex_hull(pts)
    generated = [p for p, d in g.depth_of.items() if d >= 1]
    assert all(point_in_convex_polygon(p, hull) != OUTSIDE for p in generated)
    if len(pts) >= 3 and generated:
        region = candidate(pts).region
        assert all(point_in_convex_polygon(p, region) != OUTSIDE for p in generated)


def test_monotone_and_resumable():
    g1, _ = iterate(PENTAGON, IterationLimits(max_depth=1))
    g2, _ = iterate(PENTAGON, IterationLimits(max_depth=2))
    assert g1.points() < g2.points()
    assert g2.points(1) == g1.points()
    # one more round by hand agrees with the engine
    assert g1.points() | next_generation(g1) == g2.points()


def test_fixpoint_is_permanent():
    g, report = iterate(UNIT_SQUARE, IterationLimits(max_depth=10))
    assert report.fixpoint and report.rounds == 2
    assert next_generation(g) == set()


def test_point_limit_discards_round():
    g, report = iterate(PENTAGON, IterationLimits(max_depth=3, max_points=30))
    assert report.limit_hit == MAX_POINTS
    assert g.counts() == [5, 5]
    assert len(g) <= 30


def test_bit_limit_discards_round():
    g, report = iterate(PENTAGON, IterationLimits(max_depth=3, max_bits=12))
    assert report.limit_hit == MAX_BITS
    assert all(max(p.x.denominator, p.y.denominator).bit_length() <= 12 for p in g.points())


def test_start_over_point_limit():
    g, report = iterate(PENTAGON, IterationLimits(max_points=3))
    assert report.limit_hit == MAX_POINTS and len(g) == 5 and report.rounds == 0


@pytest.mark.parametrize("bad", [[], [pt(0, 0)], [pt(0, 0), pt(0, 0), pt(1, 1)]])
def test_bad_input(bad):
    with pytest.raises(ValueError):
        iterate(bad)


@pytest.mark.parametrize("field", ["max_depth", "max_points", "max_bits"])
def test_limits_must_be_positive(field):
    with pytest.raises(ValueError):
        IterationLimits(**{field: 0})


def test_random_rational_sets_against_oracle():
    rng = random.Random(7)
    for _ in range(10):
        pts = {pt(F(rng.randint(-9, 9), rng.randint(1, 4)), F(rng.randint(-9, 9), rng.randint(1, 4)))
               for _ in range(5)}
        g, _ = iterate(pts, IterationLimits(max_depth=1))
        assert g.points() == set(pts) | naive_next_generation(pts)
