"""Named starting configurations used in examples and tests."""

from fractions import Fraction as F

from .geometry import pt

UNIT_SQUARE = [pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]

TRIANGLE = [pt(0, 0), pt(1, 0), pt(0, 1)]

# Rational stand-in for the regular pentagon of circumradius 1 (two-digit
# cosines and sines). Convex position, no three points collinear.
PENTAGON = [
    pt(1, 0),
    pt(F(31, 100), F(95, 100)),
    pt(F(-81, 100), F(59, 100)),
    pt(F(-81, 100), F(-59, 100)),
    pt(F(31, 100), F(-95, 100)),
]

# Inner triangle (2,2), (1,1), (2/3,8/3) nested in (0,0), (6,0), (0,6); each
# inner pair is collinear with one outer vertex.
NESTED_TRIANGLES = [pt(0, 0), pt(6, 0), pt(0, 6), pt(2, 2), pt(1, 1), pt(F(2, 3), F(8, 3))]

MIDPOINT_TRIANGLE = (pt(0, 0), pt(4, 0), pt(0, 4))
