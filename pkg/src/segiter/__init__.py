"""Exact simulation of iterated segment intersections and the candidate region."""

__version__ = "0.1.0"

from .geometry import ConvexPolygon, Point, Segment, convex_hull, intersect_convex_polygons, orientation, pt
from .iteration import GenerationSet, IterationLimits, IterationReport, iterate, next_generation
from .candidate import RegionResult, candidate, check_candidate_properties
from .classify import ConfigClass, ConfigKind, classify

__all__ = [
    "ConvexPolygon", "Point", "Segment", "convex_hull", "intersect_convex_polygons", "orientation", "pt",
    "GenerationSet", "IterationLimits", "IterationReport", "iterate", "next_generation",
    "RegionResult", "candidate", "check_candidate_properties",
    "ConfigClass", "ConfigKind", "classify",
]
