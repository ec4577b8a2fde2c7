"""Point files, JSON report encoding and CSV dumps."""

from __future__ import annotations

import csv
import json
import re
from fractions import Fraction
from typing import Iterable, TextIO

from .geometry import Point

SCHEMA = "segiter.report/1"

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class PointFileError(ValueError):
    pass


def parse_rational(value, where: str = "") -> Fraction:
    """Parse an integer or a "p/q" string exactly."""
    prefix = f"{where}: " if where else ""
    if isinstance(value, bool):
        raise PointFileError(f"{prefix}malformed rational {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise PointFileError(f"{prefix}malformed rational {value!r} (use an integer or a \"p/q\" string)")
    m = _RATIONAL.match(value)
    if not m:
        raise PointFileError(f"{prefix}malformed rational {value!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise PointFileError(f"{prefix}zero denominator in {value!r}")
    return Fraction(num, den)


def parse_point_file(text: str) -> list[Point]:
    """Read ``{"points": [[x, y], ...]}``; returns the points in file order."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PointFileError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("points"), list):
        raise PointFileError('malformed point file: expected an object with a "points" list')
    out: list[Point] = []
    seen: dict[Point, int] = {}
    for i, entry in enumerate(doc["points"]):
        if not isinstance(entry, list) or len(entry) != 2:
            raise PointFileError(f"point {i}: expected a pair [x, y], got {entry!r}")
        p = Point(parse_rational(entry[0], f"point {i}, x"), parse_rational(entry[1], f"point {i}, y"))
        if p in seen:
            raise PointFileError(f"point {i}: duplicate point {p} (same as point {seen[p]})")
        seen[p] = i
        out.append(p)
    return out


def fmt(q: Fraction) -> str:
    return str(q)


def point_json(p: Point) -> list[str]:
    return [fmt(p.x), fmt(p.y)]


def serialize_points(points: Iterable[Point]) -> str:
    return json.dumps({"points": [point_json(p) for p in points]})


def exact(q: Fraction) -> dict:
    """Exact value plus a decimal for humans; the string is authoritative."""
    return {"exact": fmt(q), "decimal": float(q)}


def write_points_csv(rows: Iterable[tuple[Point, int]], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["x", "y", "depth"])
    for p, d in rows:
        w.writerow([fmt(p.x), fmt(p.y), d])


def read_points_csv(fh: TextIO) -> list[tuple[Point, int]]:
    rows = []
    for rec in csv.DictReader(fh):
        rows.append((Point(parse_rational(rec["x"]), parse_rational(rec["y"])), int(rec["depth"])))
    return rows
