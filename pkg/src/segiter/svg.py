"""Static SVG figures of an iteration run. Output is byte-for-byte deterministic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .candidate import RegionResult
from .geometry import POINT, POLYGON, SEGMENT, convex_hull
from .iteration import GenerationSet, LineIndex

PALETTE = ("#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass(frozen=True)
class SvgOptions:
    show_segments: bool = True
    show_region: bool = True
    width: int = 600
    point_scale: float = 0.008     # glyph radius as a fraction of the view size


def _num(v) -> str:
    s = f"{float(v):.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _xy(p) -> tuple[str, str]:
    return _num(p.x), _num(-p.y)


def render_svg(g: GenerationSet, region: RegionResult | None = None, options: SvgOptions | None = None) -> str:
    opts = options or SvgOptions()
    if len(g) == 0:
        raise ValueError("nothing to draw: empty point set")
    x0, y0, x1, y1 = convex_hull(g.start_points or g.points()).bbox()
    span = max(x1 - x0, y1 - y0) or Fraction(1)
    padx = (x1 - x0 or span) * Fraction(5, 100)
    pady = (y1 - y0 or span) * Fraction(5, 100)
    vx, vy = x0 - padx, -(y1 + pady)
    vw, vh = (x1 - x0) + 2 * padx, (y1 - y0) + 2 * pady
    height = max(1, round(opts.width * float(vh) / float(vw)))
    r = _num(float(max(vw, vh)) * opts.point_scale)
    stroke = _num(float(max(vw, vh)) * opts.point_scale / 4)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.width}" height="{height}" '
        f'viewBox="{_num(vx)} {_num(vy)} {_num(vw)} {_num(vh)}">',
    ]
    if opts.show_segments and len(g) >= 2:
        out.append(f'<g class="segments" stroke="#999999" stroke-width="{stroke}">')
        idx = LineIndex.build(g.points())
        for key in sorted(idx.extent):
            a, b = idx.extent[key]
            (ax, ay), (bx, by) = _xy(a), _xy(b)
            out.append(f'<line class="segment" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
        out.append("</g>")
    if opts.show_region and region is not None and not region.region.is_empty:
        reg = region.region
        style = f'fill="none" stroke="#2ca02c" stroke-width="{_num(float(stroke) * 3)}"'
        if reg.kind == POLYGON:
            pts = " ".join(",".join(_xy(v)) for v in reg.vertices)
            out.append(f'<polygon class="candidate" points="{pts}" {style}/>')
        elif reg.kind == SEGMENT:
            (ax, ay), (bx, by) = _xy(reg.vertices[0]), _xy(reg.vertices[1])
            out.append(f'<line class="candidate" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" {style}/>')
        elif reg.kind == POINT:
            cx, cy = _xy(reg.vertices[0])
            out.append(f'<rect class="candidate-marker" x="{_num(float(cx) - 1.5 * float(r))}" '
                       f'y="{_num(float(cy) - 1.5 * float(r))}" width="{_num(3 * float(r))}" '
                       f'height="{_num(3 * float(r))}" data-x="{cx}" data-y="{cy}" {style}/>')
    out.append('<g class="points">')
    for p, d in g.sorted_points():
        cx, cy = _xy(p)
        colour = PALETTE[min(d, len(PALETTE) - 1)]
        out.append(f'<circle class="point depth-{d}" cx="{cx}" cy="{cy}" r="{r}" fill="{colour}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
