"""SVG rendering for display.  The only place coordinates become floats."""

from __future__ import annotations

import math
from typing import Union

from .constructions import AssembledPolygon
from .geometry import LatticeTester, Polygon, dilate, merged_vertices

Target = Union[Polygon, AssembledPolygon]


def _f(x) -> str:
    return f"{float(x):.12g}"


def emit_svg(target: Target, t: int = 1, scale: float = 40.0, pieces: bool = True,
             rays: bool = True, margin: int = 1) -> str:
    """Render ``t * target`` with its lattice points.

    Lattice points inside the closed region are drawn as filled dots (class
    ``inside``); the rest of the viewport grid is drawn faintly.  Vertices
    dropped by collinear merging are marked with a ring (class ``collinear``).
    """
    outer = target.outer if isinstance(target, AssembledPolygon) else target
    outer = dilate(outer, t)
    xs = [v.x for v in outer.vertices]
    ys = [v.y for v in outer.vertices]
    x0, x1 = math.floor(min(xs)) - margin, math.ceil(max(xs)) + margin
    y0, y1 = math.floor(min(ys)) - margin, math.ceil(max(ys)) + margin
    width, height = (x1 - x0) * scale, (y1 - y0) * scale

    def px(p):
        return f"{_f((float(p.x) - x0) * scale)},{_f((y1 - float(p.y)) * scale)}"

    def path(poly, cls):
        return f'<polygon class="{cls}" points="{" ".join(px(v) for v in poly.vertices)}"/>'

    kept = merged_vertices(outer)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">',
        "<style>.outer{fill:#cde;stroke:#024;stroke-width:2}.piece{fill:none;stroke:#68a;"
        "stroke-dasharray:4 3}.ray{stroke:#a66;stroke-width:1}.inside{fill:#c20}"
        ".grid{fill:#bbb}.collinear{fill:none;stroke:#080;stroke-width:2}</style>",
        f'<polygon class="outer" data-edges="{len(kept)}" '
        f'points="{" ".join(px(v) for v in kept)}"/>',
    ]
    if isinstance(target, AssembledPolygon):
        if pieces:
            out += [path(dilate(p, t), "piece") for p in target.pieces]
        if rays:
            for e in target.shared_edges:
                (ax, ay), (bx, by) = (px(q.scale(t)).split(",") for q in (e.segment.p, e.segment.q))
                out.append(f'<line class="ray" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    tester = LatticeTester(outer)
    r = max(1.5, scale / 12)
    for y in range(y0, y1 + 1):
        row = tester.row(y)
        for x in range(x0, x1 + 1):
            cls = "inside" if row(x) else "grid"
            out.append(f'<circle class="{cls}" cx="{_f((x - x0) * scale)}" '
                       f'cy="{_f((y1 - y) * scale)}" r="{_f(r if cls == "inside" else r / 2)}"/>')
    for v in outer.vertices:
        if v not in kept:
            cx, cy = px(v).split(",")
            out.append(f'<circle class="collinear" cx="{cx}" cy="{cy}" r="{_f(2 * r)}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
