"""SVG pictures of planar arrangements.

Coordinates stay exact until the very end; only the numbers written into
the SVG are decimals, so a picture is for looking at, not for measuring.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Optional, Sequence

from .geometry import Line2, Point2
from .oracle import enumerate_2d
from .pseudolines import Pseudoline, eval_at_x

MARGIN = Fraction(1, 10)
HIGHLIGHT_RADIUS = Fraction(1, 100)
CANVAS = 800  # pixels along the longer side
PALETTE = {"red": "#c0392b", "blue": "#2e63b8", None: "#333333"}


def bounding_box(elements: Sequence, extra: Sequence[Point2] = ()) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Box around every crossing, every pseudoline vertex and ``extra``,
    grown by 10% on each side.  Returns ``(xmin, ymin, xmax, ymax)``."""
    pts = [p for p, _ in enumerate_2d(elements).entries]
    for e in elements:
        if isinstance(e, Pseudoline):
            pts.extend(e.vertices)
    pts.extend(extra)
    if not pts:
        pts = [Point2(Fraction(0), Fraction(0))]
    xmin = min(p[0] for p in pts)
    xmax = max(p[0] for p in pts)
    ymin = min(p[1] for p in pts)
    ymax = max(p[1] for p in pts)
    # a box of zero extent still needs room to show the lines
    w = max(xmax - xmin, ymax - ymin, Fraction(1))
    if xmax == xmin:
        xmin, xmax = xmin - w / 2, xmax + w / 2
    if ymax == ymin:
        ymin, ymax = ymin - w / 2, ymax + w / 2
    dx = (xmax - xmin) * MARGIN
    dy = (ymax - ymin) * MARGIN
    return xmin - dx, ymin - dy, xmax + dx, ymax + dy


def _clip_line(l: Line2, box) -> Optional[tuple[Point2, Point2]]:
    xmin, ymin, xmax, ymax = box
    hits = []
    if l.b != 0:
        for x in (xmin, xmax):
            y = Fraction(l.c - l.a * x, l.b)
            if ymin <= y <= ymax:
                hits.append(Point2(x, y))
    if l.a != 0:
        for y in (ymin, ymax):
            x = Fraction(l.c - l.b * y, l.a)
            if xmin <= x <= xmax:
                hits.append(Point2(x, y))
    hits = sorted(set(hits))
    if len(hits) < 2:
        return None
    return hits[0], hits[-1]


def render_svg(elements: Sequence, highlight: Optional[Point2] = None) -> str:
    """Draw lines or pseudolines, optionally marking one point."""
    box = bounding_box(elements, [highlight] if highlight is not None else [])
    xmin, ymin, xmax, ymax = box
    w, h = xmax - xmin, ymax - ymin
    scale = CANVAS / max(w, h)

    def sx(x) -> str:
        return f"{float((x - xmin) * scale):.3f}"

    def sy(y) -> str:
        # SVG's y axis points down
        return f"{float((ymax - y) * scale):.3f}"

    width, height = float(w * scale), float(h * scale)
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": f"{width:.0f}",
        "height": f"{height:.0f}",
        "viewBox": f"0 0 {width:.3f} {height:.3f}",
    })
    ET.SubElement(svg, "rect", {"width": "100%", "height": "100%", "fill": "white"})
    stroke = f"{CANVAS / 400:.3f}"
    for i, e in enumerate(elements):
        color = PALETTE.get(e.color, PALETTE[None])
        if isinstance(e, Line2):
            seg = _clip_line(e, box)
            if seg is None:
                continue
            p, q = seg
            ET.SubElement(svg, "line", {
                "x1": sx(p.x), "y1": sy(p.y), "x2": sx(q.x), "y2": sy(q.y),
                "stroke": color, "stroke-width": stroke, "data-index": str(i),
            })
        else:
            xs = [xmin] + [v.x for v in e.vertices if xmin < v.x < xmax] + [xmax]
            pts = " ".join(f"{sx(x)},{sy(eval_at_x(e, x))}" for x in xs)
            ET.SubElement(svg, "polyline", {
                "points": pts, "fill": "none", "stroke": color,
                "stroke-width": stroke, "data-index": str(i),
            })
    if highlight is not None:
        r = max(w, h) * HIGHLIGHT_RADIUS * scale
        ET.SubElement(svg, "circle", {
            "cx": sx(highlight.x), "cy": sy(highlight.y), "r": f"{float(r):.3f}",
            "fill": "none", "stroke": "#e67e22", "stroke-width": stroke,
        })
    return ET.tostring(svg, encoding="unicode")
