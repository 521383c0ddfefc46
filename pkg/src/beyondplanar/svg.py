"""Deterministic SVG rendering of point sets and edge partitions.

One stroke color per class from a fixed 12-color palette (cycling when a
partition has more classes). Output is byte-stable: fixed float format,
edges emitted class by class in lexicographic order, vertices last.
"""

from __future__ import annotations

import math

from .coloring import Coloring
from .geometry import PointSet, all_edges

PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#17becf",
    "#e377c2",
    "#8c564b",
    "#bcbd22",
    "#7f7f7f",
    "#aec7e8",
    "#98df8a",
)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _circle_layout(n: int, size: float, margin: float) -> list[tuple[float, float]]:
    # Clockwise from 12 o'clock, matching the convex generator's index order.
    c = size / 2.0
    r = c - margin
    out = []
    for i in range(n):
        theta = math.pi / 2 - 2.0 * math.pi * i / n
        out.append((c + r * math.cos(theta), c - r * math.sin(theta)))
    return out


def _coordinate_layout(points: PointSet, size: float, margin: float) -> list[tuple[float, float]]:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, 1)
    scale = (size - 2.0 * margin) / span
    # Center the drawing; SVG y grows downward.
    off_x = (size - (hi_x - lo_x) * scale) / 2.0
    off_y = (size - (hi_y - lo_y) * scale) / 2.0
    return [(off_x + (p.x - lo_x) * scale, size - off_y - (p.y - lo_y) * scale) for p in points]


def render_svg(
    instance: PointSet | int,
    coloring: Coloring | None = None,
    *,
    size: int = 640,
    margin: int = 40,
    point_radius: float = 4.0,
    stroke_width: float = 1.6,
    labels: bool = False,
    order: tuple[int, ...] | None = None,
) -> str:
    """Render the point set and its edge partition as an SVG document.

    An integer instance means n points in convex position, laid out on a
    circle; a PointSet is drawn to scale from its coordinates, or on a
    circle when `order` gives its clockwise convex order. Without a
    coloring, all edges form one class.
    """
    if isinstance(instance, PointSet):
        n = instance.n
        if order is not None:
            if sorted(order) != list(range(n)):
                raise ValueError("order must be a permutation of the point indices")
            slots = _circle_layout(n, float(size), float(margin))
            pos = [(0.0, 0.0)] * n
            for slot, orig in enumerate(order):
                pos[orig] = slots[slot]
        else:
            pos = _coordinate_layout(instance, float(size), float(margin))
    else:
        n = int(instance)
        if n < 1:
            raise ValueError(f"n >= 1 required, got {n}")
        pos = _circle_layout(n, float(size), float(margin))
    if coloring is None:
        coloring = Coloring(n, 1, {e: 0 for e in all_edges(n)}) if n >= 2 else None
    elif coloring.n != n:
        raise ValueError(f"coloring is over n={coloring.n}, instance has n={n}")

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if coloring is not None:
        for color, edges in enumerate(coloring.classes()):
            stroke = PALETTE[color % len(PALETTE)]
            out.append(f'<g stroke="{stroke}" stroke-width="{_fmt(stroke_width)}" fill="none">')
            for e in edges:
                (x1, y1), (x2, y2) = pos[e.u], pos[e.v]
                out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
            out.append("</g>")
    out.append('<g fill="black">')
    for x, y in pos:
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(point_radius)}"/>')
    out.append("</g>")
    if labels:
        out.append('<g font-family="monospace" font-size="12" fill="black">')
        for i, (x, y) in enumerate(pos):
            out.append(f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}">{i}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
