"""Standalone SVG drawing of one ellipse with its center, foci and axes."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .equation_io import format_number
from .shapes import EllipseGeometry


def _n(v: float) -> str:
    return format_number(v, 12)


def bounding_half_extents(geom: EllipseGeometry) -> tuple[float, float]:
    theta = geom.theta or 0.0
    ct, st = math.cos(theta), math.sin(theta)
    return (
        math.hypot(geom.a * ct, geom.b * st),
        math.hypot(geom.a * st, geom.b * ct),
    )


def render_svg(geom: EllipseGeometry, size: tuple[int, int] = (800, 600), margin_pct: float = 10.0) -> str:
    """SVG 1.1 document for ``geom``.

    Geometry is written in math coordinates inside a ``scale(1,-1)`` group,
    so marker ``cx``/``cy`` are the actual focus coordinates. Circles get no
    axis segments and no angle legend.
    """
    width, height = size
    cx, cy = geom.center
    hx, hy = bounding_half_extents(geom)
    m = margin_pct / 100 * 2 * max(hx, hy)
    vx, vy = cx - hx - m, -(cy + hy + m)
    vw, vh = 2 * (hx + m), 2 * (hy + m)
    marker = 0.012 * max(vw, vh)
    font = 0.04 * vh
    stroke = 'fill="none" vector-effect="non-scaling-stroke"'

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="{_n(vx)} {_n(vy)} {_n(vw)} {_n(vh)}">',
        f'<rect id="background" x="{_n(vx)}" y="{_n(vy)}" width="{_n(vw)}" height="{_n(vh)}" fill="white"/>',
        '<g id="geometry" transform="scale(1,-1)">',
    ]
    rot = "" if geom.theta is None else f' transform="rotate({_n(math.degrees(geom.theta))} {_n(cx)} {_n(cy)})"'
    out.append(
        f'<ellipse id="ellipse" cx="{_n(cx)}" cy="{_n(cy)}" rx="{_n(geom.a)}" ry="{_n(geom.b)}"{rot} '
        f'stroke="black" stroke-width="2" {stroke}/>'
    )
    if geom.theta is not None:
        ux, uy = math.cos(geom.theta), math.sin(geom.theta)
        for name, length, (dx, dy), color in (
            ("major-axis", geom.a, (ux, uy), "steelblue"),
            ("minor-axis", geom.b, (-uy, ux), "seagreen"),
        ):
            out.append(
                f'<line id="{name}" x1="{_n(cx - length * dx)}" y1="{_n(cy - length * dy)}" '
                f'x2="{_n(cx + length * dx)}" y2="{_n(cy + length * dy)}" '
                f'stroke="{color}" stroke-width="1" stroke-dasharray="6,4" {stroke}/>'
            )
    out.append(f'<circle id="center" cx="{_n(cx)}" cy="{_n(cy)}" r="{_n(marker)}" fill="black"/>')
    for name, p in (("focus-f1", geom.f1), ("focus-f2", geom.f2)):
        out.append(f'<circle id="{name}" class="focus" cx="{_n(p.x)}" cy="{_n(p.y)}" r="{_n(marker)}" fill="crimson"/>')
    out.append("</g>")

    legend = []
    if geom.theta is not None:
        legend.append(f"θ = {math.degrees(geom.theta):.4f}°")
        legend.append(f"a = {geom.a:.6g}, b = {geom.b:.6g}")
        legend.append(f"F1 = ({geom.f1.x:.6g}, {geom.f1.y:.6g})")
        legend.append(f"F2 = ({geom.f2.x:.6g}, {geom.f2.y:.6g})")
    else:
        legend.append(f"circle, r = {geom.a:.6g}")
    legend.append(f"center = ({cx:.6g}, {cy:.6g})")
    out.append(f'<g id="legend" font-family="sans-serif" font-size="{_n(font)}" fill="black">')
    for i, line in enumerate(legend):
        out.append(f'<text x="{_n(vx + 0.02 * vw)}" y="{_n(vy + (i + 1.2) * 1.25 * font)}">{escape(line)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
