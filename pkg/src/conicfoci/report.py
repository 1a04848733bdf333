"""Analysis report: the JSON / text document printed by ``conicfoci analyze``.

Every key is always present. Geometry fields are ``null`` when the conic is
not an ellipse; ``rotation_*`` are ``null`` for circles; ``tan_rotation`` is
``null`` for circles and for a vertical major axis; ``discriminants.mu`` is
``null`` when Delta = 0. ``input`` echoes the coefficients at full precision
so the report can be regenerated from it exactly.
"""

from __future__ import annotations

import math
from typing import Any, Optional

from . import geometry
from .core import GeneralConic, classify, discriminants, normalize_sign
from .equation_io import format_equation, format_number
from .errors import ConicError

REPORT_KEYS = (
    "input",
    "classification",
    "center",
    "semi_major",
    "semi_minor",
    "rotation_radians",
    "rotation_degrees",
    "tan_rotation",
    "foci",
    "focal_distance",
    "eccentricity",
    "discriminants",
)


def _rounded(value: Optional[float], precision: int) -> Optional[float]:
    if value is None:
        return None
    return float(f"{value:.{precision}g}")


def _pair(p, precision: int) -> list[float]:
    return [_rounded(p[0], precision), _rounded(p[1], precision)]


def build_report(g: GeneralConic, precision: int = 12) -> dict[str, Any]:
    """Report for ``g``; discriminants are those of the sign-normalized equation."""
    cls = classify(g)
    d = discriminants(normalize_sign(g))
    report: dict[str, Any] = {k: None for k in REPORT_KEYS}
    report["input"] = list(g.as_tuple())
    report["classification"] = cls.kind.value
    report["discriminants"] = {
        "Delta": _rounded(d.Delta, precision),
        "delta": _rounded(d.delta, precision),
        "r": _rounded(d.r, precision),
        "mu": _rounded(d.mu, precision),
    }
    if not cls.is_ellipse:
        return report
    geom = geometry.analyze(g)
    report["center"] = _pair(geom.center, precision)
    report["semi_major"] = _rounded(geom.a, precision)
    report["semi_minor"] = _rounded(geom.b, precision)
    if geom.theta is not None:
        report["rotation_radians"] = _rounded(geom.theta, precision)
        report["rotation_degrees"] = _rounded(math.degrees(geom.theta), precision)
        try:
            report["tan_rotation"] = _rounded(geometry.tan_rotation(g), precision)
        except ConicError:
            pass
    report["foci"] = {"f1": _pair(geom.f1, precision), "f2": _pair(geom.f2, precision)}
    report["focal_distance"] = _rounded(geom.c, precision)
    report["eccentricity"] = _rounded(geom.eccentricity, precision)
    return report


def format_text(report: dict[str, Any], precision: int = 12) -> str:
    def num(v):
        return "n/a" if v is None else format_number(v, precision)

    def pt(p):
        return "n/a" if p is None else f"({num(p[0])}, {num(p[1])})"

    g = GeneralConic(*report["input"])
    d = report["discriminants"]
    lines = [
        f"equation:        {format_equation(g, precision)}",
        f"classification:  {report['classification']}",
        f"Delta:           {num(d['Delta'])}",
        f"delta:           {num(d['delta'])}",
        f"r:               {num(d['r'])}",
        f"mu:              {num(d['mu'])}",
    ]
    if report["center"] is not None:
        lines += [
            f"center:          {pt(report['center'])}",
            f"semi-major:      {num(report['semi_major'])}",
            f"semi-minor:      {num(report['semi_minor'])}",
            "rotation:        n/a (circle)" if report["rotation_radians"] is None
            else f"rotation:        {num(report['rotation_radians'])} rad ({num(report['rotation_degrees'])} deg)",
            f"tan(rotation):   {num(report['tan_rotation'])}",
            f"focus F2:        {pt(report['foci']['f2'])}",
            f"focus F1:        {pt(report['foci']['f1'])}",
            f"focal distance:  {num(report['focal_distance'])}",
            f"eccentricity:    {num(report['eccentricity'])}",
        ]
    return "\n".join(lines)
