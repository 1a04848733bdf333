"""Independent check path: principal-axes reduction of the quadratic form.

The conic is translated to its center (solved as a linear system) and the
symmetric matrix ``[[A, B/2], [B/2, C]]`` is diagonalized in closed form.
None of the coefficient formulas in ``geometry`` are used here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import GeneralConic
from .errors import NotAnEllipse, SingularQuadraticForm
from .shapes import EllipseGeometry, Point

__all__ = [
    "EigenReduction",
    "compare_geometry",
    "eigen_reduce",
    "focal_sum_residual",
    "is_ellipse",
    "oracle_geometry",
]

# |B| below this fraction of |A| + |C| is treated as an exactly diagonal matrix.
_DIAGONAL_TOL = 1e-14
_SINGULAR_TOL = 1e-12
_EQUAL_EIG_TOL = 1e-12


@dataclass(frozen=True)
class EigenReduction:
    lambda1: float
    lambda2: float
    axis1: Point
    center: Point
    reduced_constant: float

    @property
    def axis2(self) -> Point:
        return Point(-self.axis1.y, self.axis1.x)


def _eigenvector(A: float, h: float, C: float, lam: float) -> Point:
    # Two candidate null vectors of M - lam I; keep the better conditioned one.
    v1 = (h, lam - A)
    v2 = (lam - C, h)
    vx, vy = v1 if math.hypot(*v1) >= math.hypot(*v2) else v2
    n = math.hypot(vx, vy)
    return Point(vx / n, vy / n)


def eigen_reduce(g: GeneralConic) -> EigenReduction:
    A, B, C, D, E, F = g.as_tuple()
    h = B / 2
    if abs(B) < _DIAGONAL_TOL * (abs(A) + abs(C)):
        lam1, lam2 = (A, C) if A <= C else (C, A)
        axis1 = Point(1.0, 0.0) if A <= C else Point(0.0, 1.0)
        h = 0.0
    else:
        spread = math.hypot(A - C, B)
        lam1 = (A + C - spread) / 2
        lam2 = (A + C + spread) / 2
        axis1 = _eigenvector(A, h, C, lam1)
    if abs(lam1) <= _SINGULAR_TOL * abs(lam2) or abs(lam2) <= _SINGULAR_TOL * abs(lam1):
        raise SingularQuadraticForm("quadratic form has a zero eigenvalue")
    # Gradient vanishes at the center: [[2A, B], [B, 2C]] p = -(D, E).
    x0, y0 = np.linalg.solve(np.array([[2 * A, B], [B, 2 * C]]), np.array([-D, -E]))
    x0, y0 = float(x0), float(y0)
    reduced = F + (D * x0 + E * y0) / 2
    return EigenReduction(lam1, lam2, axis1, Point(x0, y0), reduced)


def _positive_reduction(g: GeneralConic) -> Optional[EigenReduction]:
    """Reduction with positive eigenvalues and negative constant, else None."""
    try:
        red = eigen_reduce(g)
    except SingularQuadraticForm:
        return None
    if red.lambda2 < 0:
        # Both eigenvalues would have to be negative; flip the equation.
        red = eigen_reduce(g.scaled(-1.0))
    if red.lambda1 > 0 and red.reduced_constant < 0:
        return red
    return None


def is_ellipse(g: GeneralConic) -> bool:
    """Positive-definite quadratic part and a negative constant at the center."""
    return _positive_reduction(g) is not None


def oracle_geometry(g: GeneralConic) -> EllipseGeometry:
    red = _positive_reduction(g)
    if red is None:
        raise NotAnEllipse("not an ellipse: quadratic form is not definite or constant is not negative")
    k = -red.reduced_constant
    a = math.sqrt(k / red.lambda1)
    b = math.sqrt(k / red.lambda2)
    ctr = red.center
    if red.lambda2 - red.lambda1 <= _EQUAL_EIG_TOL * red.lambda2:
        return EllipseGeometry(ctr, a, a, None, 0.0, 0.0, ctr, ctr)
    # c^2 = k (1/lambda1 - 1/lambda2)
    c = math.sqrt(k * (red.lambda2 - red.lambda1) / (red.lambda1 * red.lambda2))
    ux, uy = red.axis1
    if ux < 0 or (ux == 0 and uy < 0):
        ux, uy = -ux, -uy
    theta = math.atan2(uy, ux) % math.pi
    if theta >= math.pi:
        theta = 0.0
    f2 = Point(ctr.x + c * ux, ctr.y + c * uy)
    f1 = Point(ctr.x - c * ux, ctr.y - c * uy)
    return EllipseGeometry(ctr, a, b, theta, c, c / a, f2, f1)


def focal_sum_residual(geom: EllipseGeometry, g: GeneralConic, n: int = 64) -> float:
    """Worst defect of ``geom`` as a description of ``g`` over ``n`` sample points.

    Each sample ``P`` is taken from the parametric form of ``geom``. Two
    defects are measured: ``| |P-f1| + |P-f2| - 2a | / a``, and ``|g(P)|``
    relative to the largest term of ``g(P)``. The largest value over the
    samples is returned.
    """
    if n < 4:
        raise ValueError("need at least 4 samples")
    A, B, C, D, E, F = g.as_tuple()
    t = 2 * np.pi * np.arange(n) / n
    theta = geom.theta or 0.0
    ct, st = math.cos(theta), math.sin(theta)
    u, v = geom.a * np.cos(t), geom.b * np.sin(t)
    px = geom.center.x + ct * u - st * v
    py = geom.center.y + st * u + ct * v
    focal = np.hypot(px - geom.f1.x, py - geom.f1.y) + np.hypot(px - geom.f2.x, py - geom.f2.y)
    focal_defect = np.abs(focal - 2 * geom.a) / geom.a
    terms = np.stack([A * px * px, B * px * py, C * py * py, D * px, E * py, np.full(n, F)])
    scale = np.abs(terms).max(axis=0)
    poly_defect = np.abs(terms.sum(axis=0)) / np.where(scale > 0, scale, 1.0)
    return float(max(focal_defect.max(), poly_defect.max()))


def _close(x: float, y: float, tol: float) -> bool:
    return math.isclose(x, y, rel_tol=tol, abs_tol=tol)


def _angle_gap(t1: float, t2: float) -> float:
    d = abs(t1 - t2) % math.pi
    return min(d, math.pi - d)


def compare_geometry(g1: EllipseGeometry, g2: EllipseGeometry, tol: float = 1e-8) -> list[str]:
    """Names of the fields on which two geometries disagree beyond ``tol``.

    Scalars and coordinates are compared relatively, with ``tol`` as the
    absolute floor near zero; angles are compared modulo pi.
    """
    bad = []
    pairs = {
        "center.x": (g1.center.x, g2.center.x),
        "center.y": (g1.center.y, g2.center.y),
        "a": (g1.a, g2.a),
        "b": (g1.b, g2.b),
        "c": (g1.c, g2.c),
        "eccentricity": (g1.eccentricity, g2.eccentricity),
        "f2.x": (g1.f2.x, g2.f2.x),
        "f2.y": (g1.f2.y, g2.f2.y),
        "f1.x": (g1.f1.x, g2.f1.x),
        "f1.y": (g1.f1.y, g2.f1.y),
    }
    for name, (u, v) in pairs.items():
        if not _close(u, v, tol):
            bad.append(name)
    if (g1.theta is None) != (g2.theta is None):
        bad.append("theta")
    elif g1.theta is not None and _angle_gap(g1.theta, g2.theta) > tol * max(1.0, g1.theta):
        bad.append("theta")
    return bad
