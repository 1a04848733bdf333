"""Plain value types describing an ellipse geometrically.

Kept apart from the formula modules so the verification oracle can build
the same result types without importing the closed-form code paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .core import GeneralConic
from .errors import InvalidGeometry


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class CenteredConic:
    """``A(x-x0)^2 + B(x-x0)(y-y0) + C(y-y0)^2 + constant = 0``.

    In normalized form ``constant == -a^2 b^2``.
    """

    A: float
    B: float
    C: float
    center: Point
    constant: float

    def __post_init__(self):
        object.__setattr__(self, "center", Point(*self.center))
        if not (self.A > 0 and self.C > 0 and self.constant < 0):
            raise InvalidGeometry("centered conic needs A > 0, C > 0 and constant < 0")
        if not 4 * self.A * self.C - self.B * self.B > 0:
            raise InvalidGeometry("centered conic needs 4AC - B^2 > 0")

    def to_general(self):
        """Expand back to the six general-form coefficients."""
        A, B, C = self.A, self.B, self.C
        x0, y0 = self.center
        coeffs = (
            A,
            B,
            C,
            -2 * A * x0 - B * y0,
            -B * x0 - 2 * C * y0,
            A * x0 * x0 + B * x0 * y0 + C * y0 * y0 + self.constant,
        )
        # "+ 0.0" turns signed zeros into plain zeros.
        return GeneralConic(*(v + 0.0 for v in coeffs))


@dataclass(frozen=True)
class EllipseGeometry:
    """Center, axes, orientation and foci of an ellipse.

    ``theta`` is the counterclockwise angle from the horizontal to the major
    axis in ``[0, pi)``; ``None`` for a circle. ``f2`` is the rightmost focus
    (the upper one when the major axis is vertical) and ``f1`` its mirror
    image through the center.
    """

    center: Point
    a: float
    b: float
    theta: Optional[float]
    c: float
    eccentricity: float
    f2: Point
    f1: Point

    @property
    def is_circle(self) -> bool:
        return self.theta is None

    def point_at(self, t: float) -> Point:
        """Point of the parametric form ``center + R(theta)(a cos t, b sin t)``."""
        theta = self.theta or 0.0
        ct, st = math.cos(theta), math.sin(theta)
        u, v = self.a * math.cos(t), self.b * math.sin(t)
        return Point(self.center.x + ct * u - st * v, self.center.y + st * u + ct * v)
