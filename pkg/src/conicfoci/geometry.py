"""Closed-form ellipse geometry from general-form coefficients and back.

Everything here works directly on ``A..F``: the center and the product
``a^2 b^2`` come from Delta and delta, the semi-axes from
``mu = 4 delta / Delta^2``, the foci from ``r = sqrt((A-C)^2 + B^2)`` applied
to the centered normalized equation, and the rotation angle from the signs
of ``B`` and ``A - C``. No eigen-solver is involved; see ``oracle`` for that.

Delta, delta, the center and ``mu`` are read from ``core.exact_invariants``,
which evaluates them exactly before a single rounding; the remaining steps
use rewrites that avoid cancellation (noted where they occur).
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction
from typing import NamedTuple, Optional

from .core import (
    ConicKind,
    GeneralConic,
    SNAP_TOL,
    exact_invariants,
    classify,
    normalize_sign,
    snapped_sign,
)
from .errors import (
    DegenerateConic,
    InconsistentInput,
    InvalidGeometry,
    IsCircle,
    NotAnEllipse,
    VerticalMajorAxis,
)
from .shapes import CenteredConic, EllipseGeometry, Point

__all__ = [
    "analyze",
    "center",
    "foci",
    "foci_given_a",
    "rotation_angle",
    "semi_axes",
    "synthesize",
    "tan_rotation",
    "to_centered_normalized",
]

# cos/sin values this small are rounding residue of pi/2 multiples.
_TRIG_RESIDUE = 4 * sys.float_info.epsilon


def _require_ellipse(g: GeneralConic, allow_circle: bool = True) -> GeneralConic:
    """Sign-normalized ``g``, or raise if it is not an ellipse."""
    g = normalize_sign(g)
    cls = classify(g)
    if cls.kind is ConicKind.CIRCLE:
        if not allow_circle:
            raise IsCircle("the conic is a circle: foci coincide and there is no rotation angle")
        return g
    if cls.kind is not ConicKind.ELLIPSE:
        if cls.kind is ConicKind.DEGENERATE:
            raise DegenerateConic(f"not an ellipse ({cls.detail})", cls)
        raise NotAnEllipse(f"not an ellipse: {cls.kind.value} ({cls.detail})", cls)
    return g


def _sign_B(A: float, B: float, C: float) -> int:
    return snapped_sign(B, max(abs(A), abs(B), abs(C)))


def _sign_AmC(A: float, C: float) -> int:
    return snapped_sign(A - C, max(abs(A), abs(C)))


def _clamped_sqrt(value: float, scale: float) -> float:
    if value >= 0:
        return math.sqrt(value)
    if value >= -SNAP_TOL * max(scale, 1.0):
        return 0.0
    raise InconsistentInput(f"negative radicand {value!r} beyond rounding tolerance")


def _arccot(x: float) -> float:
    # Range (0, pi).
    return math.pi / 2 - math.atan(x)


class _Reduced(NamedTuple):
    g: GeneralConic
    r: float
    mu: float
    a2b2: float
    center: Point
    # A, B, C of the normalized centered form.
    normalized: tuple[float, float, float]


def _reduce(g: GeneralConic, allow_circle: bool = True) -> _Reduced:
    g = _require_ellipse(g, allow_circle)
    x = exact_invariants(g)
    if not x.F_centered < 0:
        raise DegenerateConic(
            f"constant at the center is {x.F_centered!r}; the ellipse has no interior"
        )
    # Normalizing multiplies through by -a^2 b^2 / F'' = (4 delta^2 / Delta^3)
    # / (delta / Delta), which is mu. Not Delta / delta: that only holds
    # (inverted) for an equation that is already normalized.
    return _Reduced(g, x.r, x.mu, x.a2b2, Point(*x.center), x.scaled_quadratic())


def center(g: GeneralConic) -> Point:
    """Center ``((BE - 2CD)/Delta, (BD - 2AE)/Delta)``."""
    return _reduce(g).center


def semi_axes(g: GeneralConic) -> tuple[float, float]:
    """Squared semi-axes ``(a^2, b^2) = mu (A + C +- r) / 2``."""
    red = _reduce(g)
    a_sq = red.mu * (red.g.A + red.g.C + red.r) / 2
    # mu (A + C - r) / 2 cancels for thin ellipses; a^2 b^2 / a^2 does not.
    return a_sq, red.a2b2 / a_sq


def to_centered_normalized(g: GeneralConic) -> CenteredConic:
    """Rewrite ``g`` about its center, scaled so the constant is ``-a^2 b^2``.

    The center ``(x0, y0)`` comes from ``x0 = (BE - 2CD)/Delta`` and
    ``y0 = (BD - 2AE)/Delta``; the equation is then multiplied through by
    ``-a^2 b^2 / F''``, where ``F''`` is its value at the center and
    ``a^2 b^2 = 4 delta^2 / Delta^3``.
    """
    red = _reduce(g)
    return CenteredConic(*red.normalized, red.center, -red.a2b2)


def _offsets(A: float, B: float, C: float, r: float) -> tuple[float, float]:
    """``sqrt((r + C - A)/2)`` and ``sqrt((r + A - C)/2)``.

    The radicands multiply to ``B^2/4``, so the smaller one is recovered
    from the larger instead of from a cancelling difference.
    """
    amc = A - C
    if amc <= 0:
        big = (r - amc) / 2
        return math.sqrt(big), (abs(B) / 2) / math.sqrt(big)
    big = (r + amc) / 2
    return (abs(B) / 2) / math.sqrt(big), math.sqrt(big)


def _foci_from_centered(cc: CenteredConic) -> tuple[Point, Point]:
    A, B, C = cc.A, cc.B, cc.C
    x0, y0 = cc.center
    r = math.hypot(A - C, B)
    sB = _sign_B(A, B, C)
    sAC = _sign_AmC(A, C)
    if sB == 0 and sAC == 0:
        raise IsCircle("the conic is a circle: both foci are the center")
    # a^2 - A and a^2 - C, with a^2 = (A + C + r)/2 in this gauge.
    dx, dy = _offsets(A, B, C, r)
    if sB != 0:
        xc, yc = x0 + dx, y0 - sB * dy
    else:
        xc = x0 + 0.5 * (1 - sAC) * dx
        yc = y0 + 0.5 * (1 + sAC) * dy
    return Point(xc, yc), Point(2 * x0 - xc, 2 * y0 - yc)


def foci(g: GeneralConic) -> tuple[Point, Point]:
    """``(f2, f1)`` from the coefficients alone, without knowing ``a``."""
    _require_ellipse(g, allow_circle=False)
    return _foci_from_centered(to_centered_normalized(g))


def foci_given_a(cc: CenteredConic, a_sq: float) -> tuple[Point, Point]:
    """``(f2, f1)`` for a centered equation whose constant is ``-a^2 b^2``.

    ``x_c = x0 + sqrt(a^2 - A)``; ``y_c`` takes its sign from ``-sgn B``, or
    for ``B = 0`` the offset goes on whichever axis ``sgn(A - C)`` selects.
    """
    A, B, C = cc.A, cc.B, cc.C
    x0, y0 = cc.center
    if not (a_sq > 0 and math.isfinite(a_sq)):
        raise InconsistentInput(f"a^2 must be positive and finite, got {a_sq!r}")
    b_sq = -cc.constant / a_sq
    if b_sq > a_sq * (1 + SNAP_TOL):
        raise InconsistentInput(
            f"a^2 = {a_sq!r} gives b^2 = {b_sq!r} > a^2; a^2 is not the semi-major axis squared"
        )
    sB = _sign_B(A, B, C)
    sAC = _sign_AmC(A, C)
    if sB == 0 and sAC == 0:
        raise IsCircle("the conic is a circle: both foci are the center")
    dx = _clamped_sqrt(a_sq - A, a_sq)
    dy = _clamped_sqrt(a_sq - C, a_sq)
    if sB != 0:
        xc, yc = x0 + dx, y0 - sB * dy
    else:
        xc = x0 + 0.5 * (1 - sAC) * dx
        yc = y0 + 0.5 * (1 + sAC) * dy
    return Point(xc, yc), Point(2 * x0 - xc, 2 * y0 - yc)


def rotation_angle(g: GeneralConic) -> float:
    """Counterclockwise angle of the major axis, in ``[0, pi)``."""
    g = _require_ellipse(g, allow_circle=False)
    A, B, C = g.A, g.B, g.C
    sB = _sign_B(A, B, C)
    if sB != 0:
        theta = (1 + sB) * math.pi / 4 + 0.5 * _arccot((A - C) / B)
    else:
        theta = (1 + _sign_AmC(A, C)) * math.pi / 4
    if theta >= math.pi:
        theta -= math.pi
    return theta


def tan_rotation(g: GeneralConic) -> float:
    """``tan(theta) = B / (A - C - r)``; undefined for a vertical major axis."""
    g = _require_ellipse(g, allow_circle=False)
    A, B, C = g.A, g.B, g.C
    sB = _sign_B(A, B, C)
    amc = A - C
    if sB == 0:
        if _sign_AmC(A, C) > 0:
            raise VerticalMajorAxis("major axis is vertical (theta = pi/2); tan(theta) is unbounded")
        return 0.0
    r = math.hypot(amc, B)
    if amc > 0:
        # A - C - r cancels here; (A - C - r)(A - C + r) = -B^2.
        return -(amc + r) / B
    return B / (amc - r)


def _cos_sin(theta: float) -> tuple[float, float]:
    ct, st = math.cos(theta), math.sin(theta)
    if abs(ct) < _TRIG_RESIDUE:
        ct = 0.0
    if abs(st) < _TRIG_RESIDUE:
        st = 0.0
    return ct, st


def synthesize(
    center: Point, a: float, b: float, theta: Optional[float] = None
) -> GeneralConic:
    """General-form coefficients of the ellipse with the given geometry.

    The ellipse is written about its center with the focus offset
    ``(c cos theta, c sin theta)`` (negated past ``pi/2``):
    ``A = a^2 - dx^2``, ``B = -2 dx dy``, ``C = a^2 - dy^2`` and constant
    ``-a^2 b^2``, then expanded. Each coefficient is correctly rounded from
    the exact expansion of the given floats and ``cos``/``sin`` values.
    """
    x0, y0 = center
    for name, v in (("center.x", x0), ("center.y", y0), ("semi-major", a), ("semi-minor", b)):
        if not math.isfinite(v):
            raise InvalidGeometry(f"{name} must be finite, got {v!r}")
    if not (a > 0 and b > 0):
        raise InvalidGeometry("semi-axes must be positive")
    if b > a:
        raise InvalidGeometry("semi-minor exceeds semi-major")
    if a == b:
        if theta is not None:
            raise InvalidGeometry("a circle has no rotation angle; omit theta")
        ct, st = 1.0, 0.0
    else:
        if theta is None:
            raise InvalidGeometry("a non-circular ellipse needs a rotation angle")
        if not (0 <= theta < math.pi):
            raise InvalidGeometry(f"theta must lie in [0, pi), got {theta!r}")
        ct, st = _cos_sin(theta)
        if theta > math.pi / 2:
            ct, st = -ct, -st
    # Past cos/sin everything is rational, so evaluate exactly and round each
    # coefficient once. Thin ellipses far from the origin need this: F is a
    # near-cancelling sum and a few ulps there move the recovered axes.
    x0, y0, a, b, ct, st = map(Fraction, (x0, y0, a, b, ct, st))
    c_sq = a * a - b * b
    # Focus offset (dx, dy) = c (cos, sin); A = a^2 - dx^2, B = -2 dx dy, C = a^2 - dy^2.
    A = a * a - c_sq * ct * ct
    B = -2 * c_sq * ct * st
    C = a * a - c_sq * st * st
    D = -2 * A * x0 - B * y0
    E = -B * x0 - 2 * C * y0
    F = A * x0 * x0 + B * x0 * y0 + C * y0 * y0 - a * a * b * b
    A_, C_, F_ = float(A), float(C), float(F)
    # Validate the centered form, then hand back the general one.
    CenteredConic(A_, float(B), C_, Point(float(x0), float(y0)), -float(a * a * b * b))
    return GeneralConic(A_, float(B) + 0.0, C_, float(D) + 0.0, float(E) + 0.0, F_ + 0.0)


def analyze(g: GeneralConic) -> EllipseGeometry:
    """Full geometric description of an ellipse or circle."""
    red = _reduce(g)
    ctr = red.center
    s = red.g.A + red.g.C
    if classify(red.g).kind is ConicKind.CIRCLE:
        a = math.sqrt(red.mu * s / 2)
        return EllipseGeometry(ctr, a, a, None, 0.0, 0.0, ctr, ctr)
    a_sq = red.mu * (s + red.r) / 2
    a = math.sqrt(a_sq)
    b = math.sqrt(red.a2b2 / a_sq)
    # a^2 - b^2 = mu r, without the cancellation.
    c = math.sqrt(red.mu * red.r)
    f2, f1 = _foci_from_centered(CenteredConic(*red.normalized, ctr, -red.a2b2))
    return EllipseGeometry(
        center=ctr,
        a=a,
        b=b,
        theta=rotation_angle(red.g),
        c=c,
        eccentricity=c / a,
        f2=f2,
        f1=f1,
    )
