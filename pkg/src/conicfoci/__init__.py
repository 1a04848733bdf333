"""Ellipse geometry (center, axes, rotation, foci) straight from ``Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0``."""

from .core import ConicClass, ConicKind, Discriminants, GeneralConic, classify, discriminants, normalize_sign
from .equation_io import format_equation, parse_equation
from .errors import (
    ConicError,
    DegenerateConic,
    DegreeError,
    InconsistentInput,
    InvalidConic,
    InvalidGeometry,
    IsCircle,
    NotAnEllipse,
    ParseError,
    VerticalMajorAxis,
)
from .geometry import analyze, center, foci, rotation_angle, semi_axes, synthesize, tan_rotation, to_centered_normalized
from .shapes import CenteredConic, EllipseGeometry, Point

__version__ = "0.1.0"

__all__ = [
    "CenteredConic", "ConicClass", "ConicError", "ConicKind", "DegenerateConic", "DegreeError",
    "Discriminants", "EllipseGeometry", "GeneralConic", "InconsistentInput", "InvalidConic",
    "InvalidGeometry", "IsCircle", "NotAnEllipse", "ParseError", "Point", "VerticalMajorAxis",
    "analyze", "center", "classify", "discriminants", "foci", "format_equation", "normalize_sign",
    "parse_equation", "rotation_angle", "semi_axes", "synthesize", "tan_rotation",
    "to_centered_normalized",
]
