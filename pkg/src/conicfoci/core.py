"""Coefficient types, discriminants and classification of plane conics.

A conic is held in general form ``Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0``.
Every derived quantity is a pure function of the six coefficients.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import NamedTuple
from typing import Iterable, Optional

from .errors import InvalidConic

# Relative width of the band in which a computed quantity counts as zero.
SNAP_TOL = 1e-12


def is_zero(q: float, scale: float) -> bool:
    """True when ``|q|`` is negligible next to ``scale``.

    ``scale`` is the magnitude of the terms that produced ``q``; a zero scale
    only accepts an exact zero.
    """
    return abs(q) <= SNAP_TOL * abs(scale)


def snapped_sign(q: float, scale: float) -> int:
    """Sign of ``q`` as -1/0/+1, with values inside the snap band mapped to 0."""
    if is_zero(q, scale):
        return 0
    return 1 if q > 0 else -1


@dataclass(frozen=True)
class GeneralConic:
    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    def __post_init__(self):
        for name in "ABCDEF":
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidConic(f"coefficient {name} is not a real number: {value!r}")
            value = float(value)
            if not math.isfinite(value):
                raise InvalidConic(f"coefficient {name} is not finite: {value!r}")
            object.__setattr__(self, name, value)
        if self.A == 0 and self.B == 0 and self.C == 0:
            raise InvalidConic("A, B and C are all zero; the equation is not second degree")

    @classmethod
    def from_iterable(cls, values: Iterable[float]) -> GeneralConic:
        values = list(values)
        if len(values) != 6:
            raise InvalidConic(f"expected 6 coefficients, got {len(values)}")
        return cls(*values)

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def scaled(self, factor: float) -> GeneralConic:
        return GeneralConic(*(factor * v for v in self.as_tuple()))

    def evaluate(self, x: float, y: float) -> float:
        A, B, C, D, E, F = self.as_tuple()
        return A * x * x + B * x * y + C * y * y + D * x + E * y + F

    def scale(self) -> float:
        """Largest absolute coefficient."""
        return max(abs(v) for v in self.as_tuple())


@dataclass(frozen=True)
class Discriminants:
    Delta: float
    delta: float
    r: float
    mu: Optional[float]


class ConicKind(str, enum.Enum):
    ELLIPSE = "ellipse"
    CIRCLE = "circle"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class ConicClass:
    kind: ConicKind
    detail: str

    @property
    def is_ellipse(self) -> bool:
        """Ellipse in the broad sense (circles included)."""
        return self.kind in (ConicKind.ELLIPSE, ConicKind.CIRCLE)


def _quotient(num: int, den: int) -> float:
    """``num / den`` correctly rounded; +-inf past the float range."""
    try:
        return num / den
    except OverflowError:
        return math.inf if (num < 0) == (den < 0) else -math.inf


def _times_pow2(num: int, den: int, k: int) -> float:
    """``num * 2**k / den``, correctly rounded (int true division is)."""
    if k >= 0:
        return _quotient(num << k, den)
    return _quotient(num, den << -k)


class ExactInvariants(NamedTuple):
    """Integer images of the invariants, free of rounding.

    Every coefficient is ``N * 2**e`` for one shared exponent ``e``, with
    ``N_A .. N_F`` integers. Then ``Delta = N_Delta 2^(2e)``,
    ``delta = N_delta 2^(3e)`` and the center is ``(N_x0, N_y0) / N_Delta``.
    """

    e: int
    N_A: int
    N_B: int
    N_C: int
    N_Delta: int
    N_delta: int
    N_x0: int
    N_y0: int

    @property
    def Delta(self) -> float:
        return _times_pow2(self.N_Delta, 1, 2 * self.e)

    @property
    def delta(self) -> float:
        return _times_pow2(self.N_delta, 1, 3 * self.e)

    @property
    def mu(self) -> float:
        """``4 delta / Delta^2``."""
        return _times_pow2(4 * self.N_delta, self.N_Delta * self.N_Delta, -self.e)

    @property
    def a2b2(self) -> float:
        """``4 delta^2 / Delta^3`` (the 2^e factors cancel)."""
        return _quotient(4 * self.N_delta * self.N_delta, self.N_Delta**3)

    @property
    def center(self) -> tuple[float, float]:
        return _quotient(self.N_x0, self.N_Delta), _quotient(self.N_y0, self.N_Delta)

    @property
    def F_centered(self) -> float:
        """Value of the polynomial at the center, ``-delta / Delta``."""
        return _times_pow2(-self.N_delta, self.N_Delta, self.e)

    def scaled_quadratic(self) -> tuple[float, float, float]:
        """``mu * (A, B, C)``, each correctly rounded."""
        den = self.N_Delta * self.N_Delta
        return tuple(_quotient(4 * self.N_delta * n, den) for n in (self.N_A, self.N_B, self.N_C))

    @property
    def r(self) -> float:
        q = (self.N_A - self.N_C) ** 2 + self.N_B * self.N_B
        # Integer square root with >= 110 bits, so r^2 never under/overflows.
        shift = max(0, 220 - q.bit_length())
        shift += shift & 1
        return _times_pow2(math.isqrt(q << shift), 1, self.e - shift // 2)


@functools.lru_cache(maxsize=4096)
def exact_invariants(g: GeneralConic) -> ExactInvariants:
    ratios = [v.as_integer_ratio() for v in g.as_tuple()]
    # Denominators are powers of two; bring all six over the largest one.
    den = max(d for _, d in ratios)
    e = -(den.bit_length() - 1)
    A, B, C, D, E, F = (n * (den // d) for n, d in ratios)
    Delta = 4 * A * C - B * B
    delta = C * D * D + A * E * E - B * D * E - F * Delta
    return ExactInvariants(e, A, B, C, Delta, delta, B * E - 2 * C * D, B * D - 2 * A * E)


def discriminants(g: GeneralConic) -> Discriminants:
    """Delta, delta, r and mu; Delta, delta and mu are correctly rounded."""
    x = exact_invariants(g)
    mu = x.mu if x.N_Delta != 0 else None
    return Discriminants(Delta=x.Delta, delta=x.delta, r=x.r, mu=mu)


def delta_scales(g: GeneralConic) -> tuple[float, float]:
    """Magnitudes of the largest terms entering Delta and delta.

    Snapping against these keeps the zero tests invariant under rescaling
    of the coefficients.
    """
    A, B, C, D, E, F = g.as_tuple()
    Delta_scale = max(abs(4 * A * C), B * B)
    delta_scale = max(
        abs(C * D * D), abs(A * E * E), abs(B * D * E), abs(F) * Delta_scale
    )
    return Delta_scale, delta_scale


def normalize_sign(g: GeneralConic) -> GeneralConic:
    """Negate all coefficients when A < 0; the point set is unchanged."""
    if g.A < 0:
        return g.scaled(-1.0)
    return g


def is_circular(g: GeneralConic) -> bool:
    """B snaps to zero and A snaps to C."""
    A, B, C = g.A, g.B, g.C
    return is_zero(B, max(abs(A), abs(B), abs(C))) and is_zero(A - C, max(abs(A), abs(C)))


def _delta_sign(g: GeneralConic) -> int:
    """Snapped sign of delta, for Delta > 0.

    delta = -Delta * F'' with F'' the value at the center, so the zero test is
    made on F'' against the size of its own terms. Testing delta against its
    term sizes instead would flag thin, off-origin ellipses as degenerate.
    """
    A, B, C, D, E, F = g.as_tuple()
    x = exact_invariants(g)
    x0, y0 = x.center
    scale = max(
        abs(A * x0 * x0), abs(B * x0 * y0), abs(C * y0 * y0), abs(D * x0), abs(E * y0), abs(F)
    )
    return -snapped_sign(x.F_centered, scale)


@functools.lru_cache(maxsize=4096)
def classify(g: GeneralConic) -> ConicClass:
    """Classify by the signs of Delta and delta.

    The ellipse test is the classical one: with A, C > 0, the equation is an
    ellipse exactly when Delta > 0 and delta > 0. Parabola / hyperbola /
    degenerate labels follow the usual Delta sign taxonomy; in particular line
    pairs are reported as hyperbola (Delta < 0) or parabola (Delta = 0).
    """
    g = normalize_sign(g)
    d = discriminants(g)
    Delta_scale, _ = delta_scales(g)
    s_Delta = snapped_sign(d.Delta, Delta_scale)
    if s_Delta < 0:
        return ConicClass(ConicKind.HYPERBOLA, f"Delta < 0 (Delta = {d.Delta:.6g})")
    if s_Delta == 0:
        return ConicClass(ConicKind.PARABOLA, f"Delta = 0 (Delta = {d.Delta:.6g})")
    s_delta = _delta_sign(g)
    if s_delta == 0:
        return ConicClass(ConicKind.DEGENERATE, "delta = 0: the equation describes a single point")
    if s_delta < 0:
        return ConicClass(ConicKind.DEGENERATE, "delta < 0: the equation has no real points")
    if is_circular(g):
        return ConicClass(ConicKind.CIRCLE, "Delta > 0, delta > 0, B = 0 and A = C")
    return ConicClass(ConicKind.ELLIPSE, "Delta > 0 and delta > 0")
