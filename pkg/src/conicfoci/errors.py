"""Exception hierarchy shared by every conicfoci module."""


class ConicError(Exception):
    """Base class for all conicfoci errors."""


class InvalidConic(ConicError, ValueError):
    """Coefficients do not describe a second-degree curve."""


class NotAnEllipse(ConicError):
    """The conic is real but is not a (non-degenerate) ellipse."""

    def __init__(self, message, classification=None):
        super().__init__(message)
        self.classification = classification


class DegenerateConic(NotAnEllipse):
    """Positive-definite quadratic part, but the point set is a point or empty."""


class IsCircle(ConicError):
    """Requested quantity is undefined for a circle (coincident foci, no axis)."""


class VerticalMajorAxis(ConicError):
    """tan(theta) is unbounded because the major axis is vertical."""


class InconsistentInput(ConicError, ValueError):
    """Arguments contradict each other beyond the rounding tolerance."""


class InvalidGeometry(ConicError, ValueError):
    """Center / semi-axes / angle do not describe an ellipse."""


class SingularQuadraticForm(ConicError):
    """The quadratic part has a zero eigenvalue (parabolic case)."""


class ParseError(ConicError, ValueError):
    """Equation text does not match the grammar.

    ``column`` is 1-based; ``None`` when the problem is not tied to one place.
    """

    def __init__(self, message, column=None, text=None):
        self.column = column
        self.text = text
        self.reason = message
        if column is not None:
            message = f"parse error at column {column}: {message}"
        else:
            message = f"parse error: {message}"
        super().__init__(message)


class DegreeError(ParseError):
    """A monomial of total degree above two, or no second-degree part at all."""


class EmptyEquation(ParseError):
    """Blank input."""
