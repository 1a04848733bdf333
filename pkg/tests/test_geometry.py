import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conicfoci import geometry
from conicfoci.core import GeneralConic
from conicfoci.errors import (
    DegenerateConic,
    InconsistentInput,
    InvalidGeometry,
    IsCircle,
    NotAnEllipse,
    VerticalMajorAxis,
)
from conicfoci.geometry import (
    analyze,
    center,
    foci,
    foci_given_a,
    rotation_angle,
    semi_axes,
    synthesize,
    tan_rotation,
    to_centered_normalized,
)
from conicfoci.oracle import compare_geometry
from conicfoci.shapes import CenteredConic, Point

from sampling import expected_geometry, random_geometry

SQ2 = math.sqrt(2)
# Foci of the worked example in closed form.
F2_EXACT = (1 + 3 / 23 * math.sqrt(23 + 23 * SQ2), -1 - 3 / 23 * math.sqrt(-23 + 23 * SQ2))
AXIS_ALIGNED = GeneralConic(1, 0, 4, 0, 0, -4)
VERTICAL = GeneralConic(4, 0, 1, 0, 0, -4)


class TestWorkedExample:
    def test_center(self, worked):
        assert center(worked) == (1.0, -1.0)

    def test_semi_axes(self, worked):
        a_sq, b_sq = semi_axes(worked)
        assert a_sq == pytest.approx(9 / 23 * (5 + SQ2), rel=1e-14)
        assert b_sq == pytest.approx(9 / 23 * (5 - SQ2), rel=1e-14)
        assert a_sq * b_sq == pytest.approx(81 / 23, rel=1e-14)

    def test_normalized_form(self, worked):
        cc = to_centered_normalized(worked)
        assert (cc.A, cc.B, cc.C) == pytest.approx((36 / 23, 18 / 23, 54 / 23), rel=1e-15)
        assert cc.center == (1.0, -1.0)
        assert cc.constant == pytest.approx(-81 / 23, rel=1e-15)

    def test_doubled_equation_normalizes_identically(self, worked):
        assert to_centered_normalized(worked.scaled(2.0)) == to_centered_normalized(worked)

    def test_foci(self, worked):
        f2, f1 = foci(worked)
        assert f2.x == pytest.approx(F2_EXACT[0], abs=1e-12)
        assert f2.y == pytest.approx(F2_EXACT[1], abs=1e-12)
        assert f1.x == pytest.approx(2 - F2_EXACT[0], abs=1e-12)
        assert f1.y == pytest.approx(-2 - F2_EXACT[1], abs=1e-12)

    def test_literal_seven_digit_foci_are_not_the_closed_form(self):
        # Evaluating the closed form gives 1.9719528..., -1.4025960...; a
        # commonly quoted 1.9719373, -1.4025568 does not match it.
        assert abs(F2_EXACT[0] - 1.9719373) > 1e-5
        assert abs(F2_EXACT[1] - (-1.4025568)) > 1e-5

    def test_rotation(self, worked):
        assert rotation_angle(worked) == pytest.approx(7 * math.pi / 8, abs=1e-12)
        assert tan_rotation(worked) == pytest.approx(1 - SQ2, abs=1e-12)

    def test_foci_given_a_matches(self, worked):
        cc = to_centered_normalized(worked)
        got = foci_given_a(cc, 9 / 23 * (5 + SQ2))
        for p, q in zip(got, foci(worked)):
            assert p.x == pytest.approx(q.x, abs=1e-12)
            assert p.y == pytest.approx(q.y, abs=1e-12)

    def test_analyze(self, worked):
        g = analyze(worked)
        assert g.center == (1.0, -1.0)
        assert g.theta == pytest.approx(7 * math.pi / 8, abs=1e-12)
        assert (g.a * g.b) ** 2 == pytest.approx(81 / 23, rel=1e-13)
        assert g.f2.x == pytest.approx(F2_EXACT[0], abs=1e-12)

    def test_negated_equation_has_same_geometry(self, worked):
        assert analyze(worked.scaled(-1.0)) == analyze(worked)


class TestAxisAligned:
    def test_semi_axes(self):
        assert semi_axes(AXIS_ALIGNED) == (4.0, 1.0)
        assert semi_axes(GeneralConic(1, 0, 1, 0, 0, -1)) == (1.0, 1.0)

    def test_already_normalized(self):
        cc = to_centered_normalized(AXIS_ALIGNED)
        assert (cc.A, cc.B, cc.C, cc.constant) == (1.0, 0.0, 4.0, -4.0)

    def test_horizontal_foci(self):
        f2, f1 = foci(AXIS_ALIGNED)
        assert f2 == pytest.approx((math.sqrt(3), 0))
        assert f1 == pytest.approx((-math.sqrt(3), 0))

    def test_vertical_foci_uppermost_first(self):
        f2, f1 = foci(VERTICAL)
        assert f2 == pytest.approx((0, math.sqrt(3)))
        assert f1 == pytest.approx((0, -math.sqrt(3)))

    def test_foci_given_a(self):
        cc = CenteredConic(1, 0, 4, Point(0, 0), -4)
        assert foci_given_a(cc, 4)[0] == pytest.approx((math.sqrt(3), 0))
        cc = CenteredConic(4, 0, 1, Point(0, 0), -4)
        assert foci_given_a(cc, 4)[0] == pytest.approx((0, math.sqrt(3)))

    def test_rotation(self):
        assert rotation_angle(AXIS_ALIGNED) == 0.0
        assert rotation_angle(VERTICAL) == pytest.approx(math.pi / 2)
        assert tan_rotation(AXIS_ALIGNED) == 0.0

    def test_vertical_tan_undefined(self):
        with pytest.raises(VerticalMajorAxis):
            tan_rotation(VERTICAL)


def test_foci_given_a_rejects_minor_axis():
    cc = CenteredConic(1, 0, 4, Point(0, 0), -4)
    with pytest.raises(InconsistentInput):
        foci_given_a(cc, 1.0)
    with pytest.raises(InconsistentInput):
        foci_given_a(cc, -1.0)


def test_circle():
    g = analyze(GeneralConic(1, 0, 1, 0, 0, -1))
    assert (g.a, g.b, g.theta, g.c) == (1.0, 1.0, None, 0.0)
    assert g.f1 == g.f2 == (0.0, 0.0)
    assert center(GeneralConic(1, 0, 1, 0, 0, -1)) == (0.0, 0.0)
    with pytest.raises(IsCircle):
        rotation_angle(GeneralConic(1, 0, 1, 0, 0, -1))
    with pytest.raises(IsCircle):
        foci(GeneralConic(1, 0, 1, 0, 0, -1))


@pytest.mark.parametrize(
    "coeffs, exc",
    [
        ((1, 0, -1, 0, 0, -1), NotAnEllipse),
        ((1, 0, 0, 0, -1, 0), NotAnEllipse),
        ((1, 0, 1, 0, 0, 0), DegenerateConic),
        ((1, 0, 1, 0, 0, 1), DegenerateConic),
    ],
)
def test_non_ellipses_raise(coeffs, exc):
    with pytest.raises(exc):
        analyze(GeneralConic(*coeffs))


class TestSynthesize:
    def test_horizontal(self):
        assert synthesize(Point(0, 0), 2, 1, 0).as_tuple() == (1, 0, 4, 0, 0, -4)

    def test_vertical(self):
        assert synthesize(Point(0, 0), 2, 1, math.pi / 2).as_tuple() == (4, 0, 1, 0, 0, -4)

    def test_tilted_centered_coefficients(self):
        g = synthesize(Point(2, 3), 5, 2, math.pi / 3)
        assert g.A == pytest.approx(79 / 4, rel=1e-14)
        assert g.B == pytest.approx(-21 * math.sqrt(3) / 2, rel=1e-14)
        assert g.C == pytest.approx(37 / 4, rel=1e-14)
        assert math.hypot(g.A - g.C, g.B) == pytest.approx(21, rel=1e-14)
        assert g.evaluate(2, 3) == pytest.approx(-100, rel=1e-13)

    def test_tilted_round_trip(self):
        g = analyze(synthesize(Point(2, 3), 5, 2, math.pi / 3))
        assert g.center == pytest.approx((2, 3), abs=1e-9)
        assert (g.a, g.b, g.theta) == pytest.approx((5, 2, math.pi / 3), rel=1e-9)
        assert center(synthesize(Point(2, 3), 5, 2, math.pi / 3)) == pytest.approx((2, 3), abs=1e-12)

    def test_circle(self):
        assert synthesize(Point(1, 1), 2, 2).as_tuple() == (4, 0, 4, -8, -8, 8 - 16)

    @pytest.mark.parametrize(
        "args, msg",
        [
            ((1, 2, None), "semi-minor exceeds semi-major"),
            ((0, 0, None), "positive"),
            ((2, 1, None), "rotation angle"),
            ((2, 1, math.pi), "theta"),
            ((2, 1, -0.1), "theta"),
            ((2, 2, 0.5), "circle"),
            ((math.inf, 1, 0.0), "finite"),
        ],
    )
    def test_invalid(self, args, msg):
        with pytest.raises(InvalidGeometry, match=msg):
            synthesize(Point(0, 0), *args)


def test_branch_boundary_at_right_angle():
    # The first offset branch is used at exactly pi/2.
    g = synthesize(Point(0, 0), 2, 1, math.pi / 2)
    assert g.B == 0
    assert analyze(g).f2 == pytest.approx((0, math.sqrt(3)))


def test_round_trip_sample(rng):
    for ctr, a, b, th in random_geometry(rng, 300):
        if b / a < 1e-2:
            continue
        want = expected_geometry(ctr, a, b, th if a != b else None)
        got = analyze(synthesize(ctr, a, b, th if a != b else None))
        assert compare_geometry(got, want, 1e-8) == []


def test_positive_scaling(rng):
    for ctr, a, b, th in random_geometry(rng, 100):
        if a == b:
            continue
        g = synthesize(ctr, a, b, th)
        base = analyze(g)
        for lam in (1e-6, 1e-3, 1e3, 1e6):
            assert compare_geometry(analyze(g.scaled(lam)), base, 1e-9) == []


def test_focus_direction_matches_theta(rng):
    for ctr, a, b, th in random_geometry(rng, 300):
        if a == b:
            continue
        g = analyze(synthesize(ctr, a, b, th))
        ang = math.atan2(g.f2.y - g.center.y, g.f2.x - g.center.x) % math.pi
        gap = abs(ang - g.theta) % math.pi
        assert min(gap, math.pi - gap) <= 1e-9 * max(1.0, g.theta)


def test_cot_identity(rng):
    checked = 0
    for ctr, a, b, th in random_geometry(rng, 500):
        if b / a > 0.999 or th < 1e-4 or abs(th - math.pi / 2) < 1e-4:
            continue
        g = synthesize(ctr, a, b, th)
        t = rotation_angle(g)
        assert 1 / math.tan(2 * t) == pytest.approx((g.A - g.C) / g.B, rel=1e-8, abs=1e-8)
        checked += 1
    assert checked > 300


def test_tan_matches_angle(rng):
    for ctr, a, b, th in random_geometry(rng, 500):
        if a == b or abs(th - math.pi / 2) < 1e-6:
            continue
        g = synthesize(ctr, a, b, th)
        assert tan_rotation(g) == pytest.approx(math.tan(rotation_angle(g)), rel=1e-9, abs=1e-12)


def test_foci_given_a_agrees_with_foci(rng):
    for ctr, a, b, th in random_geometry(rng, 300):
        if b / a > 0.999 or b / a < 1e-2:
            continue
        g = synthesize(ctr, a, b, th)
        a_sq, _ = semi_axes(g)
        for p, q in zip(foci_given_a(to_centered_normalized(g), a_sq), foci(g)):
            assert p == pytest.approx(q, rel=1e-12, abs=1e-12 * max(1.0, abs(ctr.x), abs(ctr.y), a))


def test_invariants_of_analyze_output(rng):
    for ctr, a, b, th in random_geometry(rng, 300):
        g = analyze(synthesize(ctr, a, b, th if a != b else None))
        assert g.a >= g.b > 0
        assert g.c * g.c == pytest.approx(g.a * g.a - g.b * g.b, rel=1e-12, abs=1e-12 * g.a * g.a)
        assert (g.f1.x + g.f2.x) / 2 == pytest.approx(g.center.x, abs=1e-12 * max(1, abs(g.center.x)))
        assert (g.f1.y + g.f2.y) / 2 == pytest.approx(g.center.y, abs=1e-12 * max(1, abs(g.center.y)))
        assert g.f2.x >= g.center.x
        if g.theta is not None:
            assert 0 <= g.theta < math.pi
            assert 0 < g.eccentricity < 1


@settings(max_examples=200, deadline=None)
@given(
    st.floats(-50, 50), st.floats(-50, 50),
    st.floats(0.5, 50), st.floats(0.05, 0.95), st.floats(0, math.pi, exclude_max=True),
)
def test_hypothesis_round_trip(x0, y0, a, ratio, theta):
    b = a * ratio
    got = analyze(synthesize(Point(x0, y0), a, b, theta))
    assert compare_geometry(got, expected_geometry(Point(x0, y0), a, b, theta), 1e-8) == []


def test_exports():
    assert set(geometry.__all__) <= set(dir(geometry))
