"""Scenario validation, derivation, and the probe line."""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicircle import (
    InvalidScenario,
    Line,
    Ordering,
    ParseError,
    Point2,
    ScenarioConfig,
    circle_contains,
    derive,
    parse_scenario,
    power_of_point,
    probe_line,
    radical_axis,
    validate,
)

positives = st.fractions(min_value=F(1, 20), max_value=50, max_denominator=20)


def admissible_configs():
    return (
        st.builds(ScenarioConfig, positives, positives, positives)
        .filter(lambda cfg: 2 * cfg.a > abs(cfg.r1 - cfg.r2))
    )


class TestValidate:
    def test_intersecting(self):
        assert validate(ScenarioConfig(2, 3, 2)) is Ordering.INTERSECTING_ABCD

    def test_disjoint(self):
        assert validate(ScenarioConfig(5, 2, 2)) is Ordering.DISJOINT_ACBD

    def test_externally_tangent(self):
        assert validate(ScenarioConfig(2, 2, 2)) is Ordering.EXTERNALLY_TANGENT

    @pytest.mark.parametrize(
        "a,r1,r2",
        [(0, 1, 1), (-2, 3, 2), (2, 0, 1), (2, 3, -1), (1, 5, 1), (1, 1, 3), (1, 4, 2)],
    )
    def test_rejections(self, a, r1, r2):
        with pytest.raises(InvalidScenario):
            validate(ScenarioConfig(a, r1, r2))


class TestDerive:
    def test_worked_scene(self):
        scene = derive(ScenarioConfig(2, 3, 2))
        assert scene.A == Point2(-5, 0)
        assert scene.B == Point2(0, 0)
        assert scene.C == Point2(1, 0)
        assert scene.D == Point2(4, 0)
        assert scene.radical_axis_x == F(5, 8)
        assert scene.Z == Point2(F(5, 8), 0)

    def test_tangent_keeps_b_equal_c(self):
        scene = derive(ScenarioConfig(1, 1, 1))
        assert scene.A == Point2(-2, 0)
        assert scene.B == scene.C == Point2(0, 0)
        assert scene.D == Point2(2, 0)

    def test_symmetric_disjoint(self):
        scene = derive(ScenarioConfig(5, 2, 2))
        assert (scene.A, scene.C, scene.B, scene.D) == (
            Point2(-7, 0), Point2(-3, 0), Point2(3, 0), Point2(7, 0)
        )
        assert scene.radical_axis_x == 0

    def test_containment_rejected(self):
        with pytest.raises(InvalidScenario):
            derive(ScenarioConfig(1, 5, 1))

    @given(admissible_configs())
    def test_axis_points_on_circles_and_axis(self, cfg):
        scene = derive(cfg)
        assert circle_contains(scene.k1, scene.A) and circle_contains(scene.k1, scene.C)
        assert circle_contains(scene.k2, scene.B) and circle_contains(scene.k2, scene.D)
        for point in (scene.A, scene.B, scene.C, scene.D, scene.Z):
            assert scene.axis.contains(point)

    @given(admissible_configs())
    def test_ordering_matches_point_order(self, cfg):
        scene = derive(cfg)
        ordering = validate(cfg)
        if ordering is Ordering.INTERSECTING_ABCD:
            assert scene.A.x < scene.B.x < scene.C.x < scene.D.x
        elif ordering is Ordering.DISJOINT_ACBD:
            assert scene.A.x < scene.C.x < scene.B.x < scene.D.x
        else:
            assert scene.B == scene.C

    @given(admissible_configs())
    def test_radical_axis_agrees_with_kernel(self, cfg):
        scene = derive(cfg)
        assert radical_axis(scene.k1, scene.k2) == Line(1, 0, -scene.radical_axis_x)
        assert power_of_point(scene.k1, scene.Z) == power_of_point(scene.k2, scene.Z)


class TestProbeLine:
    def test_vertical_at_p(self):
        assert probe_line(ScenarioConfig(2, 3, 2), F(5, 8)) == Line(1, 0, F(-5, 8))

    def test_y_axis(self):
        assert probe_line(ScenarioConfig(2, 3, 2), 0) == Line(1, 0, 0)

    def test_through_a(self):
        scene = derive(ScenarioConfig(2, 3, 2))
        line = probe_line(ScenarioConfig(2, 3, 2), -5)
        assert line.contains(scene.A)


class TestParseScenario:
    def test_whitespace_form(self):
        assert parse_scenario("2 3 2") == ScenarioConfig(2, 3, 2)
        assert parse_scenario("  1/2\t3/4  0.25 ") == ScenarioConfig(F(1, 2), F(3, 4), F(1, 4))

    def test_json_form(self):
        text = '{"a": "2", "r1": "3", "r2": "2"}'
        assert parse_scenario(text) == ScenarioConfig(2, 3, 2)

    def test_json_rejects_wrong_keys(self):
        with pytest.raises(ParseError):
            parse_scenario('{"a": "2", "r1": "3"}')
        with pytest.raises(ParseError):
            parse_scenario('{"a": "2", "r1": "3", "r2": "2", "x": "1"}')

    def test_wrong_arity(self):
        with pytest.raises(ParseError):
            parse_scenario("2 3")
        with pytest.raises(ParseError):
            parse_scenario("2 3 2 1")

    def test_bad_json(self):
        with pytest.raises(ParseError):
            parse_scenario("{not json")
