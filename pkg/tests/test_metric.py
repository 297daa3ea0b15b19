import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symdisc.circle import circle_max
from symdisc.errors import DomainError, MapEscapesDomain, NotInterior
from symdisc.geometry import Point
from symdisc.holo import Arity, from_exprs, identity
from symdisc.metric import (Method, contraction_check, fc_origin, fc_royal, fc_s_axis, fc_sup,
                            fc_sup_alt, metric, s_axis_profile, s_axis_ratio, s_axis_ratio_max)
from symdisc.sampling import directions, disc_point, interior_points
from symdisc.schwarz.families import lift_map, phi_omega, royal_lift, z_blaschke
from symdisc.automorphism import DiscAutomorphism


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


@pytest.mark.parametrize("xi,expected", [((1, 0), 0.5), ((0, 1), 1.0), ((0, 0), 0.0)])
def test_sup_formula_at_origin(xi, expected):
    assert fc_sup((0, 0), xi).value == pytest.approx(expected, abs=1e-12)


def test_two_sup_formulas_agree():
    z, xi = (0.3 + 0.1j, 0.05), (1, 2j)
    assert rel(fc_sup(z, xi).value, fc_sup_alt(z, xi).value) < 1e-9


def test_s_axis_direction_example():
    t = 0.7
    assert fc_sup((t, 0), (1, t)).value == pytest.approx(0.85, rel=1e-9)
    assert fc_sup_alt((t, 0), (1, t)).value == pytest.approx(0.85, rel=1e-9)


@pytest.mark.parametrize("alpha,xi,expected", [(0, (1, 0), 0.5), (0.5, (1, 0), 2.0),
                                               (0.5, (1, 0.5), 2 / 3)])
def test_royal_closed_form_examples(alpha, xi, expected):
    assert fc_royal(alpha, xi) == pytest.approx(expected, rel=1e-12)
    z = (2 * alpha, alpha * alpha)
    assert rel(fc_sup(z, xi).value, expected) < 1e-9


@pytest.mark.parametrize("s,beta,expected", [(0, 1, 0.5), (0.5, 1, 0.75), (0.5j, 2j, 1.5)])
def test_s_axis_closed_form_examples(s, beta, expected):
    assert fc_s_axis(s, beta) == pytest.approx(expected, rel=1e-12)


def test_closed_forms_reject_boundary_parameters():
    with pytest.raises(DomainError):
        fc_royal(1.0, (1, 0))
    with pytest.raises(DomainError):
        fc_s_axis(1.0, 1)


def test_sup_refuses_points_outside():
    with pytest.raises(NotInterior):
        fc_sup((2, 1), (1, 0))
    with pytest.raises(NotInterior):
        fc_sup_alt((3, 0), (1, 0))


@pytest.mark.parametrize("s,expected", [(0, -0.5), (0.5, -1 / 6)])
def test_s_axis_ratio_max_examples(s, expected):
    assert s_axis_ratio_max(s) == pytest.approx(expected, abs=1e-15)


def test_s_axis_ratio_grid_sup_matches_closed_form():
    rng = np.random.default_rng(5)
    for _ in range(20):
        s = disc_point(rng, 0.99)
        best = circle_max(lambda t: s_axis_ratio(s, t))
        assert abs(best.value - s_axis_ratio_max(s)) < 1e-8


def test_s_axis_profile_decreases():
    rng = np.random.default_rng(6)
    for _ in range(20):
        r = rng.uniform(0.01, 0.99)
        a = np.linspace(-r, r, 400)
        assert np.all(np.diff(s_axis_profile(r, a)) < 0)


def test_metric_dispatches_to_origin_closed_form():
    res = metric((0, 0), (1, 1))
    assert res.method is Method.CLOSED_ORIGIN
    assert res.value == pytest.approx(1.5)
    assert metric((0.1, 0.01), (1, 0)).method is Method.SUP_FORMULA_1


def test_blow_up_near_p_axis_boundary():
    for theta in (0.0, 1.3, -2.2):
        t = 1 - 1e-4
        z = (0, t * cmath.exp(1j * theta))
        assert abs((1 - t) * fc_sup(z, (1, 0)).value - 0.5) < 1e-3


def test_ill_conditioned_flag_near_boundary():
    assert not fc_sup((0, 0.5), (1, 0)).ill_conditioned
    assert fc_sup((0, 1 - 1e-7), (1, 0)).ill_conditioned


@settings(max_examples=50, deadline=None)
@given(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
       st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
       st.complex_numbers(max_magnitude=4, allow_nan=False, allow_infinity=False))
def test_metric_is_absolutely_homogeneous(x1, x2, c):
    z = (0.2 - 0.4j, 0.1 + 0.05j)
    base = fc_sup(z, (x1, x2)).value
    scaled = fc_sup(z, (c * x1, c * x2)).value
    assert abs(scaled - abs(c) * base) <= 1e-9 * max(1.0, abs(c) * base)


def test_sup_formulas_agree_on_random_points():
    rng = np.random.default_rng(8)
    for z, xi in zip(interior_points(rng, 50, 0.95), directions(rng, 50)):
        assert rel(fc_sup(z, xi).value, fc_sup_alt(z, xi).value) < 1e-9


def test_contraction_identity_is_equality():
    c = contraction_check(identity(), (0.3, 0.05j), (1, -1))
    assert c.lhs == c.rhs
    assert c.holds


def test_contraction_equality_for_automorphism_lifts():
    rng = np.random.default_rng(9)
    for _ in range(10):
        h = DiscAutomorphism(cmath.exp(1j * rng.uniform(0, 6)), disc_point(rng, 0.7))
        z = interior_points(rng, 1, 0.9)[0]
        xi = directions(rng, 1)[0]
        c = contraction_check(lift_map(h), z, xi)
        assert rel(c.lhs, c.rhs) < 1e-8


def test_contraction_holds_for_royal_lift():
    f = royal_lift(z_blaschke(0.3 + 0.2j, 1.0), phi_omega(-1j))
    rng = np.random.default_rng(10)
    for z, xi in zip(interior_points(rng, 20), directions(rng, 20)):
        assert contraction_check(f, z, xi).holds


def test_contraction_accepts_explicit_jacobian():
    c = contraction_check(identity(), (0.1, 0.0), (1, 0), jacobian=lambda z: 2 * np.eye(2))
    assert c.lhs == pytest.approx(2 * c.rhs)
    assert not c.holds


def test_contraction_rejects_escaping_map():
    f = from_exprs(["3*s", "p"], Arity.G2_TO_G2)
    with pytest.raises(MapEscapesDomain):
        contraction_check(f, (0.9, 0), (1, 0))


def test_argmax_is_on_circle():
    res = fc_sup(Point(0.4, 0.1j), (1, 1j))
    assert abs(abs(res.argmax_omega) - 1) < 1e-12
