import cmath

import numpy as np
import pytest

from symdisc.errors import DomainError, HypothesisViolated
from symdisc.holo import Arity, from_exprs, identity
from symdisc.sampling import circle_point, disc_points
from symdisc.schwarz import (TheoremId, check_corollary, check_theorem_3_1, check_theorem_3_2,
                             check_theorem_3_2_remark, check_theorem_3_3, disc_boundary_schwarz,
                             disc_schwarz_check, interior_schwarz_check)
from symdisc.schwarz.families import (lift_map, p_axis_disc_sharp, p_axis_function_sharp,
                                      p_axis_sharp_a, p_axis_sharp_b, phi_omega,
                                      random_interior_fixing, random_p_axis_fixing,
                                      random_p_axis_pair, random_royal_fixing,
                                      random_s_axis_fixing, remark_map, royal_disc_sharp,
                                      royal_function_sharp, s_axis_sharp, skew_pair_map)
from symdisc.automorphism import DiscAutomorphism
from symdisc.schwarz.suite import P_AXIS_CORE

TIGHT = 1e-6


def q(rep, key):
    return complex(rep.quantities[key])


# -- disc ---------------------------------------------------------------------------

def test_disc_schwarz_examples():
    assert disc_schwarz_check(from_exprs(["z^2"]), 0.5)
    rot = from_exprs(["i*z"])
    assert disc_schwarz_check(rot, 0.3 + 0.4j)
    blaschke = from_exprs(["z*(z - 0.3)/(1 - 0.3*z)"])
    for z in disc_points(np.random.default_rng(0), 100):
        assert disc_schwarz_check(blaschke, z)


def test_disc_schwarz_requires_origin_fixed():
    with pytest.raises(HypothesisViolated) as info:
        disc_schwarz_check(from_exprs(["(z + 0.5)/2"]), 0.1)
    assert info.value.hypothesis == "origin-fixed"


def test_disc_boundary_identity_is_sharp():
    r = disc_boundary_schwarz(identity(Arity.DISC_TO_DISC))
    assert abs(r.fprime1 - 1) < 1e-10
    assert r.lower_bound == 1
    assert r.holds


def test_disc_boundary_square():
    r = disc_boundary_schwarz(from_exprs(["z^2"]))
    assert abs(r.fprime1 - 2) < 1e-8 and r.holds


def test_disc_boundary_mobius_equality():
    a = 0.3
    r = disc_boundary_schwarz(from_exprs([f"(z + {a})/(1 + {a}*z)"]))
    assert abs(r.fprime1 - 7 / 13) < 1e-8
    assert abs(r.lower_bound - 7 / 13) < 1e-12
    assert r.holds


def test_disc_boundary_requires_fixed_point():
    with pytest.raises(HypothesisViolated):
        disc_boundary_schwarz(from_exprs(["i*z"]))


# -- interior -------------------------------------------------------------------------

def test_interior_identity():
    rep = interior_schwarz_check(identity(), (0, 0))
    assert rep.overall
    assert max(abs(v - 1) for v in rep.quantities["eigenvalues"]) < 1e-12


def test_interior_nilpotent_square_lift():
    rep = interior_schwarz_check(from_exprs(["s^2 - 2*p", "p^2"]), (0, 0))
    assert rep.overall
    assert max(abs(v) for v in rep.quantities["eigenvalues"]) < 1e-8


def test_interior_automorphism_has_unit_determinant():
    c = 0.4 - 0.1j
    to_zero = DiscAutomorphism(1, c)
    h = to_zero.inverse().compose(DiscAutomorphism.rotation(cmath.exp(2j)).compose(to_zero))
    rep = interior_schwarz_check(lift_map(h), (2 * c, c * c))
    assert rep.overall
    assert abs(abs(q(rep, "det")) - 1) < 1e-7


def test_interior_random_fixed_point_maps():
    rng = np.random.default_rng(1)
    for _ in range(10):
        f, z = random_interior_fixing(rng)
        assert interior_schwarz_check(f, z).overall


def test_interior_requires_fixed_point():
    with pytest.raises(HypothesisViolated) as info:
        interior_schwarz_check(from_exprs(["s/2", "p/2"]), (0.2, 0))
    assert info.value.hypothesis == "interior-fixed"


# -- (e^{i theta}, 0) ------------------------------------------------------------------

@pytest.mark.parametrize("theta", [0.0, 1.0, -2.5])
def test_s_axis_identity(theta):
    rep = check_theorem_3_1(identity(), theta)
    assert rep.overall
    assert abs(q(rep, "lambda") - 1) < TIGHT and abs(q(rep, "mu") - 1) < TIGHT
    assert abs(rep.clause("iv").residual) < TIGHT
    assert abs(rep.clause("v-det").residual) < TIGHT


@pytest.mark.parametrize("theta", [0.0, 0.7, 2.0])
def test_s_axis_sharp_map(theta):
    rep = check_theorem_3_1(s_axis_sharp(theta), theta)
    assert rep.overall
    assert abs(q(rep, "mu") - 1) < TIGHT
    assert abs(q(rep, "lambda") - 2) < TIGHT
    assert rep.clause("iii").residual <= TIGHT


def test_s_axis_lower_bound_uses_image_of_origin():
    rng = np.random.default_rng(2)
    for _ in range(10):
        th = rng.uniform(0, 2 * np.pi)
        rep = check_theorem_3_1(random_s_axis_fixing(rng, th), th)
        assert rep.overall, [c.id for c in rep.failed()]
        g0 = q(rep, "g0")
        assert abs(rep.quantities["bound_ii"] - abs(1 - g0.conjugate()) ** 2 / (2 * (1 - abs(g0) ** 2))) < 1e-12


def test_s_axis_requires_boundary_fixed():
    with pytest.raises(HypothesisViolated) as info:
        check_theorem_3_1(from_exprs(["-s", "p"]), 0.0)
    assert info.value.hypothesis == "boundary-fixed"


# -- (0, e^{i theta}) ------------------------------------------------------------------

def test_p_axis_identity():
    rep = check_theorem_3_2(identity(), 0.4)
    assert rep.overall
    assert abs(q(rep, "lambda") - 1) < TIGHT and abs(q(rep, "mu") - 1) < TIGHT


@pytest.mark.parametrize("theta", [0.0, 0.7, 3.0])
def test_p_axis_sharp_a(theta):
    rep = check_theorem_3_2(p_axis_sharp_a(theta), theta)
    assert rep.overall
    assert abs(q(rep, "lambda") - 1) < TIGHT
    assert abs(q(rep, "f2_s") - 1j * cmath.exp(0.5j * theta)) < TIGHT


@pytest.mark.parametrize("theta", [0.0, 0.7, 3.0])
def test_p_axis_sharp_b(theta):
    rep = check_theorem_3_2(p_axis_sharp_b(theta), theta)
    assert rep.overall
    assert abs(q(rep, "lambda") - 2) < TIGHT and abs(q(rep, "mu") - 2) < TIGHT


@pytest.mark.parametrize("r", [0.3, 0.5, 0.9])
def test_remark_map_is_refused_and_has_nonzero_cross_derivative(r):
    theta = 0.6
    with pytest.raises(HypothesisViolated) as info:
        check_theorem_3_2(remark_map(r, theta), theta)
    assert info.value.hypothesis == "origin-fixed"
    res = check_theorem_3_2_remark(r, theta)
    assert res.matches and res.fixes_boundary_point and res.moves_origin
    assert abs(res.dH1_dp - 2j * r / (1 - r * r) * cmath.exp(-0.5j * theta)) < TIGHT


def test_remark_value_example():
    assert abs(check_theorem_3_2_remark(0.5, 0.0).dH1_dp - 4j / 3) < TIGHT


def test_remark_value_is_linear_for_small_r():
    r = 1e-3
    d = check_theorem_3_2_remark(r, 0.0).dH1_dp
    assert abs(d / r - 2j) < 1e-5


def test_remark_rejects_r_outside_unit_interval():
    with pytest.raises(DomainError):
        check_theorem_3_2_remark(1.0, 0.0)


def test_p_axis_random_symmetric_family():
    rng = np.random.default_rng(3)
    for _ in range(10):
        th = rng.uniform(0, 2 * np.pi)
        rep = check_theorem_3_2(random_p_axis_fixing(rng, th), th)
        assert rep.overall, [c.id for c in rep.failed()]


def test_skew_pair_breaks_lower_triangular_claim():
    # fixes 0 and (0, 1) but J = [[3, -i], [i, 3]] has eigenvalues 2 and 4
    rep = check_theorem_3_2(skew_pair_map(), 0.0)
    jac = np.array([[q(rep, "f1_s"), q(rep, "f1_p")], [q(rep, "f2_s"), q(rep, "f2_p")]])
    assert np.abs(jac - np.array([[3, -1j], [1j, 3]])).max() < 1e-7
    assert not rep.clause("i").passed
    assert not rep.clause("iii").passed
    assert all(rep.clause(cid).passed for cid in P_AXIS_CORE)
    assert abs(complex(rep.diagnostics["f1_p_rotated"]).imag) < 1e-7
    assert rep.diagnostics["lambda_excess"] >= -1e-7


def test_free_pairs_satisfy_the_weaker_statement():
    rng = np.random.default_rng(4)
    for _ in range(20):
        th = rng.uniform(0, 2 * np.pi)
        rep = check_theorem_3_2(random_p_axis_pair(rng, th), th)
        assert all(rep.clause(cid).passed for cid in P_AXIS_CORE)
        assert abs(complex(rep.diagnostics["f1_p_rotated"]).imag) < 1e-6
        assert rep.diagnostics["lambda_excess"] >= -1e-6


# -- (2 alpha, alpha^2) ----------------------------------------------------------------

def test_royal_identity_is_tight():
    rep = check_theorem_3_3(identity(), 1.0)
    assert rep.overall
    expected = {"lambda": 1, "A": 0, "B": 1, "B_minus_A_alpha": 1, "mu": 1}
    for key, value in expected.items():
        assert abs(q(rep, key) - value) < TIGHT, key


def test_royal_square_lift():
    rep = check_theorem_3_3(from_exprs(["s^2 - 2*p", "p^2"]), 1.0)
    assert rep.overall
    assert abs(q(rep, "lambda") - 2) < TIGHT
    assert abs(q(rep, "B_minus_A_alpha") - 4) < TIGHT


def test_royal_random_families():
    rng = np.random.default_rng(5)
    for _ in range(8):
        a = circle_point(rng)
        rep = check_theorem_3_3(random_royal_fixing(rng, a), a)
        assert rep.overall, [c.id for c in rep.failed()]
        assert abs(q(rep, "B_minus_A_alpha").imag) <= 1e-6


def test_royal_requires_unimodular_alpha():
    with pytest.raises(HypothesisViolated) as info:
        check_theorem_3_3(identity(), 0.5)
    assert info.value.hypothesis == "unimodular"


def test_theorem_checkers_require_g2_self_map():
    with pytest.raises(HypothesisViolated) as info:
        check_theorem_3_2(phi_omega(1), 0.0)
    assert info.value.hypothesis == "arity"


# -- corollaries ------------------------------------------------------------------------

def test_p_axis_function_sharp():
    th = 0.7
    rep = check_corollary(TheoremId.C32, p_axis_function_sharp(th), theta=th)
    assert rep.overall
    assert abs(q(rep, "value") - 1) < TIGHT


def test_royal_function_sharp():
    rep = check_corollary(TheoremId.C33, royal_function_sharp(cmath.exp(2j)), alpha=1.0)
    assert rep.overall
    assert abs(q(rep, "value") - 0.5) < TIGHT


def test_p_axis_disc_sharp():
    lam, th = cmath.exp(0.3j), 0.7
    rep = check_corollary(TheoremId.C35, p_axis_disc_sharp(lam, th), lam=lam, theta=th)
    assert rep.overall
    assert abs(q(rep, "value") - 1) < TIGHT


def test_royal_disc_sharp():
    lam, alpha = cmath.exp(-1.1j), cmath.exp(0.9j)
    rep = check_corollary(TheoremId.C36, royal_disc_sharp(lam, alpha), lam=lam, alpha=alpha)
    assert rep.overall
    assert abs(q(rep, "value") - 2) < TIGHT


def test_s_axis_function_routes_through_theorem():
    th = 1.2
    e = cmath.exp(1j * th)
    rep = check_corollary(TheoremId.C31, phi_omega(e.conjugate()), theta=th)
    assert rep.overall
    assert rep.diagnostics["theorem"] == "3.1"
    assert any(c.id.startswith("thm3.1:") for c in rep.clauses)


def test_s_axis_disc_routes_through_theorem():
    lam, th = cmath.exp(0.5j), -0.4
    c = lam.conjugate() * cmath.exp(1j * th)
    phi = from_exprs([f"({c.real}+({c.imag})*i)*z", "0"], Arity.DISC_TO_G2)
    rep = check_corollary(TheoremId.C34, phi, lam=lam, theta=th)
    assert rep.overall
    assert rep.diagnostics["theorem"] == "3.1"


def test_corollary_hypotheses():
    with pytest.raises(HypothesisViolated) as info:
        check_corollary(TheoremId.C32, from_exprs(["s/2"]), theta=0.0)
    assert info.value.hypothesis == "boundary-value"
    with pytest.raises(HypothesisViolated) as info:
        check_corollary(TheoremId.C35, identity(), theta=0.0)
    assert info.value.hypothesis == "arity"
    with pytest.raises(ValueError):
        check_corollary(TheoremId.ROYAL, identity())
