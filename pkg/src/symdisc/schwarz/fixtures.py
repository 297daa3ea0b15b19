"""Named maps with known derivative data at a boundary or interior fixed point.

Every fixture carries the quantities it is expected to produce together with
a provenance tag: ``STATED`` for values published with the sharpness
examples, ``DERIVED`` for values computed here by an independent route
(closed-form calculus, not the finite-difference differentiator) and
``TRIVIAL`` for identity-type cases.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from ..automorphism import DiscAutomorphism
from ..errors import HypothesisViolated
from ..geometry import BoundaryPoint, Point
from ..holo.maps import Arity, HoloMap, identity, royal_lift
from .checks import (check_corollary, check_theorem_3_1, check_theorem_3_2,
                     check_theorem_3_2_remark, check_theorem_3_3, interior_schwarz_check)
from .families import (p_axis_function_sharp, royal_function_sharp, p_axis_disc_sharp, royal_disc_sharp, lift_map,
                       phi_omega, remark_map, s_axis_sharp, p_axis_sharp_a, p_axis_sharp_b,
                       z_blaschke)
from .report import TOL_FIRST, CheckReport, Clause, TheoremId, equal

EXPECTED_TOL = 1e-6
FIXTURE_SEED = 20240


@dataclass(frozen=True)
class Expected:
    value: complex
    provenance: str


@dataclass(frozen=True)
class Fixture:
    """A map, the theorem it illustrates, where to look, and what to find there.

    ``boundary_point`` is None for the interior fixture, whose fixed point is
    stored in ``params["fixed"]``.
    """

    name: str
    map: HoloMap
    theorem: TheoremId
    boundary_point: BoundaryPoint | None
    expected: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    origin_fixing: bool = True
    note: str = ""


def _stated(v) -> Expected:
    return Expected(complex(v), "STATED")


def _derived(v) -> Expected:
    return Expected(complex(v), "DERIVED")


def _trivial(v) -> Expected:
    return Expected(complex(v), "TRIVIAL")


def _z_blaschke_derivative(a: complex, c: complex, z: complex) -> complex:
    """``d/dz [c z (z - a)/(1 - conj(a) z)]`` by the quotient rule."""
    ac = a.conjugate()
    den = 1 - ac * z
    return c * ((2 * z - a) * den + ac * z * (z - a)) / den ** 2


def _royal_lift_fixture(rng: np.random.Generator) -> Fixture:
    alpha = cmath.exp(1j * rng.uniform(0, 2 * np.pi))
    a = 0.6 * np.sqrt(rng.uniform()) * cmath.exp(1j * rng.uniform(0, 2 * np.pi))
    omega = cmath.exp(1j * rng.uniform(0, 2 * np.pi))
    g = z_blaschke(a, alpha)
    # the unimodular coefficient of g, from g(alpha) = alpha
    c = alpha * (1 - a.conjugate() * alpha) / (alpha * (alpha - a))
    c /= abs(c)
    f = royal_lift(g, phi_omega(omega), "royal-lift-random")
    # Phi_w has (d/ds + alpha d/dp) = 1/2 at the corner, so lambda = g'(alpha)
    lam = _z_blaschke_derivative(a, c, alpha)
    return Fixture("royal-lift-random", f, TheoremId.ROYAL, BoundaryPoint.royal(alpha),
                   {"lambda": _derived(lam)}, {"alpha": alpha},
                   note="z -> (2 g(Phi_w), g(Phi_w)^2) with g a degree-two Blaschke product")


def _automorphism_fixture(rng: np.random.Generator) -> Fixture:
    centre = 0.5 * np.sqrt(rng.uniform()) * cmath.exp(1j * rng.uniform(0, 2 * np.pi))
    turn = cmath.exp(1j * rng.uniform(0, 2 * np.pi))
    to_zero = DiscAutomorphism(1, centre)
    h = to_zero.inverse().compose(DiscAutomorphism.rotation(turn).compose(to_zero))
    f = lift_map(h, "auto-lift-random")
    fixed = Point(2 * centre, centre * centre)
    # conjugate of (s, p) -> (turn s, turn^2 p): eigenvalues turn, turn^2
    return Fixture("auto-lift-random", f, TheoremId.INTERIOR, None,
                   {"abs_det": _derived(1.0), "max_eigenvalue_modulus": _derived(1.0)},
                   {"fixed": fixed}, origin_fixing=False,
                   note="lift of a disc rotation about an interior point")


def fixtures(seed: int = FIXTURE_SEED) -> list[Fixture]:
    """All named fixtures, sorted by name."""
    rng = np.random.default_rng(seed)
    ident = identity(Arity.G2_TO_G2)
    th = 0.7
    eh = cmath.exp(0.5j * th)
    lam5, lam6, alpha6 = cmath.exp(0.3j), cmath.exp(-1.1j), cmath.exp(0.9j)
    # s-axis sharp map by hand: J = [[2, -conj(e)], [0, 1]] at (e, 0)
    out = [
        Fixture("identity-s-axis", ident, TheoremId.S_AXIS, BoundaryPoint.type_s(0.0),
                {"lambda": _trivial(1), "mu": _trivial(1), "det": _trivial(1)}, {"theta": 0.0}),
        Fixture("identity-p-axis", ident, TheoremId.P_AXIS, BoundaryPoint.type_p(th),
                {"lambda": _trivial(1), "mu": _trivial(1)}, {"theta": th}),
        Fixture("identity-royal", ident, TheoremId.ROYAL, BoundaryPoint.royal(1.0),
                {"lambda": _trivial(1), "A": _trivial(0), "B": _trivial(1),
                 "B_minus_A_alpha": _trivial(1), "mu": _trivial(1)}, {"alpha": 1.0}),
        Fixture("thm3.1-sharp", s_axis_sharp(th), TheoremId.S_AXIS, BoundaryPoint.type_s(th),
                {"mu": _stated(1), "lambda": _derived(2)}, {"theta": th}),
        Fixture("thm3.2-sharp-a", p_axis_sharp_a(th), TheoremId.P_AXIS, BoundaryPoint.type_p(th),
                {"lambda": _stated(1), "f2_s": _stated(1j * eh)}, {"theta": th}),
        Fixture("thm3.2-sharp-b", p_axis_sharp_b(th), TheoremId.P_AXIS, BoundaryPoint.type_p(th),
                {"lambda": _stated(2), "mu": _stated(2)}, {"theta": th}),
        Fixture("remark-H", remark_map(0.5, 0.0), TheoremId.P_AXIS_REMARK,
                BoundaryPoint.type_p(0.0), {"dH1_dp": _stated(4j / 3)},
                {"r": 0.5, "theta": 0.0}, origin_fixing=False),
        Fixture("thm3.3-square-lift", _square_lift(), TheoremId.ROYAL, BoundaryPoint.royal(1.0),
                {"lambda": _derived(2), "A": _derived(2), "B": _derived(6),
                 "B_minus_A_alpha": _derived(4), "mu": _derived(4)}, {"alpha": 1.0}),
        Fixture("cor3.2-sharp", p_axis_function_sharp(th), TheoremId.C32, BoundaryPoint.type_p(th),
                {"value": _stated(1)}, {"theta": th}),
        Fixture("cor3.3-sharp", royal_function_sharp(cmath.exp(2j)), TheoremId.C33,
                BoundaryPoint.royal(1.0), {"value": _stated(0.5)}, {"alpha": 1.0}),
        Fixture("cor3.5-sharp", p_axis_disc_sharp(lam5, th), TheoremId.C35, BoundaryPoint.type_p(th),
                {"value": _stated(1)}, {"lam": lam5, "theta": th}),
        Fixture("cor3.6-sharp", royal_disc_sharp(lam6, alpha6), TheoremId.C36,
                BoundaryPoint.royal(alpha6), {"value": _stated(2)},
                {"lam": lam6, "alpha": alpha6}),
        _royal_lift_fixture(rng),
        _automorphism_fixture(rng),
    ]
    return sorted(out, key=lambda fx: fx.name)


def _square_lift() -> HoloMap:
    from ..holo.maps import from_exprs

    return from_exprs(["s^2 - 2*p", "p^2"], Arity.G2_TO_G2, "square-lift")


def fixture_by_name(name: str, seed: int = FIXTURE_SEED) -> Fixture:
    for fx in fixtures(seed):
        if fx.name == name:
            return fx
    raise KeyError(name)


def _remark_report(fx: Fixture, tol: float) -> CheckReport:
    r, theta = fx.params["r"], fx.params["theta"]
    res = check_theorem_3_2_remark(r, theta, tol)
    try:
        check_theorem_3_2(fx.map, theta, tol)
        refused = None
    except HypothesisViolated as err:
        refused = err.hypothesis
    rep = CheckReport(TheoremId.P_AXIS_REMARK,
                      {"dH1_dp": res.dH1_dp, "expected_formula": res.expected}, subject=fx.name)
    rep.clauses += [
        Clause("formula", res.matches, abs(res.dH1_dp - res.expected), tol,
               "dH1/dp matches 2ri e^{-i theta/2}/(1 - r^2)"),
        Clause("fixes-boundary", res.fixes_boundary_point, 0.0, 0.0, "H(z0) = z0"),
        Clause("moves-origin", res.moves_origin, 0.0, 0.0, "H(0) != 0"),
        Clause("refused", refused == "origin-fixed", 0.0, 0.0,
               "the p-axis checker rejects H on the origin hypothesis"),
    ]
    return rep


def check_fixture(fx: Fixture, tol: float = TOL_FIRST) -> CheckReport:
    """Run the fixture's checker, then compare against its expected quantities."""
    p = fx.params
    t = fx.theorem
    if t is TheoremId.S_AXIS:
        rep = check_theorem_3_1(fx.map, p["theta"], tol)
    elif t is TheoremId.P_AXIS:
        rep = check_theorem_3_2(fx.map, p["theta"], tol)
    elif t is TheoremId.ROYAL:
        rep = check_theorem_3_3(fx.map, p["alpha"], tol)
    elif t is TheoremId.INTERIOR:
        rep = interior_schwarz_check(fx.map, p["fixed"], tol)
        ev = rep.quantities["eigenvalues"]
        rep.quantities["abs_det"] = abs(rep.quantities["det"])
        rep.quantities["max_eigenvalue_modulus"] = max(abs(v) for v in ev)
    elif t is TheoremId.P_AXIS_REMARK:
        rep = _remark_report(fx, tol)
    else:
        rep = check_corollary(t, fx.map, **p, tol=tol)
    rep.subject = fx.name
    for key, exp in sorted(fx.expected.items()):
        rep.clauses.append(equal(f"expected:{key}", rep.quantities[key], exp.value,
                                 EXPECTED_TOL, f"{key} = {exp.value} [{exp.provenance}]"))
    return rep
