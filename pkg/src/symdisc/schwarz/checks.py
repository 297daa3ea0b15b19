"""Numerical verification of the boundary Schwarz lemmas on G2.

Each checker validates the hypotheses first (raising HypothesisViolated),
then differentiates the map at the boundary fixed point and evaluates every
conclusion as a :class:`Clause`.  The quantities lambda and mu come from
their explicit partial-derivative formulas; the generic eigensolver is only
a cross-check recorded in the diagnostics.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, HolomorphyViolation, HypothesisViolated, PoleHit
from ..geometry import Point, condition_c2_roots, defining_function, is_interior
from ..holo.diff import (derivative, exact_second_derivatives, jacobian, jacobian_with_residual,
                         second_derivatives)
from ..holo.maps import Arity, HoloMap
from .eig import eig2x2, multiset_distance
from .report import (TOL_FIRST, TOL_SECOND, CheckReport, Clause, TheoremId, at_most,
                     equal, is_real)

FIXED_TOL = 1e-8
ORIGIN_TOL = 1e-8
DISC_TOL = 1e-10
RADIAL_T = (1 - 1e-3, 1 - 1e-4)


def _require_arity(f: HoloMap, arity: Arity) -> None:
    if f.arity is not arity:
        raise HypothesisViolated("arity", f"{f.name} is {f.arity.value}, expected {arity.value}")


def _distance(a, b) -> float:
    return max(abs(complex(x) - complex(y)) for x, y in zip(a, b))


def _require_fixed(f: HoloMap, z0, tol: float = FIXED_TOL) -> None:
    r = _distance(f.values(tuple(z0)), z0)
    if r > tol:
        raise HypothesisViolated("boundary-fixed", f"|f(z0) - z0| = {r:.3e} at z0 = {tuple(z0)}", r)


def _require_origin(f: HoloMap, tol: float = ORIGIN_TOL) -> None:
    zero = (0j,) * f.arity.n_in
    r = max(abs(w) for w in f.values(zero))
    if r > tol:
        raise HypothesisViolated("origin-fixed", f"|f(0)| = {r:.3e}", r)


def _symmetric_residual(lam: complex, mu: complex, tr: complex, det: complex) -> float:
    """How far ``{lam, mu}`` is from the roots of ``x^2 - tr x + det``."""
    return max(abs(lam + mu - tr), abs(lam * mu - det))


def _eigen_diagnostics(jac: np.ndarray, lam: complex, mu: complex) -> dict:
    pair = eig2x2(jac)
    return {"eig2x2": [pair.lambda_, pair.mu], "eig2x2_defective": pair.defective,
            "eig2x2_distance": multiset_distance((lam, mu), pair.values)}


def _radial(f: HoloMap, curve, quantity) -> dict:
    """Evaluate ``quantity(J_f)`` along ``curve(t)`` and extrapolate linearly to t = 1."""
    try:
        t1, t2 = RADIAL_T
        q1 = quantity(jacobian(f, curve(t1)))
        q2 = quantity(jacobian(f, curve(t2)))
    except (PoleHit, HolomorphyViolation) as err:
        return {"radial_error": str(err)}
    return {"radial_values": [q1, q2], "radial_extrapolated": q2 + (q2 - q1) * (1 - t2) / (t2 - t1)}


# -- the disc theorems ----------------------------------------------------------

def disc_schwarz_check(f: HoloMap, z: complex) -> bool:
    """``|f(z)| <= |z|`` for a disc self-map fixing the origin."""
    _require_arity(f, Arity.DISC_TO_DISC)
    f0 = abs(f(0))
    if f0 > DISC_TOL:
        raise HypothesisViolated("origin-fixed", f"|f(0)| = {f0:.3e}", f0)
    return bool(abs(f(z)) <= abs(z) + DISC_TOL)


@dataclass(frozen=True)
class DiscBoundaryResult:
    fprime1: complex
    lower_bound: float
    holds: bool


def disc_boundary_schwarz(f: HoloMap, tol: float = TOL_FIRST) -> DiscBoundaryResult:
    """``f'(1) >= |1 - conj(f(0))|^2 / (1 - |f(0)|^2)`` when ``f(1) = 1``."""
    _require_arity(f, Arity.DISC_TO_DISC)
    r = abs(f(1.0) - 1)
    if r > FIXED_TOL:
        raise HypothesisViolated("boundary-fixed", f"|f(1) - 1| = {r:.3e}", r)
    f0 = f(0.0)
    if abs(f0) >= 1:
        raise HypothesisViolated("self-map", f"|f(0)| = {abs(f0)!r} >= 1")
    bound = abs(1 - f0.conjugate()) ** 2 / (1 - abs(f0) ** 2)
    d = derivative(f, 1.0)
    holds = abs(d.imag) <= tol and d.real >= bound - tol
    return DiscBoundaryResult(d, bound, bool(holds))


def interior_schwarz_check(f: HoloMap, fixed, tol: float = TOL_FIRST) -> CheckReport:
    """Eigenvalues and determinant of ``J_f`` at an interior fixed point are at most 1 in modulus."""
    _require_arity(f, Arity.G2_TO_G2)
    fixed = Point(*fixed)
    if not is_interior(fixed):
        raise HypothesisViolated("interior-point", f"{tuple(fixed)} is not in G2")
    r = _distance(f.values(tuple(fixed)), fixed)
    if r > FIXED_TOL:
        raise HypothesisViolated("interior-fixed", f"|f(z) - z| = {r:.3e}", r)
    jac = jacobian(f, fixed)
    pair = eig2x2(jac)
    det = complex(np.linalg.det(jac))
    top = max(abs(pair.lambda_), abs(pair.mu))
    clauses = [
        at_most("eigenvalues", top, 1.0, tol, "max |eigenvalue| <= 1"),
        at_most("det", abs(det), 1.0, tol, "|det J| <= 1"),
    ]
    q = {"eigenvalues": [pair.lambda_, pair.mu], "det": det, "jacobian": jac}
    return CheckReport(TheoremId.INTERIOR, q, clauses, subject=f.name)


# -- (e^{i theta}, 0) ------------------------------------------------------------

def _g_map(f: HoloMap, theta: float) -> HoloMap:
    e = cmath.exp(1j * theta)

    def g(args):
        f1, f2 = f.values((args[0] * e, 0j))
        return (e ** -2 * (e * f1 - 2 * f2) / (2 - e.conjugate() * f1),)

    return HoloMap(g, Arity.DISC_TO_DISC, f"g[{f.name}]")


def check_theorem_3_1(f: HoloMap, theta: float, tol: float = TOL_FIRST) -> CheckReport:
    _require_arity(f, Arity.G2_TO_G2)
    e = cmath.exp(1j * theta)
    ec = e.conjugate()
    z0 = (e, 0j)
    _require_fixed(f, z0)
    f00 = Point(*f.values((0j, 0j)))
    if not is_interior(f00):
        raise HypothesisViolated("self-map", f"f(0, 0) = {tuple(f00)} is not in G2")

    jr = jacobian_with_residual(f, z0)
    jac = jr.matrix
    (f1s, f1p), (f2s, f2p) = jac
    lam, lam_alt = f1s - ec * f2s, f2p - e * f1p
    mu, mu_alt = f1s + e * f1p, ec * f2s + f2p
    det, tr = f1s * f2p - f1p * f2s, f1s + f2p
    g0 = e ** -2 * (e * f00.s - 2 * f00.p) / (2 - ec * f00.s)
    bound = 0.5 * abs(1 - g0.conjugate()) ** 2 / (1 - abs(g0) ** 2)
    normal = np.array([e, -e * e])
    resid_iii = float(np.linalg.norm(jac.conj().T @ normal - lam.real * normal))
    tangent = np.array([1, e])
    resid_iv = float(np.linalg.norm(jac @ tangent - mu * tangent))

    clauses = [
        Clause("i", _symmetric_residual(lam, mu, tr, det) <= tol,
               _symmetric_residual(lam, mu, tr, det), tol, "lambda, mu are the eigenvalues of J"),
        is_real("ii-real", lam, tol, "lambda is real"),
        at_most("ii", bound, lam.real, tol, "lambda >= |1 - conj(g0)|^2 / (2 (1 - |g0|^2))"),
        Clause("iii", resid_iii <= tol, resid_iii, tol, "conj(J)' n = lambda n for the normal n"),
        equal("iii-b", lam, lam_alt, tol, "both expressions of lambda agree"),
        at_most("iv", abs(mu), 1.0, tol, "|mu| <= 1"),
        equal("iv-b", mu, mu_alt, tol, "both expressions of mu agree"),
        Clause("iv-eigvec", resid_iv <= tol, resid_iv, tol, "J (1, e^{i theta})' = mu (1, e^{i theta})'"),
        at_most("v-det", abs(det), lam.real, tol, "|det J| <= lambda"),
        at_most("v-tr", abs(tr), lam.real + 1, tol, "|tr J| <= lambda + 1"),
    ]
    q = {"lambda": lam, "lambda_alt": lam_alt, "mu": mu, "mu_alt": mu_alt, "det": det,
         "trace": tr, "g0": g0, "bound_ii": bound, "f1_s": f1s, "f1_p": f1p,
         "f2_s": f2s, "f2_p": f2p}
    diag = _eigen_diagnostics(jac, lam, mu)
    diag["cr_residual"] = jr.cr_residual
    try:
        diag["g_prime_1_half"] = derivative(_g_map(f, theta), 1.0) / 2
    except (PoleHit, HolomorphyViolation) as err:
        diag["g_prime_1_error"] = str(err)
    diag.update(_radial(f, lambda t: (t * e, 0j),
                        lambda j: j[0, 0] - ec * j[1, 0]))
    return CheckReport(TheoremId.S_AXIS, q, clauses, diag, f.name)


# -- (0, e^{i theta}) ------------------------------------------------------------

def check_theorem_3_2(f: HoloMap, theta: float, tol: float = TOL_FIRST) -> CheckReport:
    _require_arity(f, Arity.G2_TO_G2)
    e = cmath.exp(1j * theta)
    z0 = (0j, e)
    _require_origin(f)
    _require_fixed(f, z0)

    jr = jacobian_with_residual(f, z0)
    jac = jr.matrix
    (f1s, f1p), (f2s, f2p) = jac
    lam, mu = f2p, f1s
    det, tr = f1s * f2p - f1p * f2s, f1s + f2p
    sym = _symmetric_residual(lam, mu, tr, det)
    clauses = [
        Clause("i", sym <= tol, sym, tol, "lambda, mu are the eigenvalues of J"),
        is_real("ii-real", lam, tol, "lambda is real"),
        at_most("ii", 1.0, lam.real, tol, "lambda >= 1"),
        equal("iii", f1p, 0, tol, "df1/dp = 0 (J lower triangular)"),
        at_most("iv-mu", abs(mu), lam.real, tol, "|mu| <= lambda"),
        at_most("iv-f2s", abs(f2s), lam.real, tol, "|df2/ds| <= lambda"),
        at_most("v-det", abs(det), lam.real ** 2, tol, "|det J| <= lambda^2"),
        at_most("v-tr", abs(tr), 2 * lam.real, tol, "|tr J| <= 2 lambda"),
    ]
    q = {"lambda": lam, "mu": mu, "det": det, "trace": tr, "f1_s": f1s, "f1_p": f1p,
         "f2_s": f2s, "f2_p": f2p}
    diag = _eigen_diagnostics(jac, lam, mu)
    diag["cr_residual"] = jr.cr_residual
    # what survives when df1/dp != 0: i e^{i theta/2} df1/dp is real and lambda >= 1 + |df1/dp|
    diag["f1_p_rotated"] = 1j * cmath.exp(0.5j * theta) * f1p
    diag["lambda_excess"] = lam.real - 1 - abs(f1p)
    diag.update(_radial(f, lambda t: (0j, t * e), lambda j: j[1, 1]))
    return CheckReport(TheoremId.P_AXIS, q, clauses, diag, f.name)


@dataclass(frozen=True)
class RemarkResult:
    dH1_dp: complex
    expected: complex
    matches: bool
    fixes_boundary_point: bool
    moves_origin: bool


def check_theorem_3_2_remark(r: float, theta: float, tol: float = TOL_FIRST) -> RemarkResult:
    """The origin hypothesis cannot be dropped: the remark map has ``dH1/dp != 0``."""
    from .families import remark_map

    if not 0 < r < 1:
        raise DomainError(f"r = {r!r} must lie in (0, 1)")
    H = remark_map(r, theta)
    e = cmath.exp(1j * theta)
    fixes = _distance(H.values((0j, e)), (0j, e)) <= DISC_TOL
    moves = max(abs(w) for w in H.values((0j, 0j))) > ORIGIN_TOL
    d = complex(jacobian(H, (0j, e))[0, 1])
    expected = 2j * r / (1 - r * r) * cmath.exp(-0.5j * theta)
    return RemarkResult(d, expected, abs(d - expected) <= tol, bool(fixes), bool(moves))


# -- (2 alpha, alpha^2) ----------------------------------------------------------

def _unimodular(alpha: complex, what: str = "alpha") -> complex:
    alpha = complex(alpha)
    if abs(abs(alpha) - 1) > 1e-12:
        raise HypothesisViolated("unimodular", f"|{what}| = {abs(alpha)!r}, expected 1")
    return alpha


def _second(f: HoloMap, z0, component: int):
    """Exact second partials for expression maps, the stencil otherwise."""
    exact = exact_second_derivatives(f, z0, component)
    return exact if exact is not None else second_derivatives(f, z0, component)


def check_theorem_3_3(f: HoloMap, alpha: complex, tol: float = TOL_FIRST,
                      tol2: float = TOL_SECOND) -> CheckReport:
    _require_arity(f, Arity.G2_TO_G2)
    alpha = _unimodular(alpha)
    ac = alpha.conjugate()
    z0 = (2 * alpha, alpha * alpha)
    _require_origin(f)
    _require_fixed(f, z0)

    jr = jacobian_with_residual(f, z0)
    jac = jr.matrix
    (f1s, f1p), (f2s, f2p) = jac
    lam, lam_alt = f1s + alpha * f1p, ac * f2s + f2p
    det, tr = f1s * f2p - f1p * f2s, f1s + f2p
    d1, d2 = (_second(f, z0, c) for c in (0, 1))
    A = 2 * d1.f_ss + 4 * alpha * d1.f_sp + f1p + 2 * alpha ** 2 * d1.f_pp
    B = 2 * d2.f_ss + 4 * alpha * d2.f_sp + f2p + 2 * alpha ** 2 * d2.f_pp
    ba = B - A * alpha
    v = np.array([1, alpha])
    resid_ii = float(np.linalg.norm(jac @ v - lam * v))

    clauses = [
        equal("i-agree", lam, lam_alt, tol, "both expressions of lambda agree"),
        is_real("i-real", lam, tol, "lambda is real"),
        at_most("i", 1.0, lam.real, tol, "lambda >= 1"),
        Clause("ii", resid_ii <= tol, resid_ii, tol, "J (1, alpha)' = lambda (1, alpha)'"),
    ]
    if abs(lam) < 1e-300:
        mu = complex("nan")
        clauses.append(Clause("mu", False, float("inf"), tol, "mu = det/lambda needs lambda != 0"))
    else:
        mu = det / lam
        clauses.append(equal("eig", lam + mu, tr, tol, "lambda + det/lambda = tr J"))
    clauses += [
        is_real("iii-real", ba, tol2, "B - A alpha is real"),
        at_most("iii", abs(mu), ba.real, tol2, "|mu| <= B - A alpha"),
        at_most("iv-det", abs(det), ba.real * lam.real, tol2, "|det J| <= (B - A alpha) lambda"),
        at_most("iv-tr", abs(tr), lam.real + ba.real, tol2, "|tr J| <= lambda + B - A alpha"),
    ]
    q = {"lambda": lam, "lambda_alt": lam_alt, "mu": mu, "A": A, "B": B, "B_minus_A_alpha": ba,
         "det": det, "trace": tr, "f1_s": f1s, "f1_p": f1p, "f2_s": f2s, "f2_p": f2p,
         "f1_ss": d1.f_ss, "f1_sp": d1.f_sp, "f1_pp": d1.f_pp,
         "f2_ss": d2.f_ss, "f2_sp": d2.f_sp, "f2_pp": d2.f_pp}
    diag = _eigen_diagnostics(jac, lam, mu) if np.isfinite(mu) else {}
    diag["cr_residual"] = jr.cr_residual
    diag["second_derivatives"] = "forward-mode" if f.exprs else "stencil"
    diag.update(_radial(f, lambda t: (2 * t * alpha, (t * alpha) ** 2),
                        lambda j: j[0, 0] + alpha * j[0, 1]))
    return CheckReport(TheoremId.ROYAL, q, clauses, diag, f.name)


# -- corollaries ------------------------------------------------------------------

def _merge(report: CheckReport, sub: CheckReport) -> CheckReport:
    prefix = f"thm{sub.theorem_id.value}:"
    report.clauses += [Clause(prefix + c.id, c.passed, c.residual, c.tolerance, c.statement)
                       for c in sub.clauses]
    report.diagnostics["theorem"] = sub.theorem_id.value
    report.diagnostics["theorem_quantities"] = sub.quantities
    return report


def _boundary_value(h: HoloMap, z0) -> complex:
    v = h(z0)
    r = abs(abs(v) - 1)
    if r > FIXED_TOL:
        raise HypothesisViolated("boundary-value", f"|h(z0)| = {abs(v)!r}, expected 1", r)
    return v


def _require_disc_origin(h: HoloMap) -> None:
    v = abs(h((0j, 0j)))
    if v > ORIGIN_TOL:
        raise HypothesisViolated("origin-fixed", f"|h(0, 0)| = {v:.3e}", v)


def _wrap_g2_to_disc(h: HoloMap, builder, name: str) -> HoloMap:
    return HoloMap(lambda args: builder(h.values(args)[0]), Arity.G2_TO_G2, name)


def _wrap_disc_to_g2(phi: HoloMap, inner, name: str) -> HoloMap:
    return HoloMap(lambda args: phi.values((inner(*args),)), Arity.G2_TO_G2, name)


def _gradient(h: HoloMap, z0) -> tuple[complex, complex]:
    row = jacobian(h, z0)[0]
    return complex(row[0]), complex(row[1])


def _velocity(phi: HoloMap, lam: complex) -> tuple[complex, complex]:
    col = jacobian(phi, lam)[:, 0]
    return complex(col[0]), complex(col[1])


def _s_axis_function(h, theta, tol):
    e = cmath.exp(1j * theta)
    z0 = (e, 0j)
    hz = _boundary_value(h, z0)
    w = hz * e.conjugate()
    wc = w.conjugate()
    hs, hp = _gradient(h, z0)
    h00 = h((0j, 0j))
    x = wc * e.conjugate() * h00
    phi0 = x / (2 - x)
    bound = 0.5 * abs(1 - phi0.conjugate()) ** 2 / (1 - abs(phi0) ** 2)
    value = wc * hs
    rep = CheckReport(TheoremId.C31, {"omega": w, "value": value, "bound": bound, "phi0": phi0,
                                      "h_s": hs, "h_p": hp}, subject=h.name)
    rep.clauses += [
        equal("i", hs + e * hp, 0, tol, "dh/ds + e^{i theta} dh/dp = 0"),
        is_real("ii-real", value, tol, "conj(omega) dh/ds is real"),
        at_most("ii", bound, value.real, tol, "conj(omega) dh/ds >= bound"),
    ]
    f = _wrap_g2_to_disc(h, lambda v: (wc * v, 0j), f"({h.name}, 0)")
    return _merge(rep, check_theorem_3_1(f, theta, tol))


def _p_axis_function(h, theta, tol):
    e = cmath.exp(1j * theta)
    z0 = (0j, e)
    _require_disc_origin(h)
    hz = _boundary_value(h, z0)
    w = hz * e.conjugate()
    wc = w.conjugate()
    hs, hp = _gradient(h, z0)
    value = wc * hp
    rep = CheckReport(TheoremId.C32, {"omega": w, "value": value, "bound": 1.0,
                                      "h_s": hs, "h_p": hp}, subject=h.name)
    rep.clauses += [
        is_real("i-real", value, tol, "conj(omega) dh/dp is real"),
        at_most("i", 1.0, value.real, tol, "conj(omega) dh/dp >= 1"),
        at_most("ii", abs(hs), value.real, tol, "|dh/ds| <= conj(omega) dh/dp"),
    ]
    f = _wrap_g2_to_disc(h, lambda v: (0j, wc * v), f"(0, {h.name})")
    return _merge(rep, check_theorem_3_2(f, theta, tol))


def _royal_function(h, alpha, tol):
    alpha = _unimodular(alpha)
    z0 = (2 * alpha, alpha * alpha)
    _require_disc_origin(h)
    hz = _boundary_value(h, z0)
    w = hz * alpha.conjugate()
    wc = w.conjugate()
    hs, hp = _gradient(h, z0)
    value = wc * (hs + alpha * hp)
    rep = CheckReport(TheoremId.C33, {"omega": w, "value": value, "bound": 0.5,
                                      "h_s": hs, "h_p": hp}, subject=h.name)
    rep.clauses += [
        is_real("real", value, tol, "conj(omega)(dh/ds + alpha dh/dp) is real"),
        at_most("bound", 0.5, value.real, tol, "conj(omega)(dh/ds + alpha dh/dp) >= 1/2"),
    ]
    f = _wrap_g2_to_disc(h, lambda v: (2 * wc * v, (wc * v) ** 2), f"royal({h.name})")
    return _merge(rep, check_theorem_3_3(f, alpha, tol))


def _require_phi_hits(phi: HoloMap, lam: complex, z0) -> None:
    r = _distance(phi.values((lam,)), z0)
    if r > FIXED_TOL:
        raise HypothesisViolated("boundary-fixed", f"|phi(lambda) - z0| = {r:.3e}", r)


def _require_phi_origin(phi: HoloMap) -> None:
    r = max(abs(v) for v in phi.values((0j,)))
    if r > ORIGIN_TOL:
        raise HypothesisViolated("origin-fixed", f"|phi(0)| = {r:.3e}", r)


def _s_axis_disc(phi, lam, theta, tol):
    lam = _unimodular(lam, "lambda")
    e = cmath.exp(1j * theta)
    ec = e.conjugate()
    _require_phi_hits(phi, lam, (e, 0j))
    d1, d2 = _velocity(phi, lam)
    p1, p2 = phi.values((0j,))
    g0 = e ** -2 * (e * p1 - 2 * p2) / (2 - ec * p1)
    bound = 0.25 * abs(1 - g0.conjugate()) ** 2 / (1 - abs(g0) ** 2)
    value = lam * ec * (d1 - ec * d2)
    rep = CheckReport(TheoremId.C34, {"value": value, "bound": bound, "g0": g0,
                                      "phi1_prime": d1, "phi2_prime": d2}, subject=phi.name)
    rep.clauses += [
        is_real("real", value, tol, "lambda e^{-i theta}(phi1' - e^{-i theta} phi2') is real"),
        at_most("bound", bound, value.real, tol, "value >= |1 - conj(g0)|^2 / (4 (1 - |g0|^2))"),
    ]
    k = lam * ec
    f = _wrap_disc_to_g2(phi, lambda s, p: k * (s - 2 * ec * p) / (2 - ec * s), f"{phi.name}oPhi")
    return _merge(rep, check_theorem_3_1(f, theta, tol))


def _p_axis_disc(phi, lam, theta, tol):
    lam = _unimodular(lam, "lambda")
    e = cmath.exp(1j * theta)
    _require_phi_origin(phi)
    _require_phi_hits(phi, lam, (0j, e))
    d1, d2 = _velocity(phi, lam)
    value = e.conjugate() * lam * d2
    rep = CheckReport(TheoremId.C35, {"value": value, "bound": 1.0,
                                      "phi1_prime": d1, "phi2_prime": d2}, subject=phi.name)
    rep.clauses += [
        equal("i", d1, 0, tol, "phi1'(lambda) = 0"),
        is_real("ii-real", value, tol, "e^{-i theta} lambda phi2'(lambda) is real"),
        at_most("ii", 1.0, value.real, tol, "e^{-i theta} lambda phi2'(lambda) >= 1"),
    ]
    w = e.conjugate() * lam
    f = _wrap_disc_to_g2(phi, lambda s, p: (2 * w * p - s) / (2 - w * s), f"{phi.name}oPsi")
    return _merge(rep, check_theorem_3_2(f, theta, tol))


def _royal_disc(phi, lam, alpha, tol):
    lam = _unimodular(lam, "lambda")
    alpha = _unimodular(alpha)
    ac = alpha.conjugate()
    _require_phi_origin(phi)
    _require_phi_hits(phi, lam, (2 * alpha, alpha * alpha))
    d1, d2 = _velocity(phi, lam)
    value, value_alt = lam * ac * d1, lam * ac * ac * d2
    rep = CheckReport(TheoremId.C36, {"value": value, "value_alt": value_alt, "bound": 2.0,
                                      "phi1_prime": d1, "phi2_prime": d2}, subject=phi.name)
    rep.clauses += [
        equal("i", d1 - ac * d2, 0, tol, "phi1' - conj(alpha) phi2' = 0"),
        equal("ii-agree", value, value_alt, tol, "both expressions agree"),
        is_real("ii-real", value, tol, "lambda conj(alpha) phi1' is real"),
        at_most("ii", 2.0, value.real, tol, "lambda conj(alpha) phi1' >= 2"),
    ]
    # the inner map lambda conj(alpha) (s - 2 w p)/(2 - w s) with w = 0
    k = lam * ac
    f = _wrap_disc_to_g2(phi, lambda s, p: k * s / 2, f"{phi.name}o(s/2)")
    return _merge(rep, check_theorem_3_3(f, alpha, tol))


COROLLARIES = {
    TheoremId.C31: (Arity.G2_TO_DISC, ("theta",)),
    TheoremId.C32: (Arity.G2_TO_DISC, ("theta",)),
    TheoremId.C33: (Arity.G2_TO_DISC, ("alpha",)),
    TheoremId.C34: (Arity.DISC_TO_G2, ("lam", "theta")),
    TheoremId.C35: (Arity.DISC_TO_G2, ("lam", "theta")),
    TheoremId.C36: (Arity.DISC_TO_G2, ("lam", "alpha")),
}


def check_corollary(kind, m: HoloMap, *, theta: float = 0.0, alpha: complex = 1.0,
                    lam: complex = 1.0, tol: float = TOL_FIRST) -> CheckReport:
    """Check one of the six corollaries.

    The G2-to-disc corollaries take ``h`` and the point parameter; the
    disc-to-G2 ones take ``phi``, the boundary point ``lam`` of the disc and
    the target parameter.  Each is also routed through its theorem checker
    via the wrapping map, whose clauses appear with a ``thm<id>:`` prefix.
    """
    kind = TheoremId(kind) if not isinstance(kind, TheoremId) else kind
    if kind not in COROLLARIES:
        raise ValueError(f"{kind.value} is not a corollary")
    _require_arity(m, COROLLARIES[kind][0])
    if kind is TheoremId.C31:
        return _s_axis_function(m, theta, tol)
    if kind is TheoremId.C32:
        return _p_axis_function(m, theta, tol)
    if kind is TheoremId.C33:
        return _royal_function(m, alpha, tol)
    if kind is TheoremId.C34:
        return _s_axis_disc(m, lam, theta, tol)
    if kind is TheoremId.C35:
        return _p_axis_disc(m, lam, theta, tol)
    return _royal_disc(m, lam, alpha, tol)


def self_map_spot_check(m: HoloMap, points) -> float:
    """Largest defining-function value over the images (negative means inside).

    G2-to-disc maps report ``|h| - 1`` instead.  Disc-input maps take the
    first root of each sample point, which covers the disc as well.
    """
    worst = -np.inf
    for z in points:
        if m.arity.n_in == 1:
            z = (condition_c2_roots(z)[0],) if len(tuple(z)) == 2 else (complex(z),)
        if m.arity.n_out == 1:
            worst = max(worst, abs(m(tuple(z))) - 1)
        else:
            worst = max(worst, defining_function(m(tuple(z))))
    return float(worst)
