"""Building blocks and seeded generators of holomorphic self-maps of G2.

Every generated map is a self-map of G2 by construction:

* lifts of disc automorphisms,
* ``(u1 + u2, u1 u2)`` for disc-valued ``u1, u2`` (a point of G2 is exactly
  such a symmetrization),
* royal lifts ``(2u, u^2)``,
* symmetrized lifts of Blaschke products,

and compositions of these.  The disc-valued pieces are ``g o Phi_w`` with
``Phi_w(s, p) = (s - 2 w p)/(2 - w s)``, which maps G2 into the disc for
``|w| <= 1``.
"""
from __future__ import annotations

import cmath

import numpy as np

from ..automorphism import DiscAutomorphism
from ..holo import expr as ex
from ..holo.maps import Arity, HoloMap, compose, from_exprs, pair_lift, royal_lift, symmetrized_lift
from ..sampling import circle_point, disc_point


def lit(w: complex) -> str:
    return ex.serialize(ex.Num(complex(w)))


# -- disc maps ----------------------------------------------------------------

def blaschke_factor(a: complex, c: complex = 1.0, name: str = "blaschke") -> HoloMap:
    """``c (z - a)/(1 - conj(a) z)``."""
    a = complex(a)
    return from_exprs([f"{lit(c)}*(z - {lit(a)})/(1 - {lit(a.conjugate())}*z)"],
                      Arity.DISC_TO_DISC, name)


def z_blaschke(a: complex, fixed: complex, target: complex | None = None,
               name: str = "zblaschke") -> HoloMap:
    """``g(z) = c z (z - a)/(1 - conj(a) z)`` with ``g(0) = 0`` and ``g(fixed) = target``.

    ``fixed`` and ``target`` must be unimodular so that ``|c| = 1``.
    """
    a, fixed = complex(a), complex(fixed)
    target = fixed if target is None else complex(target)
    c = target * (1 - a.conjugate() * fixed) / (fixed * (fixed - a))
    c /= abs(c)
    return from_exprs([f"{lit(c)}*z*(z - {lit(a)})/(1 - {lit(a.conjugate())}*z)"],
                      Arity.DISC_TO_DISC, name)


def mobius_map(h: DiscAutomorphism, name: str = "mobius") -> HoloMap:
    return blaschke_factor(h.pole, h.phase, name)


# -- G2 -> disc ---------------------------------------------------------------

def phi_omega(omega: complex, name: str | None = None) -> HoloMap:
    """``(s - 2 w p)/(2 - w s)``; sends ``(2a, a^2)`` to ``a`` and 0 to 0."""
    w = complex(omega)
    return from_exprs([f"(s - 2*{lit(w)}*p)/(2 - {lit(w)}*s)"], Arity.G2_TO_DISC,
                      name or "Phi")


def psi_omega(omega: complex, name: str | None = None) -> HoloMap:
    """``(2 w p - s)/(2 - w s)``."""
    w = complex(omega)
    return from_exprs([f"(2*{lit(w)}*p - s)/(2 - {lit(w)}*s)"], Arity.G2_TO_DISC,
                      name or "Psi")


# -- G2 -> G2 -------------------------------------------------------------------

def lift_map(h: DiscAutomorphism, name: str | None = None) -> HoloMap:
    """Rational expression of the lift ``H_h``."""
    a, ph = h.pole, h.phase
    ac = a.conjugate()
    den = f"(1 - {lit(ac)}*s + {lit(ac * ac)}*p)"
    f1 = f"{lit(ph)}*({lit(1 + abs(a) ** 2)}*s - {lit(2 * ac)}*p - {lit(2 * a)})/{den}"
    f2 = f"{lit(ph * ph)}*(p - {lit(a)}*s + {lit(a * a)})/{den}"
    return from_exprs([f1, f2], Arity.G2_TO_G2, name or "H")


def rotation_map(phase: complex) -> HoloMap:
    return lift_map(DiscAutomorphism.rotation(phase), "R")


def z_blaschke_lift(a: complex, c: complex, name: str = "symlift") -> HoloMap:
    """Symmetrized lift of ``b(z) = c z (z - a)/(1 - conj(a) z)`` in closed form.

    With ``D = 1 - conj(a) s + conj(a)^2 p`` the lift is
    ``(c (s^2 - 2p - a s - conj(a) p s + 2|a|^2 p)/D, c^2 p (p - a s + a^2)/D)``.
    """
    a, c = complex(a), complex(c)
    ac = a.conjugate()
    den = f"(1 - {lit(ac)}*s + {lit(ac * ac)}*p)"
    f1 = (f"{lit(c)}*(s^2 - 2*p - {lit(a)}*s - {lit(ac)}*p*s + {lit(2 * abs(a) ** 2)}*p)"
          f"/{den}")
    f2 = f"{lit(c * c)}*p*(p - {lit(a)}*s + {lit(a * a)})/{den}"
    return from_exprs([f1, f2], Arity.G2_TO_G2, name)


def _z_blaschke_coef(a: complex, fixed: complex) -> complex:
    c = (1 - a.conjugate() * fixed) / (fixed - a)
    return c / abs(c)


# -- the sharp maps and the counterexample ------------------------------------------

def s_axis_sharp(theta: float) -> HoloMap:
    e = cmath.exp(1j * theta)
    ec = e.conjugate()
    w = f"({lit(e)}*s - 2*p)/(2 - {lit(ec)}*s)"
    return from_exprs([f"{lit(ec)}*{w} + {lit(ec)}*p", f"{lit(ec * ec)}*{w}*p"],
                      Arity.G2_TO_G2, "thm3.1-sharp")


def p_axis_sharp_a(theta: float) -> HoloMap:
    k = 1j * cmath.exp(-0.5j * theta)
    f2 = f"{lit(-1j * cmath.exp(0.5j * theta))}*(2*{lit(k)}*p - s)/(2 - {lit(k)}*s)"
    return from_exprs(["0", f2], Arity.G2_TO_G2, "thm3.2-sharp-a")


def p_axis_sharp_b(theta: float) -> HoloMap:
    w1 = -1j * cmath.exp(-0.5j * theta)
    w2 = 1j * cmath.exp(-0.5j * theta)
    return pair_lift(phi_omega(w1, "Phi1"), phi_omega(w2, "Phi2"), "thm3.2-sharp-b")


def remark_map(r: float, theta: float) -> HoloMap:
    """The automorphism fixing ``(0, e^{i theta})`` but not the origin."""
    k = r * 1j * cmath.exp(-0.5j * theta)
    q = r * 1j * cmath.exp(0.5j * theta)
    den = f"(1 + {lit(k)}*s - {lit(r * r * cmath.exp(-1j * theta))}*p)"
    f1 = f"({lit(1 + r * r)}*s + 2*{lit(k)}*p - 2*{lit(q)})/{den}"
    f2 = f"(p - {lit(q)}*s - {lit(r * r * cmath.exp(1j * theta))})/{den}"
    return from_exprs([f1, f2], Arity.G2_TO_G2, "remark-H")


def p_axis_function_sharp(theta: float) -> HoloMap:
    k = 1j * cmath.exp(-0.5j * theta)
    return from_exprs([f"(2*{lit(k)}*p - s)/(2 - {lit(k)}*s)"], Arity.G2_TO_DISC, "cor3.2-sharp")


def royal_function_sharp(beta: complex) -> HoloMap:
    return phi_omega(beta, "cor3.3-sharp")


def p_axis_disc_sharp(lam: complex, theta: float) -> HoloMap:
    c = complex(lam).conjugate() * cmath.exp(1j * theta)
    return from_exprs(["0", f"{lit(c)}*z"], Arity.DISC_TO_G2, "cor3.5-sharp")


def royal_disc_sharp(lam: complex, alpha: complex) -> HoloMap:
    c = complex(lam).conjugate() * complex(alpha)
    return from_exprs([f"{lit(2 * c)}*z", f"{lit(c * c)}*z^2"], Arity.DISC_TO_G2, "cor3.6-sharp")


# -- random generators ---------------------------------------------------------------

def _away(rng, avoid: complex, gap: float = 0.3) -> complex:
    while True:
        w = circle_point(rng)
        if abs(w - avoid) > gap:
            return w


def random_royal_fixing(rng: np.random.Generator, alpha: complex, depth: int = 0) -> HoloMap:
    """Fixes the origin and the royal corner ``(2 alpha, alpha^2)``, ``|alpha| = 1``."""
    alpha = complex(alpha)
    kind = rng.integers(4) if depth == 0 else rng.integers(3)
    if kind == 0:
        a = disc_point(rng, 0.8)
        return z_blaschke_lift(a, _z_blaschke_coef(a, alpha), "royal-symlift")
    if kind == 1:
        g = z_blaschke(disc_point(rng, 0.8), alpha)
        return royal_lift(g, phi_omega(_away(rng, alpha.conjugate())), "royal-lift")
    if kind == 2:
        u1 = compose(z_blaschke(disc_point(rng, 0.8), alpha), phi_omega(_away(rng, alpha.conjugate())))
        u2 = compose(z_blaschke(disc_point(rng, 0.8), alpha), phi_omega(_away(rng, alpha.conjugate())))
        return pair_lift(u1, u2, "royal-pair")
    return compose(random_royal_fixing(rng, alpha, depth + 1),
                   random_royal_fixing(rng, alpha, depth + 1), "royal-composite")


def random_p_axis_fixing(rng: np.random.Generator, theta: float, depth: int = 0) -> HoloMap:
    """Fixes the origin and ``(0, e^{i theta})``.

    Built at a random angle and conjugated by a rotation lift onto ``theta``.
    """
    base = float(rng.uniform(0, 2 * np.pi))
    e = cmath.exp(1j * base)
    r = 1j * cmath.exp(0.5j * base)
    kind = rng.integers(3) if depth == 0 else rng.integers(2)
    if kind == 0:
        # odd b(z) = z B(z^2) with B(-e) = 1 gives b(r) = r
        a = disc_point(rng, 0.8)
        c = (1 + a.conjugate() * e) / (-e - a)
        c /= abs(c)
        b = from_exprs([f"z*{lit(c)}*(z^2 - {lit(a)})/(1 - {lit(a.conjugate())}*z^2)"],
                       Arity.DISC_TO_DISC, "odd")
        f = symmetrized_lift(b, "paxis-symlift")
    elif kind == 1:
        # u2(s, p) = -u1(-s, p) makes f1 odd in s, so d f1/dp vanishes on the p-axis
        w, a = circle_point(rng), disc_point(rng, 0.8)
        u1 = compose(z_blaschke(a, -w * e, r), phi_omega(w))
        u2 = compose(z_blaschke(-a, w * e, -r), phi_omega(-w))
        f = pair_lift(u1, u2, "paxis-pair")
    else:
        g1 = random_p_axis_fixing(rng, base, depth + 1)
        g2 = random_p_axis_fixing(rng, base, depth + 1)
        f = compose(g1, g2, "paxis-composite")
    phase = cmath.exp(0.5j * (theta - base))
    rot, back = rotation_map(phase), rotation_map(phase.conjugate())
    return compose(rot, compose(f, back), f"{f.name}@rot")


def random_p_axis_pair(rng: np.random.Generator, theta: float) -> HoloMap:
    """Unconstrained pair ``(u1 + u2, u1 u2)`` fixing the origin and ``(0, e^{i theta})``.

    Unlike :func:`random_p_axis_fixing` the two factors are independent, so
    ``d f1/dp`` at the fixed boundary point is generally nonzero.
    """
    e = cmath.exp(1j * theta)
    r = 1j * cmath.exp(0.5j * theta)
    us = []
    for target in (r, -r):
        w = circle_point(rng)
        g = z_blaschke(disc_point(rng, 0.8), -w * e, target)
        us.append(compose(g, phi_omega(w)))
    return pair_lift(us[0], us[1], "paxis-free-pair")


def skew_pair_map() -> HoloMap:
    """``(P + i Q^2, i P Q^2)`` with ``P = Phi_{-i}``, ``Q = Phi_{i}``.

    Fixes the origin and ``(0, 1)``; its Jacobian there is ``[[3, -i], [i, 3]]``.
    """
    u1 = from_exprs(["(s + 2*i*p)/(2 + i*s)"], Arity.G2_TO_DISC)
    u2 = from_exprs(["i*((s - 2*i*p)/(2 - i*s))^2"], Arity.G2_TO_DISC)
    return pair_lift(u1, u2, "skew-pair")


def random_s_axis_fixing(rng: np.random.Generator, theta: float) -> HoloMap:
    """Fixes ``(e^{i theta}, 0)``; the origin is not necessarily fixed."""
    e = cmath.exp(1j * theta)
    if rng.integers(2) == 0:
        a = disc_point(rng, 0.8)
        return z_blaschke_lift(a, _z_blaschke_coef(a, e), "saxis-symlift")
    u1 = compose(z_blaschke(disc_point(rng, 0.8), e), phi_omega(e.conjugate()))
    w = _away(rng, e.conjugate())
    zero_at = e / (2 - w * e)
    u2 = compose(blaschke_factor(zero_at, circle_point(rng)), phi_omega(w))
    return pair_lift(u1, u2, "saxis-pair")


def random_automorphism_lift(rng: np.random.Generator, max_radius: float = 0.8) -> HoloMap:
    h = DiscAutomorphism(circle_point(rng), disc_point(rng, max_radius))
    return lift_map(h, "auto-lift")


def random_origin_fixing(rng: np.random.Generator) -> HoloMap:
    """Origin-fixing self-maps: royal-corner families at a random corner, or rotations."""
    if rng.integers(4) == 0:
        return rotation_map(circle_point(rng))
    return random_royal_fixing(rng, circle_point(rng))


def random_interior_fixing(rng: np.random.Generator) -> tuple[HoloMap, tuple[complex, complex]]:
    """A self-map together with an interior fixed point.

    An origin-fixing map ``f`` conjugated as ``H^{-1} o f o H`` fixes ``H^{-1}(0)``.
    """
    h = DiscAutomorphism(circle_point(rng), disc_point(rng, 0.7))
    hinv = h.inverse()
    f = random_origin_fixing(rng)
    g = compose(lift_map(hinv), compose(f, lift_map(h)), f"conj({f.name})")
    # both roots of the origin go to hinv(0)
    c = hinv(0)
    return g, (2 * c, c * c)


def random_self_map(rng: np.random.Generator) -> HoloMap:
    """Any member of the generator families, for contraction tests."""
    kind = rng.integers(5)
    if kind == 0:
        return random_automorphism_lift(rng)
    if kind == 1:
        g = blaschke_factor(disc_point(rng, 0.8), circle_point(rng))
        return royal_lift(g, phi_omega(disc_point(rng, 1.0)), "royal-lift")
    if kind == 2:
        a = disc_point(rng, 0.8)
        return z_blaschke_lift(a, circle_point(rng), "symlift")
    if kind == 3:
        return random_interior_fixing(rng)[0]
    return compose(random_automorphism_lift(rng), random_origin_fixing(rng), "auto-o-map")
