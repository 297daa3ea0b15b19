"""Disc automorphisms and their lifts to automorphisms of G2.

Every automorphism of G2 has the form ``H_h(l1 + l2, l1 l2) = (h(l1) + h(l2),
h(l1) h(l2))`` for a Mobius map ``h``.  For ``h(l) = phase (l - a)/(1 - conj(a) l)``
the lift is rational::

    D  = 1 - conj(a) s + conj(a)^2 p
    H1 = phase   ((1 + |a|^2) s - 2 conj(a) p - 2a) / D
    H2 = phase^2 (p - a s + a^2) / D

The phase enters only as the rotation ``(s, p) -> (phase s, phase^2 p)``
applied afterwards.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleHit
from .geometry import Point, as_point, condition_c2_roots
from .holo.maps import Arity, HoloMap

PHASE_TOL = 1e-12
POLE_THRESHOLD = 1e-300


@dataclass(frozen=True)
class DiscAutomorphism:
    """``h(l) = phase * (l - pole) / (1 - conj(pole) * l)``."""

    phase: complex = 1.0
    pole: complex = 0.0

    def __post_init__(self):
        phase, pole = complex(self.phase), complex(self.pole)
        if abs(abs(phase) - 1) > PHASE_TOL:
            raise DomainError(f"|phase| = {abs(phase)!r}, expected 1")
        if not abs(pole) < 1:
            raise DomainError(f"|pole| = {abs(pole)!r} >= 1")
        object.__setattr__(self, "phase", phase / abs(phase))
        object.__setattr__(self, "pole", pole)

    @classmethod
    def rotation(cls, phase: complex) -> "DiscAutomorphism":
        return cls(phase, 0)

    def __call__(self, lam: complex) -> complex:
        return mobius_eval(self, lam)

    def inverse(self) -> "DiscAutomorphism":
        return DiscAutomorphism(self.phase.conjugate(), -self.pole * self.phase)

    def compose(self, inner: "DiscAutomorphism") -> "DiscAutomorphism":
        """``self o inner``."""
        pole = inner.inverse()(self.pole)
        # read the phase off the value at 1, which is never a pole
        phase = self(inner(1.0)) * (1 - pole.conjugate()) / (1 - pole)
        return DiscAutomorphism(phase / abs(phase), pole)

    def as_map(self) -> HoloMap:
        return HoloMap(lambda args: (mobius_eval(self, args[0]),), Arity.DISC_TO_DISC,
                       f"mobius({_fmt(self.phase)},{_fmt(self.pole)})")


def _fmt(w: complex) -> str:
    return f"{w.real:.6g}{w.imag:+.6g}i"


def mobius_eval(h: DiscAutomorphism, lam: complex) -> complex:
    lam = complex(lam)
    den = 1 - h.pole.conjugate() * lam
    if abs(den) < POLE_THRESHOLD:
        raise PoleHit(f"Mobius map has a pole at {lam}")
    return h.phase * (lam - h.pole) / den


def _lift_parts(a: complex, s: complex, p: complex):
    ac = a.conjugate()
    den = 1 - ac * s + ac * ac * p
    if abs(den) < POLE_THRESHOLD:
        raise PoleHit(f"lift denominator vanishes at ({s}, {p})")
    n1 = (1 + abs(a) ** 2) * s - 2 * ac * p - 2 * a
    n2 = p - a * s + a * a
    return den, n1, n2


@dataclass(frozen=True)
class LiftedAutomorphism:
    """The automorphism ``H_h`` of G2 induced by ``base``."""

    base: DiscAutomorphism

    def __call__(self, z) -> Point:
        return lift_eval(self, z)

    def jacobian(self, z) -> np.ndarray:
        return lift_jacobian(self, z)

    def inverse(self) -> "LiftedAutomorphism":
        return LiftedAutomorphism(self.base.inverse())

    def as_map(self) -> HoloMap:
        return HoloMap(lambda args: tuple(lift_eval(self, args)), Arity.G2_TO_G2,
                       f"H[{_fmt(self.base.phase)},{_fmt(self.base.pole)}]")


def lift(h: DiscAutomorphism) -> LiftedAutomorphism:
    return LiftedAutomorphism(h)


def _base(H) -> DiscAutomorphism:
    return H.base if isinstance(H, LiftedAutomorphism) else H


def lift_eval(H, z) -> Point:
    h = _base(H)
    s, p = as_point(z)
    den, n1, n2 = _lift_parts(h.pole, s, p)
    return Point(h.phase * n1 / den, h.phase ** 2 * n2 / den)


def lift_eval_roots(H, z) -> Point:
    """Same map through the roots: split ``z``, apply ``h`` to each root, resymmetrize."""
    h = _base(H)
    l1, l2 = condition_c2_roots(z)
    u1, u2 = mobius_eval(h, l1), mobius_eval(h, l2)
    return Point(u1 + u2, u1 * u2)


def lift_jacobian(H, z) -> np.ndarray:
    """Analytic Jacobian of the lift by the quotient rule."""
    h = _base(H)
    a = h.pole
    ac = a.conjugate()
    s, p = as_point(z)
    den, n1, n2 = _lift_parts(a, s, p)
    d_s, d_p = -ac, ac * ac
    d2 = den * den
    jac = np.array([
        [((1 + abs(a) ** 2) * den - n1 * d_s) / d2, (-2 * ac * den - n1 * d_p) / d2],
        [(-a * den - n2 * d_s) / d2, (den - n2 * d_p) / d2],
    ], dtype=complex)
    jac[0] *= h.phase
    jac[1] *= h.phase ** 2
    return jac


def royal_jacobian(alpha: complex) -> np.ndarray:
    """Closed form of the Jacobian of ``H_{h_alpha}`` at ``(2 alpha, alpha^2)``."""
    alpha = complex(alpha)
    r2 = abs(alpha) ** 2
    return np.array([[1 + r2, -2 * alpha.conjugate()], [-alpha, 1]], dtype=complex) / (1 - r2) ** 2


def royal_point(lam: complex) -> Point:
    lam = complex(lam)
    if not abs(lam) < 1:
        raise DomainError(f"|lambda| = {abs(lam)!r} >= 1")
    return Point(2 * lam, lam * lam)


def royal_transitivity_check(lam1: complex, lam2: complex) -> DiscAutomorphism:
    """A Mobius map whose lift sends ``royal_point(lam1)`` to ``royal_point(lam2)``."""
    royal_point(lam1), royal_point(lam2)
    to_zero = DiscAutomorphism(1, lam1)
    from_zero = DiscAutomorphism(1, lam2).inverse()
    return from_zero.compose(to_zero)


def random_automorphism(rng: np.random.Generator, max_radius: float = 0.9) -> DiscAutomorphism:
    """Uniform phase and a pole uniform in the disc of radius ``max_radius``."""
    phase = cmath.exp(1j * rng.uniform(0, 2 * np.pi))
    pole = max_radius * np.sqrt(rng.uniform()) * cmath.exp(1j * rng.uniform(0, 2 * np.pi))
    return DiscAutomorphism(phase, pole)
