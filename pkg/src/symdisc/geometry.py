"""Membership, defining function and boundary structure of the symmetrized bidisc.

A point ``(s, p)`` lies in G2 exactly when both roots of ``z**2 - s*z + p``
lie in the open unit disc.  The closure is the same statement with the
closed disc, and the defining function

    h(s, p) = 2|s - conj(s) p| + |s**2 - 4p| + |s|**2 - 4

is negative inside and vanishes on the whole topological boundary,
including the royal corners ``(2a, a**2)`` with ``|a| = 1`` and the
distinguished boundary ``|p| = 1``.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .circle import circle_max
from .errors import DomainError, NonSmoothPoint, SingularSystem, WrongBoundaryType

BOUNDARY_TOL = 1e-9
C4_GRID = 512
SINGULAR_DET = 1e-12


def _finite(x: complex) -> bool:
    return math.isfinite(x.real) and math.isfinite(x.imag)


@dataclass(frozen=True)
class Point:
    """A point ``(s, p)`` of C^2."""

    s: complex
    p: complex

    def __post_init__(self):
        s, p = complex(self.s), complex(self.p)
        if not (_finite(s) and _finite(p)):
            raise DomainError(f"non-finite point ({self.s}, {self.p})")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "p", p)

    def __iter__(self):
        yield self.s
        yield self.p

    def as_array(self) -> np.ndarray:
        return np.array([self.s, self.p], dtype=complex)


@dataclass(frozen=True)
class Direction:
    """A tangent vector ``(xi1, xi2)``; the zero vector is allowed."""

    xi1: complex
    xi2: complex

    def __post_init__(self):
        a, b = complex(self.xi1), complex(self.xi2)
        if not (_finite(a) and _finite(b)):
            raise DomainError(f"non-finite direction ({self.xi1}, {self.xi2})")
        object.__setattr__(self, "xi1", a)
        object.__setattr__(self, "xi2", b)

    def __iter__(self):
        yield self.xi1
        yield self.xi2

    def as_array(self) -> np.ndarray:
        return np.array([self.xi1, self.xi2], dtype=complex)


def as_point(z) -> Point:
    return z if isinstance(z, Point) else Point(*z)


def as_direction(v) -> Direction:
    return v if isinstance(v, Direction) else Direction(*v)


class BoundaryKind(enum.Enum):
    TYPE_S = "S"
    TYPE_P = "P"
    ROYAL_CORNER = "royal"


@dataclass(frozen=True)
class BoundaryPoint:
    """One of the three boundary families studied here.

    ``TYPE_S`` embeds as ``(e^{i theta}, 0)``, ``TYPE_P`` as
    ``(0, e^{i theta})`` and ``ROYAL_CORNER`` as ``(2 alpha, alpha**2)``.
    """

    kind: BoundaryKind
    theta: float = 0.0
    alpha: complex = 1.0

    def __post_init__(self):
        if self.kind is BoundaryKind.ROYAL_CORNER:
            a = complex(self.alpha)
            if abs(abs(a) - 1.0) > 1e-12:
                raise DomainError(f"royal corner needs |alpha| = 1, got {abs(a)!r}")
            object.__setattr__(self, "alpha", a)
        else:
            object.__setattr__(self, "theta", float(self.theta) % (2 * math.pi))

    @classmethod
    def type_s(cls, theta: float) -> "BoundaryPoint":
        return cls(BoundaryKind.TYPE_S, theta=theta)

    @classmethod
    def type_p(cls, theta: float) -> "BoundaryPoint":
        return cls(BoundaryKind.TYPE_P, theta=theta)

    @classmethod
    def royal(cls, alpha: complex) -> "BoundaryPoint":
        return cls(BoundaryKind.ROYAL_CORNER, alpha=alpha)

    def point(self) -> Point:
        if self.kind is BoundaryKind.TYPE_S:
            return Point(cmath.exp(1j * self.theta), 0)
        if self.kind is BoundaryKind.TYPE_P:
            return Point(0, cmath.exp(1j * self.theta))
        return Point(2 * self.alpha, self.alpha ** 2)


class Membership(enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    EXTERIOR = "Exterior"


@dataclass(frozen=True)
class MembershipVerdict:
    status: Membership
    h_value: float
    per_condition: dict = field(default_factory=dict)


# -- roots -----------------------------------------------------------------

def monic_quadratic_roots(b: complex, c: complex) -> tuple[complex, complex]:
    """Roots of ``x**2 + b*x + c`` without cancellation.

    The larger-magnitude root comes from ``-(b + sqrt(disc))/2`` with the
    square-root branch aligned to ``b``; the other is ``c / r1``.
    """
    b, c = complex(b), complex(c)
    sq = cmath.sqrt(b * b - 4 * c)
    if (b.conjugate() * sq).real < 0:
        sq = -sq
    q = -0.5 * (b + sq)
    if q == 0:
        return 0j, 0j
    return q, c / q


def condition_c2_roots(z) -> tuple[complex, complex]:
    """Both roots of ``x**2 - s x + p``; their sum is s and product is p."""
    s, p = as_point(z)
    return monic_quadratic_roots(-s, p)


def max_root_modulus(z) -> float:
    r1, r2 = condition_c2_roots(z)
    return max(abs(r1), abs(r2))


def in_closure(z, tol: float = 1e-12) -> bool:
    """Closure test: both roots in the closed unit disc."""
    return max_root_modulus(z) <= 1.0 + tol


# -- defining function -------------------------------------------------------

def defining_function(z) -> float:
    s, p = as_point(z)
    sc = s.conjugate()
    return 2 * abs(s - sc * p) + abs(s * s - 4 * p) + abs(s) ** 2 - 4


def grad_h(z) -> tuple[complex, complex]:
    """Wirtinger derivatives ``(dh/ds, dh/dp)`` of the defining function."""
    s, p = as_point(z)
    sc, pc = s.conjugate(), p.conjugate()
    m1 = abs(s - sc * p)
    m2 = abs(s * s - 4 * p)
    if m1 == 0.0 or m2 == 0.0:
        raise NonSmoothPoint(f"h is not differentiable at ({s}, {p})")
    dh_ds = (sc - 2 * s * pc + sc * abs(p) ** 2) / m1 + (abs(s) ** 2 * sc - 4 * s * pc) / m2 + sc
    dh_dp = (-sc * sc + abs(s) ** 2 * pc) / m1 - 2 * (sc * sc - 4 * pc) / m2
    return dh_ds, dh_dp


def membership_status(z, tol: float = BOUNDARY_TOL) -> Membership:
    h = defining_function(z)
    if abs(h) <= tol:
        return Membership.BOUNDARY
    return Membership.INTERIOR if h < 0 else Membership.EXTERIOR


def is_interior(z, tol: float = BOUNDARY_TOL) -> bool:
    return membership_status(z, tol) is Membership.INTERIOR


# -- the individual characterizations ---------------------------------------

def condition_c3(z) -> bool:
    s, p = as_point(z)
    return abs(s - s.conjugate() * p) < 1 - abs(p) ** 2


def condition_c4_sup(z, grid: int = C4_GRID) -> float:
    """``sup |(2p - w s)/(2 - conj(w) s)|`` over the unit circle; needs ``|s| < 2``."""
    s, p = as_point(z)
    if abs(s) >= 2:
        raise DomainError(f"|s| = {abs(s)!r} >= 2")
    if s == 0:
        return abs(p)

    def ratio(t):
        w = np.exp(1j * t)
        return np.abs(2 * p - w * s) / np.abs(2 - np.conj(w) * s)

    return circle_max(ratio, grid=grid).value


def condition_c5_beta(z) -> complex | None:
    """Solve ``s = beta p + conj(beta)``; ``None`` when ``|beta| >= 1``.

    Writing beta = x + iy and p = a + ib turns the equation into the real
    system [[1+a, -b], [b, a-1]] (x, y) = (Re s, Im s) with determinant
    ``|p|**2 - 1``.
    """
    s, p = as_point(z)
    if abs(p) >= 1:
        raise DomainError(f"|p| = {abs(p)!r} >= 1")
    if 1 - abs(p) ** 2 < SINGULAR_DET:
        raise SingularSystem("|p| is numerically 1")
    a, b = p.real, p.imag
    mat = np.array([[1 + a, -b], [b, a - 1]])
    x, y = np.linalg.solve(mat, [s.real, s.imag])
    beta = complex(x, y)
    return beta if abs(beta) < 1 else None


def condition_c6(z) -> bool:
    return defining_function(z) < 0


def classify(z, tol: float = BOUNDARY_TOL) -> MembershipVerdict:
    """Interior/boundary/exterior from the sign of h, plus every condition."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    z = as_point(z)
    h = defining_function(z)
    if abs(h) <= tol:
        status = Membership.BOUNDARY
    else:
        status = Membership.INTERIOR if h < 0 else Membership.EXTERIOR
    conds = {
        "C2": max_root_modulus(z) < 1,
        "C3": condition_c3(z),
        "C4": abs(z.s) < 2 and condition_c4_sup(z) < 1,
        "C6": h < 0,
    }
    try:
        conds["C5"] = abs(z.p) < 1 and condition_c5_beta(z) is not None
    except DomainError:
        conds["C5"] = False
    conds = {k: conds[k] for k in sorted(conds)}
    return MembershipVerdict(status, h, conds)


# -- tangent structure at (e^{i theta}, 0) ------------------------------------

def _require_type_s(z0: BoundaryPoint) -> float:
    if z0.kind is not BoundaryKind.TYPE_S:
        raise WrongBoundaryType(f"tangent spaces are available at type S points only, got {z0.kind.value}")
    return z0.theta


def tangent_test(z0: BoundaryPoint, v, tol: float = 1e-10) -> tuple[bool, bool]:
    """Membership of ``v`` in the real tangent space and in its complex part."""
    theta = _require_type_s(z0)
    a1, a2 = as_direction(v)
    e = cmath.exp(1j * theta)
    scale = tol * (1 + abs(a1) + abs(a2))
    in_t = abs((a1 / e - a2 / (e * e)).real) <= scale
    in_t10 = abs(e * a1 - a2) <= scale
    return in_t, in_t10


def normal_vector(z0: BoundaryPoint) -> Direction:
    theta = _require_type_s(z0)
    return Direction(cmath.exp(1j * theta), -cmath.exp(2j * theta))
