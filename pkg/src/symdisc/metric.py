"""Caratheodory infinitesimal metric of the symmetrized bidisc."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .circle import GRID_POINTS, circle_max
from .errors import DomainError, MapEscapesDomain, NonPositiveDenominator, NotInterior
from .geometry import Point, as_direction, as_point, defining_function, is_interior

ILL_CONDITIONED_H = 1e-6
CONTRACTION_SLACK = 1e-8


class Method(enum.Enum):
    SUP_FORMULA_1 = "SupFormula1"
    SUP_FORMULA_2 = "SupFormula2"
    CLOSED_ROYAL = "ClosedRoyal"
    CLOSED_S_AXIS = "ClosedSAxis"
    CLOSED_ORIGIN = "ClosedOrigin"


@dataclass(frozen=True)
class MetricResult:
    value: float
    method: Method
    argmax_omega: complex | None = None
    ill_conditioned: bool = False


def _require_interior(z: Point) -> float:
    h = defining_function(z)
    if not is_interior(z):
        raise NotInterior(f"({z.s}, {z.p}) is not in G2 (h = {h!r})")
    return h


def _numerator(z: Point, xi, w):
    s, p = z
    x1, x2 = xi
    return x1 * (1 - w * w * p) - x2 * (2 - w * s) * w


def fc_sup(z, xi, grid: int = GRID_POINTS) -> MetricResult:
    """Sup over the circle of ``|N(w)| / |(s - conj(s)p)w^2 - 2(1-|p|^2)w + conj(s) - conj(p)s|``."""
    z, xi = as_point(z), as_direction(xi)
    h = _require_interior(z)
    s, p = z
    a = s - s.conjugate() * p
    b = 2 * (1 - abs(p) ** 2)
    c = s.conjugate() - p.conjugate() * s

    def ratio(t):
        w = np.exp(1j * t)
        return np.abs(_numerator(z, xi, w)) / np.abs(a * w * w - b * w + c)

    best = circle_max(ratio, grid=grid)
    return MetricResult(best.value, Method.SUP_FORMULA_1, best.omega, abs(h) < ILL_CONDITIONED_H)


def fc_sup_alt(z, xi, grid: int = GRID_POINTS) -> MetricResult:
    """Sup over the circle of ``2|N(w)| / (|2 - w s|^2 - |2 w p - s|^2)``."""
    z, xi = as_point(z), as_direction(xi)
    h = _require_interior(z)
    s, p = z

    def ratio(t):
        w = np.exp(1j * t)
        den = np.abs(2 - w * s) ** 2 - np.abs(2 * w * p - s) ** 2
        if np.any(den <= 0):
            raise NonPositiveDenominator(f"denominator vanishes at ({s}, {p})")
        return 2 * np.abs(_numerator(z, xi, w)) / den

    best = circle_max(ratio, grid=grid)
    return MetricResult(best.value, Method.SUP_FORMULA_2, best.omega, abs(h) < ILL_CONDITIONED_H)


def fc_origin(xi) -> float:
    x1, x2 = as_direction(xi)
    return (abs(x1) + 2 * abs(x2)) / 2


def fc_royal(alpha: complex, xi) -> float:
    """Closed form at the royal point ``(2 alpha, alpha**2)``, ``|alpha| < 1``."""
    alpha = complex(alpha)
    if abs(alpha) >= 1:
        raise DomainError(f"|alpha| = {abs(alpha)!r} >= 1")
    x1, x2 = as_direction(xi)
    r2 = abs(alpha) ** 2
    num = abs((1 + r2) * x1 - 2 * alpha.conjugate() * x2) + 2 * abs(alpha * x1 - x2)
    return num / (2 * (1 - r2) ** 2)


def fc_s_axis(s: complex, beta: complex) -> float:
    """Closed form at ``(s, 0)`` in the direction ``(beta, s*beta)``."""
    s = complex(s)
    if abs(s) >= 1:
        raise DomainError(f"|s| = {abs(s)!r} >= 1")
    return (abs(s) + 1) / 2 * abs(beta)


def s_axis_ratio(s: complex, t):
    """The quantity maximized in the s-axis computation, as a function of the angle."""
    c = complex(s) * np.exp(1j * np.asarray(t))
    x = c * c + np.conj(c) ** 2
    num = x - 2
    den = x - 4 * (c + np.conj(c)) + 2 * abs(s) ** 2 + 4
    return (num / den).real


def s_axis_ratio_max(s: complex) -> float:
    """Closed-form sup of :func:`s_axis_ratio`: ``(|s| - 1) / (2 (|s| + 1))``."""
    r = abs(complex(s))
    if r >= 1:
        raise DomainError(f"|s| = {r!r} >= 1")
    return 0.5 * (r - 1) / (r + 1)


def s_axis_profile(s: complex, a):
    """``f(a) = (2a^2 - |s|^2 - 1) / (1 - a)^2``, decreasing on ``[-|s|, |s|]``."""
    a = np.asarray(a, dtype=float)
    return (2 * a * a - abs(s) ** 2 - 1) / (1 - a) ** 2


def metric(z, xi) -> MetricResult:
    """Best available evaluation: a closed form when one applies, else the sup."""
    z, xi = as_point(z), as_direction(xi)
    if z.s == 0 and z.p == 0:
        return MetricResult(fc_origin(xi), Method.CLOSED_ORIGIN)
    return fc_sup(z, xi)


@dataclass(frozen=True)
class Contraction:
    lhs: float
    rhs: float
    holds: bool


def contraction_check(phi, z, xi, jacobian=None) -> Contraction:
    """Compare ``F(phi(z), J_phi(z) xi)`` with ``F(z, xi)``.

    ``jacobian`` defaults to exact forward-mode derivatives for maps built
    from expressions and to finite differences otherwise.
    """
    from .holo import exact_jacobian
    from .holo import jacobian as numeric_jacobian

    z, xi = as_point(z), as_direction(xi)
    rhs = fc_sup(z, xi).value
    image = as_point(phi(z))
    if not is_interior(image):
        raise MapEscapesDomain(f"phi({z.s}, {z.p}) = ({image.s}, {image.p}) is not in G2")
    if jacobian is not None:
        jac = np.asarray(jacobian(z))
    else:
        jac = exact_jacobian(phi, z) if hasattr(phi, "exprs") else None
        if jac is None:
            jac = numeric_jacobian(phi, z)
    pushed = jac @ xi.as_array()
    lhs = fc_sup(image, pushed).value
    return Contraction(lhs, rhs, lhs <= rhs + CONTRACTION_SLACK)
