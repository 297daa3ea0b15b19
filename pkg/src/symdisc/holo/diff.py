"""Finite-difference derivatives of holomorphic maps.

First derivatives use central differences along the real axis of each
variable with steps ``h`` and ``h/2`` combined by Richardson extrapolation.
The same quotient along the imaginary axis must agree for a holomorphic
map; the disagreement is reported as the Cauchy-Riemann residual.

Second derivatives use the 3x3 (nine-point) stencil with a larger base step,
since the second difference divides by ``h**2`` and rounding would swamp
the result at the first-derivative step size.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ..errors import ArityMismatch, HolomorphyViolation
from .maps import HoloMap

FIRST_STEP = 1e-5
SECOND_STEP = 2e-4
CR_TOL = 1e-5


def _step(base: float, coord: complex, step: float | None) -> float:
    return step if step is not None else base * (1 + abs(coord))


def _values(m: HoloMap, x: np.ndarray) -> np.ndarray:
    return np.array(m.values(tuple(x)), dtype=complex)


def _central(m: HoloMap, x: np.ndarray, k: int, h: complex) -> np.ndarray:
    e = np.zeros(x.size, dtype=complex)
    e[k] = h
    return (_values(m, x + e) - _values(m, x - e)) / (2 * h)


def _richardson_first(m: HoloMap, x: np.ndarray, k: int, h: complex) -> np.ndarray:
    coarse = _central(m, x, k, h)
    fine = _central(m, x, k, h / 2)
    return (4 * fine - coarse) / 3


class JacobianResult(NamedTuple):
    matrix: np.ndarray
    cr_residual: float


def jacobian_with_residual(m: HoloMap, z, step: float | None = None) -> JacobianResult:
    """Jacobian (shape ``n_out x n_in``) and the largest Cauchy-Riemann residual.

    Raises HolomorphyViolation when any entry's real-axis and imaginary-axis
    quotients disagree by more than ``1e-5 * (1 + |derivative|)``.
    """
    x = np.array(m._coerce(z), dtype=complex)
    jac = np.empty((m.arity.n_out, m.arity.n_in), dtype=complex)
    worst = 0.0
    for k in range(x.size):
        h = _step(FIRST_STEP, x[k], step)
        d_re = _richardson_first(m, x, k, h)
        d_im = _richardson_first(m, x, k, 1j * h)
        resid = np.abs(d_re - d_im)
        bad = resid > CR_TOL * (1 + np.abs(d_re))
        if np.any(bad):
            raise HolomorphyViolation(
                f"{m.name}: Cauchy-Riemann residual {resid.max():.3e} in variable {k}")
        worst = max(worst, float(resid.max()))
        jac[:, k] = d_re
    return JacobianResult(jac, worst)


def jacobian(m: HoloMap, z, step: float | None = None) -> np.ndarray:
    return jacobian_with_residual(m, z, step).matrix


def derivative(m: HoloMap, z: complex, step: float | None = None) -> complex:
    """Derivative of a one-variable scalar map."""
    if m.arity.n_in != 1 or m.arity.n_out != 1:
        raise ArityMismatch(f"{m.name}: derivative needs a DiscToDisc map")
    return complex(jacobian(m, z, step)[0, 0])


class SecondDerivatives(NamedTuple):
    f_ss: complex
    f_sp: complex
    f_pp: complex


def _component(m: HoloMap, component: int) -> int:
    if m.arity.n_in != 2:
        raise ArityMismatch(f"{m.name}: second derivatives need a G2 input")
    if not 0 <= component < m.arity.n_out:
        raise ArityMismatch(f"{m.name}: no component {component}")
    return component


def _grid(m: HoloMap, s: complex, p: complex, hs: float, hp: float, c: int) -> np.ndarray:
    out = np.empty((3, 3), dtype=complex)
    for i in range(3):
        for j in range(3):
            out[i, j] = m.values((s + (i - 1) * hs, p + (j - 1) * hp))[c]
    return out


def _stencil(g: np.ndarray, hs: float, hp: float) -> np.ndarray:
    f_ss = (g[2, 1] - 2 * g[1, 1] + g[0, 1]) / hs ** 2
    f_pp = (g[1, 2] - 2 * g[1, 1] + g[1, 0]) / hp ** 2
    f_sp = (g[2, 2] - g[2, 0] - g[0, 2] + g[0, 0]) / (4 * hs * hp)
    return np.array([f_ss, f_sp, f_pp])


def second_derivatives(m: HoloMap, z, component: int = 0,
                       step: float | None = None) -> SecondDerivatives:
    """Pure and mixed second partials of one component at ``z``."""
    c = _component(m, component)
    s, p = m._coerce(z)
    hs, hp = _step(SECOND_STEP, s, step), _step(SECOND_STEP, p, step)
    coarse = _stencil(_grid(m, s, p, hs, hp, c), hs, hp)
    fine = _stencil(_grid(m, s, p, hs / 2, hp / 2, c), hs / 2, hp / 2)
    return SecondDerivatives(*((4 * fine - coarse) / 3).tolist())


def mixed_partial(m: HoloMap, z, component: int = 0, order: str = "sp",
                  step: float | None = None) -> complex:
    """Mixed partial by nested first differences.

    ``order="sp"`` differentiates in p first and then in s; ``"ps"`` the
    other way round.  Independent of the cross stencil, so it serves as a
    symmetry check.
    """
    c = _component(m, component)
    x = np.array(m._coerce(z), dtype=complex)
    outer, inner = (0, 1) if order == "sp" else (1, 0)
    h = _step(SECOND_STEP, x[outer], step)

    def inner_partial(y):
        return _richardson_first(m, y, inner, _step(FIRST_STEP, y[inner], None))[c]

    def central(hh):
        e = np.zeros(2, dtype=complex)
        e[outer] = hh
        return (inner_partial(x + e) - inner_partial(x - e)) / (2 * hh)

    return complex((4 * central(h / 2) - central(h)) / 3)


def exact_jacobian(m: HoloMap, z) -> np.ndarray | None:
    """Jacobian by forward-mode differentiation of the map's expressions.

    Returns None for maps without expressions (closures), where only the
    finite-difference :func:`jacobian` applies.
    """
    if not m.exprs:
        return None
    from . import expr as ex
    from ..errors import PoleHit

    names = ("s", "p") if m.arity.n_in == 2 else ("z",)
    args = m._coerce(z)
    compiled = ex.compile_gradients(m.exprs, names)
    try:
        _, grads = compiled(*args)
    except ZeroDivisionError as exc:
        raise PoleHit(f"{m.name}: pole at {args}") from exc
    jac = np.array(grads, dtype=complex)
    if not np.all(np.isfinite(jac)):
        raise PoleHit(f"{m.name}: non-finite derivative at {args}")
    return jac


def exact_second_derivatives(m: HoloMap, z, component: int = 0) -> SecondDerivatives | None:
    """Second partials by second-order forward-mode differentiation.

    Returns None for maps without expressions.  Large second derivatives
    combined in cancelling sums lose digits under the stencil, which this
    avoids.
    """
    c = _component(m, component)
    if not m.exprs:
        return None
    from . import expr as ex
    from ..errors import PoleHit

    args = m._coerce(z)
    try:
        jet = ex.evaluate_jets([m.exprs[c]], ("s", "p"), args)[0]
    except ZeroDivisionError as exc:
        raise PoleHit(f"{m.name}: pole at {args}") from exc
    h = jet.hess
    if not np.all(np.isfinite(h)):
        raise PoleHit(f"{m.name}: non-finite derivative at {args}")
    return SecondDerivatives(complex(h[0, 0]), complex(h[0, 1]), complex(h[1, 1]))
