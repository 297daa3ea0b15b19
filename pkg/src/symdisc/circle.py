"""Global maximization of smooth periodic functions on the unit circle.

Strategy: evaluate on a uniform angle grid, keep the best few discrete local
maxima, refine each by golden-section search in its two-cell bracket and
return the overall best.  All bracket refinements run together as one
vectorized golden-section iteration.
"""
from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

TWO_PI = 2.0 * math.pi
GRID_POINTS = 1024
BRACKETS = 3
ANGLE_TOL = 1e-12

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class CircleMax(NamedTuple):
    value: float
    angle: float

    @property
    def omega(self) -> complex:
        return complex(math.cos(self.angle), math.sin(self.angle))


def _pick_brackets(values: np.ndarray, count: int) -> np.ndarray:
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    peaks = np.flatnonzero((values >= left) & (values >= right))
    if peaks.size == 0:
        peaks = np.arange(values.size)
    # stable sort on -value keeps the smallest angle first among ties
    order = np.argsort(-values[peaks], kind="stable")
    return peaks[order[:count]]


def golden_max(func: Callable[[np.ndarray], np.ndarray], lo: np.ndarray,
               hi: np.ndarray, tol: float = ANGLE_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized golden-section maximization on the intervals ``[lo, hi]``.

    Returns ``(x, f(x))`` for every interval.  ``func`` must accept arrays.
    """
    a = np.array(lo, dtype=float)
    b = np.array(hi, dtype=float)
    width = float(np.max(b - a))
    if width <= tol:
        x = 0.5 * (a + b)
        return x, func(x)
    n = int(math.ceil(math.log(tol / width) / math.log(_INV_PHI)))
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc = func(c)
    fd = func(d)
    for _ in range(n):
        left = fc >= fd
        # maximum lies in [a, d] where f(c) wins, else in [c, b]
        a, b = np.where(left, a, c), np.where(left, d, b)
        reused = np.where(left, c, d)
        reused_f = np.where(left, fc, fd)
        probe = np.where(left, b - _INV_PHI * (b - a), a + _INV_PHI * (b - a))
        fp = func(probe)
        c = np.where(left, probe, reused)
        d = np.where(left, reused, probe)
        fc = np.where(left, fp, reused_f)
        fd = np.where(left, reused_f, fp)
    x = 0.5 * (a + b)
    return x, func(x)


def circle_max(func: Callable[[np.ndarray], np.ndarray], grid: int = GRID_POINTS,
               brackets: int = BRACKETS, tol: float = ANGLE_TOL) -> CircleMax:
    """Global maximum of a 2*pi-periodic function of the angle.

    ``func`` maps an array of angles to an array of real values.  Ties among
    grid candidates resolve to the smallest angle, so the result is
    deterministic.
    """
    step = TWO_PI / grid
    angles = step * np.arange(grid)
    values = np.asarray(func(angles), dtype=float)
    if not np.all(np.isfinite(values)):
        raise FloatingPointError("objective is not finite on the circle grid")
    picks = _pick_brackets(values, brackets)
    best_i = int(np.argmax(values))
    best = CircleMax(float(values[best_i]), float(angles[best_i]))
    centers = angles[picks]
    xs, fs = golden_max(func, centers - step, centers + step, tol)
    for x, fx in zip(xs, fs):
        if fx > best.value:
            best = CircleMax(float(fx), float(x % TWO_PI))
    return best
