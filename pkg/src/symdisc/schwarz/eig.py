"""Closed-form eigen-decomposition of complex 2x2 matrices."""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from ..geometry import Direction

DEFECT_TOL = 1e-12


@dataclass(frozen=True)
class Eigenpair2:
    lambda_: complex
    mu: complex
    v_lambda: Direction
    v_mu: Direction
    defective: bool = False

    @property
    def values(self) -> tuple[complex, complex]:
        return self.lambda_, self.mu


def _null_vector(m: np.ndarray, e: complex) -> np.ndarray | None:
    """Unit vector spanning the kernel of ``m - e I`` from its larger row."""
    a, b = m[0, 0] - e, m[0, 1]
    c, d = m[1, 0], m[1, 1] - e
    r1 = np.array([b, -a])
    r2 = np.array([d, -c])
    v = r1 if abs(a) + abs(b) >= abs(c) + abs(d) else r2
    n = np.linalg.norm(v)
    return None if n == 0 else v / n


def char_roots(tr: complex, det: complex, disc: complex) -> tuple[complex, complex]:
    """Roots of ``x^2 - tr x + det`` given the discriminant, without cancellation."""
    sq = cmath.sqrt(disc)
    if (tr.conjugate() * sq).real < 0:
        sq = -sq
    q = 0.5 * (tr + sq)
    if q == 0:
        return 0j, 0j
    return q, det / q


def eig2x2(m) -> Eigenpair2:
    """Eigenvalues and eigenvectors of a 2x2 complex matrix.

    The discriminant is formed as ``(a - d)^2 + 4bc`` which stays accurate
    when the eigenvalues are close.  A repeated eigenvalue of a non-scalar
    matrix has one eigenvector; it is returned twice and ``defective`` is set.
    """
    m = np.asarray(m, dtype=complex)
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    tr, det = complex(a + d), complex(a * d - b * c)
    disc = complex((a - d) ** 2 + 4 * b * c)
    lam, mu = char_roots(tr, det, disc)
    scale = max(1.0, float(np.abs(m).max()))
    repeated = abs(lam - mu) <= DEFECT_TOL * scale
    scalar = abs(b) <= DEFECT_TOL * scale and abs(c) <= DEFECT_TOL * scale and abs(a - d) <= DEFECT_TOL * scale
    if scalar:
        return Eigenpair2(lam, mu, Direction(1, 0), Direction(0, 1), False)
    v1 = _null_vector(m, lam)
    v2 = v1 if repeated else _null_vector(m, mu)
    return Eigenpair2(lam, mu, Direction(*v1), Direction(*v2), bool(repeated))


def multiset_distance(x: tuple[complex, complex], y: tuple[complex, complex]) -> float:
    straight = max(abs(x[0] - y[0]), abs(x[1] - y[1]))
    crossed = max(abs(x[0] - y[1]), abs(x[1] - y[0]))
    return min(straight, crossed)
