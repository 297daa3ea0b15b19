"""Seeded random samplers for points, directions and disc parameters."""
from __future__ import annotations

import numpy as np

from .geometry import Point

BOX_S = 2.5
BOX_P = 1.5


def disc_points(rng: np.random.Generator, n: int, radius: float = 1.0) -> np.ndarray:
    """``n`` points uniform in the disc of the given radius."""
    r = radius * np.sqrt(rng.uniform(size=n))
    return r * np.exp(2j * np.pi * rng.uniform(size=n))


def disc_point(rng: np.random.Generator, radius: float = 1.0) -> complex:
    return complex(disc_points(rng, 1, radius)[0])


def circle_point(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * np.pi * rng.uniform()))


def interior_points(rng: np.random.Generator, n: int, radius: float = 0.98) -> list[Point]:
    """Symmetrizations of pairs drawn from the disc of the given radius."""
    a = disc_points(rng, n, radius)
    b = disc_points(rng, n, radius)
    return [Point(x + y, x * y) for x, y in zip(a, b)]


def interior_point(rng: np.random.Generator, radius: float = 0.98) -> Point:
    return interior_points(rng, 1, radius)[0]


def box_points(rng: np.random.Generator, n: int) -> list[Point]:
    """Uniform samples of the polydisc ``|s| < 2.5, |p| < 1.5``."""
    s = disc_points(rng, n, BOX_S)
    p = disc_points(rng, n, BOX_P)
    return [Point(a, b) for a, b in zip(s, p)]


def directions(rng: np.random.Generator, n: int) -> np.ndarray:
    """Complex Gaussian vectors, shape ``(n, 2)``."""
    return rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
