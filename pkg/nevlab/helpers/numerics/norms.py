# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from typing import Callable

import numpy as np

from nevlab.helpers.errors import BadRadius, DimensionMismatch
from nevlab.helpers.numerics.structs import (
    MultiPolynomial,
    Polynomial,
    SphereQuadrature
)


def hardy2_norm(f: Polynomial) -> float:
    """H^2 norm of a polynomial on the disk, the l^2 norm of its coefficients"""
    return float(np.sqrt(np.sum(np.abs(f.array) ** 2))) if f.coeffs else 0.0


def hardy_norm_ball(g: Callable, p: float, d: int, sq: SphereQuadrature, r: float) -> float:
    """Integral mean of |g|^p over the sphere of radius r in C^d, to the power 1/p.

    `g` takes points of shape (n, d). For d = 1 it may instead take a flat
    array of complex numbers, as Polynomial objects do.
    """
    if not 0 < r < 1:
        raise BadRadius(f"radius must lie in (0, 1), got {r}")

    if sq.d != d:
        raise DimensionMismatch(f"sphere quadrature is for d={sq.d}, expected d={d}")

    points = r * sq.points

    if d == 1 and isinstance(g, Polynomial):
        values = g(points[:, 0])
    else:
        values = g(points)

    mean = float(np.sum(sq.weights * np.abs(values) ** p))

    return mean ** (1.0 / p)


def slice_function(f: MultiPolynomial, zeta) -> Polynomial:
    """The slice lambda -> f(lambda * zeta) for a unit vector zeta"""
    return f.slice(zeta)
