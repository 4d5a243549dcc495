# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Quadrature rules on the disk, the circle and the sphere of C^d"""
import logging

from functools import lru_cache
from typing import Callable

import numpy as np

from nevlab.helpers.errors import DomainError
from nevlab.helpers.numerics.structs import (
    DiskQuadrature,
    GradedIntegral,
    SphereQuadrature,
    mobius_pullback
)


logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def _leggauss(order: int):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)

    return nodes, weights


def gauss_legendre(order: int, a: float = 0.0, b: float = 1.0):
    """Gauss-Legendre nodes and weights on [a, b]"""
    nodes, weights = _leggauss(order)
    half = 0.5 * (b - a)

    return a + half * (nodes + 1), half * weights


def graded_radial_rule(order: int, grading: int, outer: float = 1.0):
    """Radial rule for the normalized area on the disk of radius `outer`.

    The squared radius is s = outer^2 * t^grading with Gauss-Legendre nodes
    in t, which weakens a logarithmic singularity at the origin. Returns
    radii and weights summing to outer^2.
    """
    t, weights = gauss_legendre(order)
    s = outer ** 2 * t ** grading
    weights = outer ** 2 * grading * t ** (grading - 1) * weights

    return np.sqrt(s), weights


def disk_quadrature(radial_order: int = 64, angular_count: int = 64, grading: int = 4) -> DiskQuadrature:
    """Product rule for the normalized area measure on the unit disk.

    With grading g the rule is exact for |w|^(2a) when g*a + g - 1 < 2 *
    radial_order, and for w^a conj(w)^b, a != b, when |a - b| < angular_count.
    """
    if radial_order < 1 or angular_count < 1 or grading < 1:
        raise DomainError("quadrature orders and grading must be positive")

    radii, weights = graded_radial_rule(radial_order, grading)

    return DiskQuadrature(
        radii=radii,
        radial_weights=weights,
        angular_count=angular_count,
        grading=grading
    )


def circle_quadrature(n: int) -> SphereQuadrature:
    """Equispaced nodes on the unit circle, the d = 1 sphere"""
    if n < 1:
        raise DomainError("n must be >= 1")

    points = np.exp(2j * np.pi * np.arange(n) / n)[:, None]

    return SphereQuadrature(d=1, points=points, weights=np.full(n, 1.0 / n))


def sphere_uniform(d: int, n: int, seed: int) -> SphereQuadrature:
    """n uniform samples of the unit sphere of C^d (normalized Gaussians)"""
    if d < 1 or n < 1:
        raise DomainError(f"sphere_uniform needs d >= 1 and n >= 1, got d={d}, n={n}")

    rng = np.random.default_rng(seed)
    gaussian = rng.standard_normal((n, 2 * d))

    points = gaussian[:, :d] + 1j * gaussian[:, d:]
    points = points / np.linalg.norm(points, axis=1)[:, None]

    return SphereQuadrature(d=d, points=points, weights=np.full(n, 1.0 / n), seed=seed)


class _PolarPanels():
    """Annular panels of a Mobius-centred polar rule.

    Panel integrals are Gauss-Legendre in the radius and trapezoid in the
    angle; the angle count doubles while the rule on every other node
    disagrees with the full rule.
    """
    def __init__(
            self,
            func: Callable,
            center: complex,
            order: int,
            angular_count: int,
            max_angular: int,
            rtol: float,
            atol: float,
            max_depth: int) -> None:
        self.func = func
        self.center = center
        self.order = order
        self.angular_count = angular_count
        self.max_angular = max_angular
        self.rtol = rtol
        self.atol = atol
        self.max_depth = max_depth

    def _evaluate(self, radii: np.ndarray, weights: np.ndarray) -> float:
        count = self.angular_count

        while True:
            angles = 2 * np.pi * np.arange(count) / count
            u = np.outer(radii, np.exp(1j * angles))
            w, jacobian = mobius_pullback(u, self.center)
            values = np.real(self.func(w)) * jacobian

            full = float(np.sum(weights * values.mean(axis=1)))
            half = float(np.sum(weights * values[:, ::2].mean(axis=1)))

            if abs(full - half) <= max(self.rtol * abs(full), self.atol) or count >= self.max_angular:
                return full

            count *= 2

    def panel(self, a: float, b: float) -> float:
        radii, weights = gauss_legendre(self.order, a, b)
        return self._evaluate(radii, 2 * radii * weights)

    def inner(self, outer: float, grading: int) -> float:
        radii, weights = graded_radial_rule(self.order, grading, outer)
        return self._evaluate(radii, weights)

    def annulus(self, a: float, b: float) -> float:
        total = 0.0
        pending = [(a, b, self.panel(a, b), 0)]

        while pending:
            lo, hi, coarse, depth = pending.pop()
            mid = 0.5 * (lo + hi)
            left, right = self.panel(lo, mid), self.panel(mid, hi)
            fine = left + right

            if abs(fine - coarse) <= max(self.rtol * abs(fine), self.atol) or depth >= self.max_depth:
                total += fine
            else:
                pending.append((mid, hi, right, depth + 1))
                pending.append((lo, mid, left, depth + 1))

        return total


def graded_disk_integral(
        func: Callable,
        center: complex = 0j,
        order: int = 16,
        angular_count: int = 64,
        grading: int = 4,
        inner_radius: float = 1e-4,
        rtol: float = 1e-9,
        atol: float = 1e-15,
        max_panels: int = 40,
        max_depth: int = 10,
        max_angular: int = 4096) -> GradedIntegral:
    """Integral of func over the unit disk against the normalized area.

    The rule is centred at `center` (a point the integrand may be
    logarithmically singular at) through a disk automorphism. Around the
    center, a disk of Euclidean radius about `inner_radius` is integrated
    with a graded rule and reported separately. Towards the unit circle the
    radius is split into geometric panels [1 - 2^-j, 1 - 2^-(j+1)], each
    refined by bisection; the sequence stops when the last panel and the
    geometric tail estimate fall below rtol relative to the total.
    """
    center = complex(center)

    if abs(center) >= 1:
        raise DomainError(f"center {center} is not in the unit disk")

    panels = _PolarPanels(func, center, order, angular_count, max_angular, rtol, atol, max_depth)

    inner_edge = min(inner_radius / (1 - abs(center) ** 2), 0.25)
    inner_share = panels.inner(inner_edge, grading)

    total = inner_share + panels.annulus(inner_edge, 0.5)
    contributions, tail, change = [], 0.0, float("inf")
    converged = False

    for j in range(1, max_panels + 1):
        piece = panels.annulus(1 - 2.0 ** -j, 1 - 2.0 ** -(j + 1))
        total += piece
        contributions.append(piece)

        if len(contributions) < 3:
            continue

        last, before = abs(contributions[-1]), abs(contributions[-2])

        if last <= atol and before <= atol:
            tail, change, converged = 0.0, 0.0, True
            break

        ratio = last / before if before > 0 else float("inf")
        tail = piece * ratio / (1 - ratio) if ratio < 1 else 0.0
        change = (last + abs(tail)) / max(abs(total), atol)

        if ratio < 1 and change <= rtol:
            converged = True
            break

    if not converged:
        logger.debug("graded integral did not stabilize: relative change %.3e after %d panels", change, len(contributions))

    return GradedIntegral(
        value=total + tail,
        converged=converged,
        panels=len(contributions),
        inner_share=inner_share,
        tail=tail,
        last_change=change
    )


def inner_disk_integral(
        func: Callable,
        center: complex,
        radius: float,
        order: int = 8,
        angular_count: int = 16,
        grading: int = 4) -> float:
    """Integral over the small disk of Euclidean radius about `radius` around
    `center`, with the same graded, Mobius-centred rule as graded_disk_integral"""
    center = complex(center)
    edge = min(radius / (1 - abs(center) ** 2), 0.25)
    panels = _PolarPanels(func, center, order, angular_count, angular_count, 0.0, 0.0, 0)

    return panels.inner(edge, grading)
