# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Numerical checks of the Littlewood-Paley identity and Stanton's formula"""
import logging

from typing import Optional

import numpy as np

from nevlab.helpers.errors import ConstantMap, DimensionMismatch
from nevlab.helpers.nevanlinna.counting import (
    counting_avg_values,
    counting_values
)
from nevlab.helpers.nevanlinna.structs import IdentityCheck, SelfMap
from nevlab.helpers.numerics import (
    DiskQuadrature,
    Polynomial,
    SphereQuadrature,
    disk_quadrature,
    graded_disk_integral,
    hardy2_norm,
    hardy_norm_ball,
    inner_disk_integral
)


logger = logging.getLogger(__name__)

BASE_POINT_RADIUS = 1e-4


def _relative(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(lhs, 1e-30)


def littlewood_paley_verify(f: Polynomial, dq: Optional[DiskQuadrature] = None) -> IdentityCheck:
    """||f||^2 against |f(0)|^2 + 2 * integral of |f'|^2 log(1/|w|) dA"""
    if dq is None:
        dq = disk_quadrature()

    derivative = f.derivative()

    lhs = hardy2_norm(f) ** 2
    area = dq.integrate(lambda w: np.abs(derivative(w)) ** 2 * np.log(1 / np.abs(w)))
    rhs = abs(complex(f(0j))) ** 2 + 2 * area

    return IdentityCheck(lhs=lhs, rhs=rhs, rel_error=_relative(lhs, rhs))


def circle_mean_square(g, rtol: float = 1e-14, start: int = 64, max_nodes: int = 2 ** 16) -> float:
    """Mean of |g|^2 over the unit circle, trapezoid rule with node doubling"""
    nodes, previous = start, None

    while True:
        zeta = np.exp(2j * np.pi * np.arange(nodes) / nodes)
        value = float(np.mean(np.abs(g(zeta)) ** 2))

        if previous is not None and abs(value - previous) <= rtol * abs(value):
            return value

        if nodes >= max_nodes:
            logger.warning("circle mean did not settle below %.1e with %d nodes", rtol, nodes)
            return value

        previous, nodes = value, nodes * 2


def composition_norm_squared(f: Polynomial, phi: SelfMap, sq: Optional[SphereQuadrature] = None, r: float = 0.9999) -> float:
    """||f o phi||^2 in H^2 of the disk or the ball"""
    if phi.d == 1 and phi.is_polynomial:
        return hardy2_norm(f.compose(phi.univariate())) ** 2

    if phi.d == 1:
        return circle_mean_square(lambda zeta: f(phi(zeta)))

    if sq is None:
        raise DimensionMismatch(f"a sphere quadrature for d={phi.d} is required")

    return hardy_norm_ball(lambda z: f(phi(z)), 2, phi.d, sq, r) ** 2


def stanton_verify(
        f: Polynomial,
        phi: SelfMap,
        dq: Optional[DiskQuadrature] = None,
        sq: Optional[SphereQuadrature] = None,
        rtol: float = 1e-9,
        r: float = 0.9999) -> IdentityCheck:
    """||f o phi||^2 against |f(phi(0))|^2 + 2 * integral of |f'|^2 N dA.

    For d = 1 the area integral uses the graded rule centred at phi(0) with
    N = N_phi. For d >= 2 N is the sphere average of the slice counting
    functions and the area integral uses the fixed rule `dq`, also centred
    at phi(0). In both cases the share of the disk of radius 1e-4 around
    phi(0) is reported.
    """
    if phi.is_polynomial and phi.body.degree < 1:
        raise ConstantMap("Stanton's formula needs a nonconstant map")

    derivative = f.derivative()
    base = phi.value_at_origin()

    def integrand(w):
        return np.abs(derivative(w)) ** 2 * counting_avg_values(phi, w, sq)

    lhs = composition_norm_squared(f, phi, sq, r)

    if phi.d == 1:
        result = graded_disk_integral(integrand, center=base, inner_radius=BASE_POINT_RADIUS, rtol=rtol)
        area, share, converged = result.value, result.inner_share, result.converged
    else:
        if dq is None:
            dq = disk_quadrature(radial_order=24, angular_count=16, grading=4)

        area = dq.integrate(integrand, center=base)
        share = inner_disk_integral(integrand, center=base, radius=BASE_POINT_RADIUS)
        converged = True

    rhs = abs(complex(f(base))) ** 2 + 2 * area

    return IdentityCheck(
        lhs=lhs,
        rhs=rhs,
        rel_error=_relative(lhs, rhs),
        base_point_share=2 * share,
        converged=converged
    )
