# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""The integrand N(w) (1 - |Theta(w)|) / (1 - |w|) and its circle sups"""
import logging

from typing import Optional, Sequence

import numpy as np

from nevlab.helpers.criterion.structs import CriterionProfile
from nevlab.helpers.errors import BadRadius, DomainError
from nevlab.helpers.inner import InnerFunction, inner_modulus
from nevlab.helpers.nevanlinna import SelfMap, counting_avg, counting_avg_values
from nevlab.helpers.numerics import SphereQuadrature


logger = logging.getLogger(__name__)

BASE_POINT_SKIP = 1e-8
REFINEMENT = 3
MOVE_THRESHOLD = 0.1


def _boundary_factor(theta: InnerFunction, w):
    w = np.asarray(w, dtype=complex)
    return np.maximum(1 - inner_modulus(theta, w), 0.0) / (1 - np.abs(w))


def criterion_integrand(phi: SelfMap, theta: InnerFunction, w: complex, sq: Optional[SphereQuadrature] = None) -> float:
    w = complex(w)
    return float(counting_avg(phi, w, sq) * _boundary_factor(theta, w))


def criterion_values(phi: SelfMap, theta: InnerFunction, ws, sq: Optional[SphereQuadrature] = None) -> np.ndarray:
    """criterion_integrand on an array of points; callers keep away from phi(0)"""
    ws = np.asarray(ws, dtype=complex)

    if np.any(np.abs(ws) >= 1):
        raise DomainError("criterion points must lie in the open unit disk")

    return counting_avg_values(phi, ws, sq) * _boundary_factor(theta, ws)


def _check_radii(radii: Sequence[float]) -> tuple:
    radii = tuple(float(r) for r in radii)

    if not radii:
        raise BadRadius("at least one radius is required", field="radii")

    for idx, r in enumerate(radii):
        if not 0 < r < 1:
            raise BadRadius(f"radius {r} is not in (0, 1)", field=f"radii[{idx}]")

        if idx and r <= radii[idx - 1]:
            raise BadRadius("radii must be strictly increasing", field=f"radii[{idx}]")

    return radii


def _sampled(phi, theta, r, angles, sq) -> tuple:
    ws = r * np.exp(1j * angles)
    keep = np.abs(ws - phi.value_at_origin()) >= BASE_POINT_SKIP

    return angles[keep], criterion_values(phi, theta, ws[keep], sq)


def circle_sup(phi: SelfMap, theta: InnerFunction, r: float, angular_count: int = 256, sq: Optional[SphereQuadrature] = None) -> tuple:
    """Sup of the integrand on |w| = r and whether the refined pass ran.

    After the equispaced pass, the neighbourhood of the best sample is
    resampled at three times the density. If that moves the max by more
    than 10%, the whole circle is resampled at that density.
    """
    step = 2 * np.pi / angular_count
    angles, values = _sampled(phi, theta, r, step * np.arange(angular_count), sq)

    if not values.size:
        return 0.0, False

    coarse = float(np.max(values))
    peak = angles[np.argmax(values)]

    offsets = step * np.array([-2, -1, 1, 2]) / REFINEMENT
    _, local = _sampled(phi, theta, r, peak + offsets, sq)
    best = max(coarse, float(np.max(local))) if local.size else coarse

    if best - coarse <= MOVE_THRESHOLD * coarse:
        return best, False

    logger.debug("circle r=%g: max moved from %.6e to %.6e, resampling at %dx", r, coarse, best, REFINEMENT)
    count = REFINEMENT * angular_count
    _, fine = _sampled(phi, theta, r, 2 * np.pi * np.arange(count) / count, sq)

    return max(best, float(np.max(fine))), True


def criterion_profile(
        phi: SelfMap,
        theta: InnerFunction,
        radii: Sequence[float],
        angular_count: int = 256,
        sq: Optional[SphereQuadrature] = None) -> CriterionProfile:
    radii = _check_radii(radii)

    if angular_count < 1:
        raise DomainError("angular_count must be >= 1", field="angular_count")

    sups, refined = [], []

    for r in radii:
        value, again = circle_sup(phi, theta, r, angular_count, sq)
        sups.append(value)
        refined.append(again)

    return CriterionProfile(
        radii=radii,
        sup_values=tuple(sups),
        angular_count=angular_count,
        refined=tuple(refined),
        quadrature=sq.describe() if sq is not None else {"d": 1},
        phi=phi.describe(),
        theta=theta.describe()
    )


def criterion_heatmap(
        phi: SelfMap,
        theta: InnerFunction,
        radii: Sequence[float],
        angular_count: int = 64,
        sq: Optional[SphereQuadrature] = None) -> list:
    """(r, angle, value) rows of the integrand on a polar mesh, phi(0) skipped"""
    radii = _check_radii(radii)
    angles = 2 * np.pi * np.arange(angular_count) / angular_count
    rows = []

    for r in radii:
        kept, values = _sampled(phi, theta, r, angles, sq)
        rows.extend((r, float(a), float(v)) for a, v in zip(kept, values))

    return rows
