# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Nevanlinna counting functions of self-maps.

Preimages of w under phi = P / Q are the roots of P - w Q; a preimage z
in the disk contributes log(1/|z|) once per multiplicity.
"""
import logging

from typing import Optional

import numpy as np

from nevlab.helpers import chunks
from nevlab.helpers.errors import (
    AtBasePoint,
    DimensionMismatch,
    DomainError
)
from nevlab.helpers.nevanlinna.structs import CountingSample, SelfMap
from nevlab.helpers.numerics import (
    Polynomial,
    SphereQuadrature,
    batch_roots,
    poly_roots,
    zeros_in_disk
)


logger = logging.getLogger(__name__)

BASE_POINT_TOLERANCE = 1e-10
EDGE_CUTOFF = 1e-12
MERGE_DISTANCE = 1e-7
CHUNK_ROWS = 200_000


def _check_point(phi: SelfMap, w: complex) -> None:
    if not abs(w) < 1:
        raise DomainError(f"w = {w} is not in the unit disk")

    if abs(w - phi.value_at_origin()) < BASE_POINT_TOLERANCE:
        raise AtBasePoint(f"w = {w} coincides with phi(0); the counting function is not defined there")


def _require_disk_map(phi: SelfMap) -> None:
    if phi.d != 1:
        raise DimensionMismatch(f"expected a map of the disk, got d={phi.d}")


def preimage_equation(phi: SelfMap, w: complex) -> Polynomial:
    numerator, denominator = phi.rational()
    return numerator - w * denominator


def merge_roots(roots: np.ndarray, distance: float = MERGE_DISTANCE) -> list:
    """Groups roots closer than `distance` into (mean, multiplicity) pairs"""
    order = np.lexsort((roots.imag, roots.real))
    clusters = []

    for root in roots[order]:
        for cluster in clusters:
            if abs(root - cluster[0]) < distance:
                cluster.append(root)
                break
        else:
            clusters.append([root])

    return [(complex(np.mean(c)), len(c)) for c in clusters]


def counting(phi: SelfMap, w: complex) -> CountingSample:
    """N_phi(w) with the list of preimages in the disk"""
    _require_disk_map(phi)
    w = complex(w)
    _check_point(phi, w)

    roots = poly_roots(preimage_equation(phi, w))
    preimages = []

    for z, multiplicity in merge_roots(roots):
        if abs(z) < 1 - EDGE_CUTOFF:
            preimages.append((z, multiplicity))
        elif abs(z) < 1:
            logger.debug("discarding preimage %s of %s at the unit circle", z, w)

    value = float(sum(m * np.log(1 / abs(z)) for z, m in preimages))

    return CountingSample(w=w, preimages=tuple(preimages), value=value)


def _sum_logs(roots: np.ndarray) -> np.ndarray:
    modulus = np.abs(roots)
    inside = modulus < 1 - EDGE_CUTOFF

    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.where(inside, -np.log(np.where(inside, modulus, 1.0)), 0.0)

    return logs.sum(axis=-1)


def counting_values(phi: SelfMap, ws) -> np.ndarray:
    """N_phi on an array of points, one batched root solve per chunk.

    Base points are not checked here; callers keep w away from phi(0).
    """
    _require_disk_map(phi)
    ws = np.asarray(ws, dtype=complex)
    flat = ws.ravel()

    numerator, denominator = phi.rational()
    width = max(numerator.degree, denominator.degree) + 1
    top = np.zeros(width, dtype=complex)
    bottom = np.zeros(width, dtype=complex)
    top[:numerator.degree + 1] = numerator.array
    bottom[:denominator.degree + 1] = denominator.array

    values = np.zeros(flat.shape, dtype=float)

    for block in chunks(np.arange(flat.size), CHUNK_ROWS):
        coeffs = top[None, :] - flat[block, None] * bottom[None, :]
        values[block] = _sum_logs(batch_roots(coeffs))

    return values.reshape(ws.shape)


def counting_avg_values(phi: SelfMap, ws, sq: Optional[SphereQuadrature] = None) -> np.ndarray:
    """Sphere average of the slice counting functions on an array of points"""
    if phi.d == 1:
        return counting_values(phi, ws)

    if sq is None or sq.d != phi.d:
        raise DimensionMismatch(f"a sphere quadrature for d={phi.d} is required")

    ws = np.asarray(ws, dtype=complex)
    flat = ws.ravel()

    slices = phi.body.slice_matrix(sq.points)
    values = np.zeros(flat.shape, dtype=float)
    per_chunk = max(CHUNK_ROWS // sq.size, 1)

    for block in chunks(np.arange(flat.size), per_chunk):
        coeffs = np.repeat(slices[None, :, :], block.size, axis=0)
        coeffs[:, :, 0] -= flat[block, None]

        sums = _sum_logs(batch_roots(coeffs.reshape(-1, slices.shape[1])))
        values[block] = sums.reshape(block.size, sq.size) @ sq.weights

    return values.reshape(ws.shape)


def counting_avg(phi: SelfMap, w: complex, sq: Optional[SphereQuadrature] = None) -> float:
    """Integral over the sphere of N_{phi_zeta}(w).

    For d = 1 every slice is a rotation of the domain, which leaves the
    counting function unchanged, so this is counting(phi, w).value.
    """
    w = complex(w)
    _check_point(phi, w)

    if phi.d == 1:
        return counting(phi, w).value

    return float(counting_avg_values(phi, np.array([w]), sq)[0])


def validate_preimages(phi: SelfMap, sample: CountingSample) -> bool:
    """Cross-checks a preimage count against the argument principle.

    The contour radius is picked in [0.9, 0.999] as far as possible from
    every root modulus, then the roots inside are compared with the winding
    number of P - w Q on that circle.
    """
    equation = preimage_equation(phi, sample.w)
    roots = poly_roots(equation)

    candidates = np.linspace(0.9, 0.999, 100)
    gaps = np.min(np.abs(np.abs(roots)[None, :] - candidates[:, None]), axis=1)
    radius = float(candidates[np.argmax(gaps)])

    expected = int(np.sum(np.abs(roots) < radius))
    counted = zeros_in_disk(equation, 0j, radius)

    if expected != counted:
        logger.warning("preimage count %d disagrees with the winding number %d at w=%s",
                       expected, counted, sample.w)

    return expected == counted
