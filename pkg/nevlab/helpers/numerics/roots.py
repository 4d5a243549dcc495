# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Root finding and zero counting for complex polynomials"""
import logging

from typing import Callable, Optional

import numpy as np

from nevlab.helpers.errors import (
    ConstantPolynomial,
    NoConvergence,
    NonIntegerWinding,
    ZeroNearContour
)
from nevlab.helpers.numerics.structs import Polynomial


logger = logging.getLogger(__name__)

RESIDUAL_FACTOR = 1e-8


def poly_roots(p: Polynomial, polish_steps: int = 3) -> np.ndarray:
    """Returns the degree(p) roots of p, repeated according to multiplicity.

    Roots come from the companion-matrix eigenvalues (numpy.roots) followed
    by a few guarded Newton steps, a step is only kept where it lowers the
    residual.
    """
    if p.degree < 1:
        raise ConstantPolynomial(f"cannot find roots of a polynomial of degree {p.degree}")

    roots = np.roots(p.array[::-1]).astype(complex)
    roots = _polish(p.array[None, :], roots[None, :], polish_steps)[0]

    residuals = np.abs(p(roots))
    bound = RESIDUAL_FACTOR * (1 + p.max_abs_coeff())

    if roots.shape[0] != p.degree or not np.all(np.isfinite(roots)) or np.any(residuals > bound):
        raise NoConvergence(
            f"root residuals exceed {bound:.3e} (max {np.max(residuals):.3e})",
            residuals=residuals
        )

    return roots


def batch_roots(coeffs, rtol: float = 1e-13, polish_steps: int = 2) -> np.ndarray:
    """Roots of many polynomials at once.

    `coeffs` has one polynomial per row (ascending degree). Coefficients
    below rtol times the row's largest one count as zero when deciding the
    effective degree of a row; the returned array has one column per degree
    of the widest row and unused slots hold NaN.
    """
    coeffs = np.atleast_2d(np.asarray(coeffs, dtype=complex))
    rows, width = coeffs.shape
    out = np.full((rows, max(width - 1, 0)), np.nan, dtype=complex)

    if width < 2:
        return out

    scale = np.max(np.abs(coeffs), axis=1)
    significant = np.abs(coeffs) > rtol * scale[:, None]
    degrees = np.where(
        significant.any(axis=1),
        width - 1 - np.argmax(significant[:, ::-1], axis=1),
        -1
    )

    for degree in np.unique(degrees):
        if degree < 1:
            continue

        selected = np.flatnonzero(degrees == degree)
        block = coeffs[selected, :degree + 1]
        monic = block[:, :degree] / block[:, degree:degree + 1]

        if degree == 1:
            found = -monic
        else:
            companion = np.zeros((selected.size, degree, degree), dtype=complex)
            companion[:, 1:, :-1] = np.eye(degree - 1)
            companion[:, :, -1] = -monic
            found = np.linalg.eigvals(companion)

        out[selected, :degree] = _polish(block, found, polish_steps)

    return out


def _horner(coeffs: np.ndarray, z: np.ndarray):
    """Value and derivative of row-wise polynomials at row-wise points"""
    value = np.zeros_like(z)
    slope = np.zeros_like(z)

    for j in range(coeffs.shape[1] - 1, -1, -1):
        slope = slope * z + value
        value = value * z + coeffs[:, j, None]

    return value, slope


def _polish(coeffs: np.ndarray, roots: np.ndarray, steps: int) -> np.ndarray:
    roots = roots.copy()

    with np.errstate(divide="ignore", invalid="ignore"):
        for _ in range(steps):
            value, slope = _horner(coeffs, roots)
            candidate = roots - value / slope
            better, _ = _horner(coeffs, candidate)

            keep = np.isfinite(candidate) & (np.abs(better) < np.abs(value))
            roots = np.where(keep, candidate, roots)

    return roots


def zeros_in_disk(
        f: Callable,
        center: complex,
        radius: float,
        df: Optional[Callable] = None,
        tol: float = 1e-10,
        initial_nodes: int = 64,
        max_nodes: int = 2 ** 18,
        change_tol: float = 1e-3) -> int:
    """Counts the zeros of f in |z - center| < radius by the argument principle.

    The contour integral (1/2 pi i) of f'/f is evaluated with the trapezoid
    rule on the circle, doubling the node count until the value moves by
    less than `change_tol`. `f` may be a Polynomial, in which case `df`
    defaults to its derivative.
    """
    if df is None:
        df = f.derivative()

    nodes, previous = initial_nodes, None

    while True:
        angles = 2 * np.pi * np.arange(nodes) / nodes
        offsets = radius * np.exp(1j * angles)
        values = np.asarray(f(center + offsets), dtype=complex)

        smallest = float(np.min(np.abs(values)))

        if smallest < tol:
            raise ZeroNearContour(f"|f| drops to {smallest:.3e} on the contour")

        winding = complex(np.mean(np.asarray(df(center + offsets)) / values * offsets))

        if previous is not None and abs(winding - previous) < change_tol:
            break

        if nodes >= max_nodes:
            break

        logger.debug("winding %.6f%+.6fj with %d nodes, refining", winding.real, winding.imag, nodes)
        previous, nodes = winding, nodes * 2

    nearest = round(winding.real)

    if abs(winding - nearest) > 0.1:
        raise NonIntegerWinding(
            f"winding value {winding.real:.4f}{winding.imag:+.4f}j is not close to an integer "
            f"after {nodes} nodes"
        )

    return int(nearest)
