# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Pseudohyperbolic disks and the kernel derivative bound on them"""
import logging

from typing import Iterable, Optional

import numpy as np

from nevlab.helpers.errors import DomainError, SequenceViolation
from nevlab.helpers.inner import InnerFunction, inner_modulus
from nevlab.helpers.model_space.kernels import kernel_derivative
from nevlab.helpers.model_space.structs import KernelDerivativeRow


logger = logging.getLogger(__name__)


def pseudo_distance(z, w):
    """|z - w| / |1 - z conj(w)|"""
    z, w = np.asarray(z, dtype=complex), np.asarray(w, dtype=complex)
    return np.abs(z - w) / np.abs(1 - z * np.conj(w))


def pseudo_disk_contains(w: complex, epsilon: float, z) -> bool:
    """Strict test |z - w| < epsilon |1 - z conj(w)|"""
    w, z = complex(w), complex(z)
    return bool(abs(z - w) < epsilon * abs(1 - z * np.conj(w)))


def _check_radius(epsilon: float) -> None:
    if not 0 < epsilon < 1:
        raise DomainError(f"pseudohyperbolic radius must lie in (0, 1), got {epsilon}", field="epsilon")


def pseudo_disk_mesh(w: complex, epsilon: float, rings: int = 6, spokes: int = 16) -> np.ndarray:
    """Mesh of the pseudohyperbolic epsilon-disk around w, its center included.

    Rings of pseudohyperbolic radius epsilon * i / (rings + 1) are mapped
    from the origin by u -> (w + u) / (1 + conj(w) u).
    """
    _check_radius(epsilon)
    w = complex(w)

    radii = epsilon * np.arange(1, rings + 1) / (rings + 1)
    angles = 2 * np.pi * np.arange(spokes) / spokes
    u = np.concatenate([[0j], np.outer(radii, np.exp(1j * angles)).ravel()])

    return (w + u) / (1 + np.conj(w) * u)


def kernel_derivative_bound_check(
        theta: InnerFunction,
        w_seq: Iterable[complex],
        a: float,
        epsilon: float,
        c: Optional[float] = None,
        rings: int = 6,
        spokes: int = 16) -> list:
    """Empirical constants of the lower bound |k'_w(z)| >= C / (1 - |w|^2)^2.

    For every w_n, min |k'_{w_n}| over the mesh of the pseudohyperbolic
    epsilon-disk is reported scaled by (1 - |w_n|^2)^2. Nothing is asserted,
    the rows are observations.
    """
    if not 0 < a < 1:
        raise DomainError(f"bound a must lie in (0, 1), got {a}", field="a")

    _check_radius(epsilon)
    rows = []

    for n, w in enumerate(w_seq):
        w = complex(w)
        modulus = float(inner_modulus(theta, w))

        if modulus >= a:
            raise SequenceViolation(f"|Theta(w_{n})| = {modulus:.6g} is not below {a}", field=f"w_seq[{n}]")

        mesh = pseudo_disk_mesh(w, epsilon, rings, spokes)
        smallest = float(np.min(np.abs(kernel_derivative(theta, w, mesh))))
        empirical = smallest * (1 - abs(w) ** 2) ** 2

        rows.append(KernelDerivativeRow(
            n=n,
            w=w,
            theta_modulus=modulus,
            min_derivative=smallest,
            empirical_c=empirical,
            ratio_to_c=empirical / c if c else None
        ))

        logger.debug("w_%d = %s: min |k'| = %.6e, empirical C = %.6e", n, w, smallest, empirical)

    return rows
