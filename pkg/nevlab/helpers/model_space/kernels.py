# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Reproducing kernels k_w(z) = (1 - Theta(z) conj(Theta(w))) / (1 - z conj(w)) of K_Theta"""
from typing import Iterable

import numpy as np

from nevlab.helpers.errors import DomainError
from nevlab.helpers.inner import InnerFunction
from nevlab.helpers.model_space.structs import KernelPoint


def _check_disk(*points) -> None:
    for point in points:
        if np.any(np.abs(np.asarray(point)) >= 1):
            raise DomainError("kernel points must lie in the open unit disk")


def kernel_eval(theta: InnerFunction, w: complex, z):
    w = complex(w)
    z = np.asarray(z, dtype=complex)
    _check_disk(w, z)

    return (1 - theta(z) * np.conj(theta(w))) / (1 - z * np.conj(w))


def kernel_derivative(theta: InnerFunction, w: complex, z):
    """d/dz of k_w(z)"""
    w = complex(w)
    z = np.asarray(z, dtype=complex)
    _check_disk(w, z)

    theta_w = np.conj(theta(w))
    denominator = 1 - z * np.conj(w)

    return (
        -theta.derivative(z) * theta_w * denominator
        + np.conj(w) * (1 - theta(z) * theta_w)
    ) / denominator ** 2


def kernel_norm(theta: InnerFunction, w: complex) -> float:
    w = complex(w)
    _check_disk(w)

    return float(np.sqrt((1 - abs(complex(theta(w))) ** 2) / (1 - abs(w) ** 2)))


def kernel_point(theta: InnerFunction, w: complex) -> KernelPoint:
    return KernelPoint(w=complex(w), theta=theta, norm=kernel_norm(theta, w))


def weak_star_surrogate(
        theta: InnerFunction,
        w_seq: Iterable[complex],
        test_points: Iterable[complex] = (0j, 0.5, -0.5j)) -> list:
    """Pairings of normalized kernels against fixed test kernels.

    For each w returns max_v |<k_v, k_w>| / ||k_w|| = max_v |k_v(w)| / ||k_w||,
    a finite stand-in for weak-star convergence of k_w / ||k_w|| to 0.
    """
    test_points = [complex(v) for v in test_points]
    out = []

    for w in w_seq:
        norm = kernel_norm(theta, w)
        pairing = max(abs(complex(kernel_eval(theta, v, complex(w)))) for v in test_points)
        out.append(pairing / norm if norm > 0 else float("inf"))

    return out
