# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Finite-dimensional model spaces K_B for finite Blaschke products B"""
import logging

import numpy as np
import scipy.linalg
import scipy.signal

from nevlab.helpers.errors import DomainError, NoConvergence
from nevlab.helpers.inner import BlaschkeProduct
from nevlab.helpers.model_space.structs import (
    ModelSpaceBasis,
    RationalFunction,
    ReproduceCheck
)
from nevlab.helpers.numerics import Polynomial


logger = logging.getLogger(__name__)

INITIAL_DEGREE = 200
MAX_DEGREE = 2 ** 16
TAIL_TOLERANCE = 1e-12


def taylor_coefficients(numerator: Polynomial, denominator: Polynomial, n: int) -> np.ndarray:
    """First n Taylor coefficients at 0 of numerator / denominator.

    The quotient is the impulse response of the recursive filter with
    feedforward taps `numerator` and feedback taps `denominator`.
    """
    if not denominator.coeffs or denominator.coeffs[0] == 0:
        raise DomainError("denominator must not vanish at the origin")

    impulse = np.zeros(n, dtype=complex)
    impulse[0] = 1.0

    b = numerator.array if numerator.coeffs else np.zeros(1, dtype=complex)

    return scipy.signal.lfilter(b, denominator.array, impulse)


def _tail_bound(taylor: np.ndarray, ratio: float) -> float:
    """Estimate of the l2 tail of every row beyond the expansion degree"""
    if ratio == 0:
        return 0.0

    last = float(np.max(np.abs(taylor[:, -8:])))
    return last * ratio / np.sqrt(1 - ratio ** 2)


def _expansion(functions, ratio: float, degree: int = INITIAL_DEGREE) -> np.ndarray:
    while True:
        taylor = np.stack([taylor_coefficients(e.numerator, e.denominator, degree) for e in functions])
        tail = _tail_bound(taylor, ratio)

        if tail < TAIL_TOLERANCE:
            return taylor

        if degree >= MAX_DEGREE:
            raise NoConvergence(
                f"Taylor tail {tail:.3e} still above {TAIL_TOLERANCE:.0e} at degree {degree}",
                residuals=np.array([tail])
            )

        logger.debug("Taylor tail %.3e at degree %d, doubling", tail, degree)
        degree *= 2


def tm_basis(B: BlaschkeProduct) -> ModelSpaceBasis:
    """Takenaka-Malmquist basis of K_B.

    With the zeros a_1, ..., a_m of B (repeated by multiplicity),
        e_k(z) = sqrt(1 - |a_k|^2) / (1 - conj(a_k) z) * prod_{j<k} (z - a_j) / (1 - conj(a_j) z)
    is an orthonormal basis of K_B. The Gram matrix is recomputed from the
    Taylor expansions of the e_k.
    """
    zeros = B.expanded_zeros()
    functions = []
    top, bottom = Polynomial([1.0]), Polynomial([1.0])

    for a in zeros:
        pole = Polynomial([1.0, -np.conj(a)])
        functions.append(RationalFunction(top * np.sqrt(1 - abs(a) ** 2), bottom * pole))
        top, bottom = top * Polynomial([-a, 1.0]), bottom * pole

    ratio = max(abs(a) for a in zeros)
    taylor = _expansion(functions, ratio)
    taylor.setflags(write=False)

    gram = taylor @ taylor.conj().T
    gram.setflags(write=False)

    return ModelSpaceBasis(blaschke=B, basis=tuple(functions), taylor=taylor, gram=gram)


def _ratio(basis: ModelSpaceBasis) -> float:
    return max(abs(a) for a in basis.blaschke.expanded_zeros())


def membership_residual(basis: ModelSpaceBasis) -> float:
    """max |<e_i, B z^k>| over the basis and k = 0..2m.

    Vanishes exactly when every basis function is orthogonal to B H^2.
    """
    P, Q = basis.blaschke.as_rational()
    n = basis.expansion_degree
    b = taylor_coefficients(P, Q, n)
    worst = 0.0

    for k in range(2 * basis.dimension + 1):
        shifted = np.concatenate([np.zeros(k, dtype=complex), b[:n - k]])
        worst = max(worst, float(np.max(np.abs(basis.taylor @ np.conj(shifted)))))

    return worst


def kernel_taylor(basis: ModelSpaceBasis, w: complex) -> np.ndarray:
    """Taylor coefficients of the kernel k_w of K_B.

    k_w = (Q - conj(B(w)) P) / (Q (1 - conj(w) z)) with B = P / Q.
    """
    w = complex(w)

    if abs(w) >= 1:
        raise DomainError(f"kernel point {w} is not in the unit disk")

    P, Q = basis.blaschke.as_rational()
    B_w = complex(basis.blaschke(w))

    return taylor_coefficients(
        Q - P * np.conj(B_w),
        Q * Polynomial([1.0, -np.conj(w)]),
        basis.expansion_degree
    )


def kernel_coordinates(basis: ModelSpaceBasis, w: complex) -> np.ndarray:
    """Coordinates of k_w in the basis: <k_w, e_j> = conj(e_j(w))"""
    return np.linalg.solve(basis.gram.T, np.conj(basis.evaluate(complex(w))))


def reproduce_check(basis: ModelSpaceBasis, f, w: complex) -> ReproduceCheck:
    """Compares <f, k_w>, taken on Taylor coefficients, with f(w)"""
    f = np.asarray(f, dtype=complex)

    if f.shape != (basis.dimension,):
        raise DomainError(f"expected {basis.dimension} coordinates, got shape {f.shape}")

    pairing = complex(np.sum((f @ basis.taylor) * np.conj(kernel_taylor(basis, w))))
    value = complex(f @ basis.evaluate(complex(w)))

    return ReproduceCheck(pairing_value=pairing, point_value=value, abs_error=abs(pairing - value))


def pn_project(basis: ModelSpaceBasis, f, n: int) -> np.ndarray:
    """Orthogonal projection onto the elements of K_B vanishing to order n at 0.

    Coordinates c span that subspace when the first n Taylor coefficients
    of sum_i c_i e_i vanish, i.e. c lies in the null space of taylor[:, :n]^T.
    """
    f = np.asarray(f, dtype=complex)

    if n < 0:
        raise DomainError(f"vanishing order must be >= 0, got {n}")

    if f.shape != (basis.dimension,):
        raise DomainError(f"expected {basis.dimension} coordinates, got shape {f.shape}")

    if n == 0:
        return f.copy()

    N = scipy.linalg.null_space(basis.taylor[:, :n].T)

    if N.shape[1] == 0:
        return np.zeros_like(f)

    # <x, y> = y^H H x
    H = basis.gram.T
    NH = N.conj().T

    return N @ np.linalg.solve(NH @ H @ N, NH @ H @ f)


def model_space_norm(basis: ModelSpaceBasis, f, p: float, nodes: int = 4096) -> float:
    """K^p_B norm of sum_i f_i e_i, the H^p norm by the trapezoid rule on the circle"""
    if not p > 0:
        raise DomainError(f"exponent must be positive, got {p}")

    boundary = np.exp(2j * np.pi * np.arange(nodes) / nodes)
    values = np.abs(np.asarray(f, dtype=complex) @ basis.evaluate(boundary))

    if np.isinf(p):
        return float(np.max(values))

    return float(np.mean(values ** p) ** (1 / p))
