# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

import logging

import numpy as np

from nevlab.helpers.errors import DomainError
from nevlab.helpers.inner.structs import (
    BlaschkeProduct,
    BoundaryDiagnostic,
    InnerFunction,
    SingularInner
)


logger = logging.getLogger(__name__)

DOMAIN_SLACK = 1e-12


def inner_eval(theta: InnerFunction, z):
    """Value of the inner function at points of the closed disk off its atoms"""
    z = np.asarray(z, dtype=complex)

    if np.any(np.abs(z) > 1 + DOMAIN_SLACK):
        raise DomainError("inner functions are evaluated on the closed unit disk only")

    return theta(z)


def inner_derivative(theta: InnerFunction, z):
    """Analytic derivative by the product rule over the factors"""
    z = np.asarray(z, dtype=complex)

    if np.any(np.abs(z) >= 1):
        raise DomainError("the derivative is evaluated in the open unit disk only")

    return theta.derivative(z)


def inner_modulus(theta: InnerFunction, z, clearance: float = 1e-12):
    """|Theta(z)| for z in the open disk, 0 within `clearance` of an atom"""
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    near = np.zeros(flat.shape, dtype=bool)

    for zeta, _ in theta.atoms:
        near |= np.abs(flat - zeta) <= clearance

    out = np.zeros(flat.shape)

    with np.errstate(over="ignore", invalid="ignore"):
        out[~near] = np.abs(theta(flat[~near]))

    return np.nan_to_num(out, nan=0.0).reshape(z.shape)


def boundary_diagnostic(
        theta: InnerFunction,
        samples: int = 100,
        radii: tuple = (0.9, 0.99, 0.999),
        atom_clearance: float = 1e-3) -> BoundaryDiagnostic:
    """Checks the radial boundary modulus along sampled directions.

    Directions closer than `atom_clearance` to an atom are skipped. The
    result is a report, not an assertion: a finite sample cannot certify an
    almost-everywhere statement.
    """
    angles = 2 * np.pi * (np.arange(samples) + 0.5) / samples
    zetas = np.exp(1j * angles)

    for atom, _ in theta.atoms:
        zetas = zetas[np.abs(zetas - atom) >= atom_clearance]

    fractions, margins = [], []

    for r in radii:
        modulus = np.abs(theta(r * zetas))
        margin = modulus - (1 - 10 * (1 - r) - 1e-6)

        fractions.append(float(np.mean(margin >= 0)))
        margins.append(float(np.min(margin)))

    report = BoundaryDiagnostic(
        radii=tuple(radii),
        pass_fraction=tuple(fractions),
        worst_margin=tuple(margins),
        samples=int(zetas.size)
    )

    if fractions[-1] < 1:
        logger.info("boundary modulus below the radial bound on %.1f%% of directions at r=%g",
                    100 * (1 - fractions[-1]), radii[-1])

    return report


def blaschke(*zeros, gamma: complex = 1.0) -> InnerFunction:
    """Inner function of a finite Blaschke product with simple zeros"""
    return InnerFunction(blaschke=BlaschkeProduct.from_points(zeros, gamma))


def monomial_inner(n: int) -> InnerFunction:
    """Theta(z) = z^n"""
    return InnerFunction(blaschke=BlaschkeProduct(((0j, n),)))


def atom(zeta: complex = 1.0, mass: float = 1.0) -> InnerFunction:
    """Singular inner function with one point mass"""
    return InnerFunction(singular=SingularInner(((zeta, mass),)))
