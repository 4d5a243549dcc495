# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from nevlab.helpers.errors import (
    AtomSingularity,
    DomainError,
    NotInner
)
from nevlab.helpers.numerics import Polynomial


ATOM_TOLERANCE = 1e-12


def blaschke_factor(a: complex, z):
    """(|a|/a)(a - z)/(1 - conj(a) z), or z itself when a = 0"""
    if a == 0:
        return z

    return (abs(a) / a) * (a - z) / (1 - np.conj(a) * z)


def blaschke_factor_derivative(a: complex, z):
    if a == 0:
        return np.ones_like(z)

    return (abs(a) / a) * (abs(a) ** 2 - 1) / (1 - np.conj(a) * z) ** 2


@dataclass(frozen=True)
class BlaschkeProduct:
    """Finite Blaschke product gamma * prod b_{a_j}^{m_j}.

    `zeros` holds (a_j, m_j) pairs, equal zeros are merged on construction.
    """
    zeros: Tuple[Tuple[complex, int], ...]
    gamma: complex = 1.0

    def __post_init__(self) -> None:
        merged = {}

        for idx, (a, m) in enumerate(self.zeros):
            a, m = complex(a), int(m)

            if not abs(a) < 1:
                raise DomainError(f"zero #{idx} at {a} is not inside the unit disk", field=f"zeros[{idx}]")

            if m < 1:
                raise DomainError(f"zero #{idx} has multiplicity {m} < 1", field=f"zeros[{idx}]")

            merged[a] = merged.get(a, 0) + m

        if not merged:
            raise NotInner("a Blaschke product needs at least one zero; unimodular constants are not inner")

        if abs(abs(complex(self.gamma)) - 1) > ATOM_TOLERANCE:
            raise DomainError(f"front factor {self.gamma} is not unimodular", field="gamma")

        object.__setattr__(self, "zeros", tuple(merged.items()))
        object.__setattr__(self, "gamma", complex(self.gamma))

    @classmethod
    def from_points(cls, points, gamma: complex = 1.0) -> "BlaschkeProduct":
        return cls(tuple((a, 1) for a in points), gamma)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.zeros)

    def expanded_zeros(self) -> list:
        return [a for a, m in self.zeros for _ in range(m)]

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.gamma, dtype=complex)

        for a, m in self.zeros:
            out = out * blaschke_factor(a, z) ** m

        return out

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        factors = [blaschke_factor(a, z) for a, _ in self.zeros]
        out = np.zeros(z.shape, dtype=complex)

        for j, (a, m) in enumerate(self.zeros):
            term = m * factors[j] ** (m - 1) * blaschke_factor_derivative(a, z)

            for k, (_, mk) in enumerate(self.zeros):
                if k != j:
                    term = term * factors[k] ** mk

            out = out + term

        return self.gamma * out

    def as_rational(self) -> Tuple[Polynomial, Polynomial]:
        """Numerator and denominator polynomials, B = P / Q with Q(0) = 1"""
        numerator, denominator = Polynomial([self.gamma]), Polynomial([1.0])

        for a, m in self.zeros:
            if a == 0:
                top, bottom = Polynomial([0, 1]), Polynomial([1.0])
            else:
                top = Polynomial([abs(a), -abs(a) / a])
                bottom = Polynomial([1.0, -np.conj(a)])

            for _ in range(m):
                numerator, denominator = numerator * top, denominator * bottom

        return numerator, denominator

    def rotated(self, zeta: complex) -> "BlaschkeProduct":
        """The Blaschke product lambda -> B(lambda * zeta), |zeta| = 1.

        b_a(lambda zeta) = b_{a / zeta}(lambda) for a != 0, zeros at the
        origin move a power of zeta into the front factor.
        """
        zeta = complex(zeta)
        origin = dict(self.zeros).get(0j, 0)

        return BlaschkeProduct(
            tuple((a / zeta, m) for a, m in self.zeros),
            self.gamma * zeta ** origin
        )

    def describe(self) -> dict:
        return {
            "zeros": [[a.real, a.imag, m] for a, m in self.zeros],
            "gamma": [self.gamma.real, self.gamma.imag]
        }


@dataclass(frozen=True)
class SingularInner:
    """exp(-sum s_j (zeta_j + z)/(zeta_j - z)) for point masses s_j at zeta_j"""
    atoms: Tuple[Tuple[complex, float], ...]

    def __post_init__(self) -> None:
        atoms = []

        for idx, (zeta, mass) in enumerate(self.atoms):
            zeta, mass = complex(zeta), float(mass)

            if abs(abs(zeta) - 1) > ATOM_TOLERANCE:
                raise DomainError(f"atom #{idx} at {zeta} is not on the unit circle", field=f"atoms[{idx}]")

            if not mass > 0:
                raise DomainError(f"atom #{idx} has non-positive mass {mass}", field=f"atoms[{idx}]")

            atoms.append((zeta, mass))

        if not atoms:
            raise NotInner("a singular inner function needs at least one atom")

        object.__setattr__(self, "atoms", tuple(atoms))

    @property
    def total_mass(self) -> float:
        return sum(mass for _, mass in self.atoms)

    def check_atoms(self, z) -> None:
        z = np.asarray(z, dtype=complex)

        for zeta, _ in self.atoms:
            if np.any(np.abs(z - zeta) < ATOM_TOLERANCE):
                raise AtomSingularity(f"evaluation within {ATOM_TOLERANCE} of the atom at {zeta}")

    def exponent(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)

        for zeta, mass in self.atoms:
            out = out - mass * (zeta + z) / (zeta - z)

        return out

    def __call__(self, z):
        self.check_atoms(z)
        return np.exp(self.exponent(z))

    def derivative(self, z):
        self.check_atoms(z)
        z = np.asarray(z, dtype=complex)
        slope = np.zeros(z.shape, dtype=complex)

        for zeta, mass in self.atoms:
            slope = slope - 2 * mass * zeta / (zeta - z) ** 2

        return np.exp(self.exponent(z)) * slope

    def describe(self) -> dict:
        return {
            "atoms": [[zeta.real, zeta.imag, mass] for zeta, mass in self.atoms]
        }


@dataclass(frozen=True)
class InnerFunction:
    """Product of an optional finite Blaschke product and an optional atomic
    singular inner function; at least one part is required."""
    blaschke: Optional[BlaschkeProduct] = None
    singular: Optional[SingularInner] = None

    def __post_init__(self) -> None:
        if self.blaschke is None and self.singular is None:
            raise NotInner("unimodular constants are not inner functions")

    @property
    def is_finite_blaschke(self) -> bool:
        return self.singular is None

    @property
    def atoms(self) -> tuple:
        return self.singular.atoms if self.singular is not None else ()

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.ones(z.shape, dtype=complex)

        if self.singular is not None:
            out = out * self.singular(z)

        if self.blaschke is not None:
            out = out * self.blaschke(z)

        return out

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)

        if self.singular is None:
            return self.blaschke.derivative(z)

        if self.blaschke is None:
            return self.singular.derivative(z)

        return (
            self.blaschke.derivative(z) * self.singular(z)
            + self.blaschke(z) * self.singular.derivative(z)
        )

    def describe(self) -> dict:
        out = {}

        if self.blaschke is not None:
            out["blaschke"] = self.blaschke.describe()

        if self.singular is not None:
            out["singular"] = self.singular.describe()

        return out


@dataclass(frozen=True)
class BoundaryDiagnostic:
    """Radial boundary-modulus report for an inner function.

    For each radius r: the share of sampled directions where
    |Theta(r zeta)| >= 1 - 10 (1 - r) - 1e-6, and the worst margin.
    """
    radii: Tuple[float, ...]
    pass_fraction: Tuple[float, ...]
    worst_margin: Tuple[float, ...]
    samples: int
