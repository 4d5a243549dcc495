# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from nevlab.helpers.errors import DomainError
from nevlab.helpers.inner import BlaschkeProduct, InnerFunction
from nevlab.helpers.numerics import Polynomial


@dataclass(frozen=True)
class KernelPoint:
    """Reproducing kernel k_w of K_Theta at w, with its norm"""
    w: complex
    theta: InnerFunction
    norm: float

    def __post_init__(self) -> None:
        if not abs(self.w) < 1:
            raise DomainError(f"w = {self.w} is not in the unit disk", field="w")

        squared = (1 - abs(complex(self.theta(self.w))) ** 2) / (1 - abs(self.w) ** 2)

        if not abs(self.norm ** 2 - squared) <= 1e-12 * (1 + squared):
            raise DomainError(f"norm {self.norm} does not match ||k_w||^2 = {squared}", field="norm")


@dataclass(frozen=True)
class RationalFunction:
    """numerator / denominator, both polynomials, denominator(0) != 0"""
    numerator: Polynomial
    denominator: Polynomial

    def __call__(self, z):
        return self.numerator(z) / self.denominator(z)

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        top, bottom = self.numerator(z), self.denominator(z)

        return (self.numerator.derivative()(z) * bottom - top * self.denominator.derivative()(z)) / bottom ** 2


@dataclass(frozen=True, eq=False)
class ModelSpaceBasis:
    """Orthonormal basis of K_B for a finite Blaschke product B.

    - basis:    the m basis functions as rational functions
    - taylor:   m x N matrix of their Taylor coefficients
    - gram:     gram[i, j] = <e_i, e_j> computed from `taylor`
    """
    blaschke: BlaschkeProduct
    basis: Tuple[RationalFunction, ...]
    taylor: np.ndarray
    gram: np.ndarray

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def expansion_degree(self) -> int:
        return self.taylor.shape[1]

    def evaluate(self, z) -> np.ndarray:
        """Values of every basis function, shape (m,) + shape(z)"""
        z = np.asarray(z, dtype=complex)
        return np.stack([e(z) for e in self.basis])

    def inner_product(self, f, g) -> complex:
        """<f, g> for coordinate vectors f, g"""
        f, g = np.asarray(f, dtype=complex), np.asarray(g, dtype=complex)
        return complex(f @ self.gram @ np.conj(g))

    def norm(self, f) -> float:
        return float(np.sqrt(max(self.inner_product(f, f).real, 0.0)))

    def element(self, coords) -> "BasisElement":
        return BasisElement(self, tuple(complex(c) for c in coords))


@dataclass(frozen=True, eq=False)
class BasisElement:
    """Function sum_i c_i e_i of a model space basis"""
    basis: ModelSpaceBasis
    coords: Tuple[complex, ...]

    def __call__(self, z):
        return np.tensordot(np.array(self.coords), self.basis.evaluate(z), axes=1)

    def derivative(self):
        coords, functions = np.array(self.coords), self.basis.basis

        def _derivative(z):
            return sum(c * e.derivative(z) for c, e in zip(coords, functions))

        return _derivative


@dataclass(frozen=True)
class ReproduceCheck:
    pairing_value: complex
    point_value: complex
    abs_error: float


@dataclass(frozen=True)
class CohnEstimate:
    """Value of the Cohn functional and the state of its graded quadrature"""
    value: float
    diverged: bool
    panels: int
    last_change: float


@dataclass(frozen=True)
class KernelDerivativeRow:
    """One term of a kernel derivative sweep.

    empirical_c is min |k'_w(z)| over the pseudohyperbolic disk mesh times
    (1 - |w|^2)^2.
    """
    n: int
    w: complex
    theta_modulus: float
    min_derivative: float
    empirical_c: float
    ratio_to_c: Optional[float] = None
