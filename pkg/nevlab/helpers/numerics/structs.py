# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

import numpy as np
import numpy.polynomial.polynomial as npoly

from nevlab.helpers.errors import DomainError, NotUnitVector


UNIT_TOLERANCE = 1e-10


@dataclass(frozen=True)
class Polynomial:
    """Univariate complex polynomial, coefficients in ascending degree.

    Trailing zero coefficients are trimmed on construction, so the zero
    polynomial has an empty coefficient tuple and degree -1.
    """
    coeffs: Tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [complex(c) for c in np.ravel(np.asarray(self.coeffs, dtype=complex))]

        while coeffs and coeffs[-1] == 0:
            coeffs.pop()

        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_roots(cls, roots, leading: complex = 1.0) -> "Polynomial":
        return cls(npoly.polyfromroots(np.asarray(roots, dtype=complex)) * leading)

    @classmethod
    def monomial(cls, k: int, coeff: complex = 1.0) -> "Polynomial":
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)

    def max_abs_coeff(self) -> float:
        return float(np.max(np.abs(self.array))) if self.coeffs else 0.0

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)

        if not self.coeffs:
            return np.zeros_like(z)

        return npoly.polyval(z, self.array)

    def derivative(self) -> "Polynomial":
        if self.degree < 1:
            return Polynomial()

        return Polynomial(npoly.polyder(self.array))

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Coefficient-exact composition self(inner(z)) by Horner's rule"""
        result = Polynomial()

        for c in reversed(self.coeffs):
            result = result * inner + Polynomial([c])

        return result

    def __add__(self, other):
        other = _as_polynomial(other)
        return Polynomial(npoly.polyadd(_padded(self), _padded(other)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-self.array)

    def __sub__(self, other):
        return self + (-_as_polynomial(other))

    def __rsub__(self, other):
        return _as_polynomial(other) - self

    def __mul__(self, other):
        other = _as_polynomial(other)

        if not self.coeffs or not other.coeffs:
            return Polynomial()

        return Polynomial(npoly.polymul(self.array, other.array))

    __rmul__ = __mul__


def _as_polynomial(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value

    return Polynomial([value])


def _padded(p: Polynomial) -> np.ndarray:
    return p.array if p.coeffs else np.zeros(1, dtype=complex)


@dataclass(frozen=True, eq=False)
class MultiPolynomial:
    """Polynomial in d complex variables, stored as multi-index -> coefficient"""
    d: int
    terms: Dict[Tuple[int, ...], complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if int(self.d) < 1:
            raise DomainError(f"dimension must be >= 1, got {self.d}")

        cleaned = {}

        for alpha, coeff in dict(self.terms).items():
            alpha = tuple(int(a) for a in np.atleast_1d(alpha))

            if len(alpha) != self.d or any(a < 0 for a in alpha):
                raise DomainError(f"multi-index {alpha} is not a valid index in dimension {self.d}")

            coeff = complex(coeff) + cleaned.get(alpha, 0)

            if coeff != 0:
                cleaned[alpha] = coeff
            else:
                cleaned.pop(alpha, None)

        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "terms", dict(sorted(cleaned.items())))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "MultiPolynomial":
        return cls(1, {(k,): c for k, c in enumerate(p.coeffs)})

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPolynomial) and self.d == other.d and self.terms == other.terms

    @property
    def degree(self) -> int:
        return max((sum(alpha) for alpha in self.terms), default=-1)

    def value_at_origin(self) -> complex:
        return self.terms.get((0,) * self.d, 0j)

    def __call__(self, z):
        """Evaluates at points of shape (..., d)"""
        z = np.asarray(z, dtype=complex)

        if z.shape[-1] != self.d:
            raise DomainError(f"expected points with {self.d} coordinates, got shape {z.shape}")

        result = np.zeros(z.shape[:-1], dtype=complex)

        for alpha, coeff in self.terms.items():
            term = np.full(z.shape[:-1], coeff, dtype=complex)

            for idx, power in enumerate(alpha):
                if power:
                    term = term * z[..., idx] ** power

            result = result + term

        return result

    def slice_matrix(self, zetas) -> np.ndarray:
        """Slice coefficients for many unit vectors at once.

        Row j holds the ascending coefficients of lambda -> f(lambda * zeta_j).
        """
        zetas = np.atleast_2d(np.asarray(zetas, dtype=complex))
        out = np.zeros((zetas.shape[0], max(self.degree, 0) + 1), dtype=complex)

        for alpha, coeff in self.terms.items():
            monomial = np.full(zetas.shape[0], coeff, dtype=complex)

            for idx, power in enumerate(alpha):
                if power:
                    monomial = monomial * zetas[:, idx] ** power

            out[:, sum(alpha)] += monomial

        return out

    def slice(self, zeta) -> Polynomial:
        zeta = check_unit_vector(zeta, self.d)
        return Polynomial(self.slice_matrix(zeta[None, :])[0])


def check_unit_vector(zeta, d: int) -> np.ndarray:
    zeta = np.atleast_1d(np.asarray(zeta, dtype=complex))

    if zeta.shape != (d,):
        raise NotUnitVector(f"expected a vector in C^{d}, got shape {zeta.shape}")

    if abs(np.linalg.norm(zeta) - 1.0) > UNIT_TOLERANCE:
        raise NotUnitVector(f"|zeta| = {np.linalg.norm(zeta):.15g} is not 1")

    return zeta


@dataclass(frozen=True, eq=False)
class DiskQuadrature:
    """Product rule for the normalized area measure on the unit disk.

    `radii` and `radial_weights` integrate in the radial direction with the
    area weight already folded in (the weights sum to 1), the angular
    direction is the trapezoid rule with `angular_count` equispaced nodes.
    """
    radii: np.ndarray
    radial_weights: np.ndarray
    angular_count: int
    grading: int = 1

    def __post_init__(self) -> None:
        if np.any(self.radial_weights <= 0):
            raise DomainError("radial weights must be positive")

        if self.angular_count < 1:
            raise DomainError("angular_count must be >= 1")

    def nodes(self) -> Tuple[np.ndarray, np.ndarray]:
        angles = 2 * np.pi * np.arange(self.angular_count) / self.angular_count
        points = np.outer(self.radii, np.exp(1j * angles)).ravel()
        weights = np.repeat(self.radial_weights / self.angular_count, self.angular_count)

        return points, weights

    def integrate(self, func: Callable, center: complex = 0j) -> float:
        """Integral of func over the disk against the normalized area.

        A nonzero `center` moves the node cluster of the rule to that point
        through the disk automorphism u -> (center + u)/(1 + conj(center) u),
        the Jacobian is folded into the weights.
        """
        u, weights = self.nodes()
        w, jacobian = mobius_pullback(u, center)

        return float(np.real(np.sum(weights * jacobian * func(w))))

    def average(self, func: Callable, center: complex, radius: float) -> float:
        """Mean of func over the disk of given center and radius"""
        u, weights = self.nodes()
        return float(np.real(np.sum(weights * func(center + radius * u))))


def mobius_pullback(u, center: complex):
    """Returns tau(u) and |tau'(u)|^2 for tau(u) = (c + u)/(1 + conj(c) u)"""
    u = np.asarray(u, dtype=complex)

    if center == 0:
        return u, np.ones(u.shape)

    denominator = 1 + np.conj(center) * u
    points = (center + u) / denominator
    jacobian = ((1 - abs(center) ** 2) / np.abs(denominator) ** 2) ** 2

    return points, jacobian


@dataclass(frozen=True, eq=False)
class SphereQuadrature:
    """Weighted point set on the unit sphere of C^d"""
    d: int
    points: np.ndarray
    weights: np.ndarray
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        points = np.atleast_2d(np.asarray(self.points, dtype=complex))
        weights = np.asarray(self.weights, dtype=float)

        if points.shape[1] != self.d:
            raise DomainError(f"sphere points must have {self.d} coordinates")

        if points.shape[0] != weights.shape[0]:
            raise DomainError("one weight per sphere point is required")

        if np.any(np.abs(np.linalg.norm(points, axis=1) - 1.0) > 1e-12):
            raise NotUnitVector("sphere quadrature points must have norm 1")

        if np.any(weights <= 0) or abs(weights.sum() - 1.0) > 1e-12:
            raise DomainError("sphere quadrature weights must be positive and sum to 1")

        points.setflags(write=False)
        weights.setflags(write=False)

        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)

    @property
    def size(self) -> int:
        return self.points.shape[0]

    def describe(self) -> dict:
        return {
            "d": self.d,
            "n": self.size,
            "seed": self.seed
        }


@dataclass(frozen=True)
class GradedIntegral:
    """Result of a graded disk integration.

    - value:        the integral, including the base-point disk and the
                    extrapolated tail towards the unit circle
    - converged:    whether the panel sequence stabilized to the requested
                    relative tolerance
    - panels:       number of geometric panels used towards |u| = 1
    - inner_share:  contribution of the small disk excluded around the
                    center of the rule
    - tail:         extrapolated contribution beyond the last panel
    - last_change:  relative size of the last panel plus tail
    """
    value: float
    converged: bool
    panels: int
    inner_share: float
    tail: float
    last_change: float
