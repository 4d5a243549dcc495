# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

import logging

from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from nevlab.helpers.errors import (
    ConstantMap,
    DimensionMismatch,
    DomainError,
    NotASelfMap
)
from nevlab.helpers.inner import BlaschkeProduct
from nevlab.helpers.numerics import (
    MultiPolynomial,
    Polynomial,
    check_unit_vector,
    sphere_uniform
)


logger = logging.getLogger(__name__)

CERTIFICATION_RADII = (0.9, 0.99, 0.999)
CERTIFICATION_POINTS = 10_000
BOUNDARY_MARGIN = 1e-6


@dataclass(frozen=True, eq=False)
class SelfMap:
    """Holomorphic map of the unit ball of C^d into the unit disk.

    `body` is a MultiPolynomial (any d) or a BlaschkeProduct (d = 1). Use
    `SelfMap.certify` to build one from a body: it samples |phi| on spheres
    and records either a bound strictly below 1 or the boundary-touching
    flag.
    """
    body: Union[MultiPolynomial, BlaschkeProduct]
    certified_bound: Optional[float] = None
    boundary_touching: bool = False

    @classmethod
    def certify(cls, body, points: int = CERTIFICATION_POINTS, seed: int = 0) -> "SelfMap":
        if isinstance(body, Polynomial):
            body = MultiPolynomial.from_polynomial(body)

        if isinstance(body, BlaschkeProduct):
            return cls(body=body, certified_bound=None, boundary_touching=True)

        if body.degree < 1:
            raise ConstantMap("constant maps are not admissible self-maps")

        radii = CERTIFICATION_RADII + (1.0,)
        per_sphere = max(points // len(radii), 1)

        if body.d == 1:
            net = np.exp(2j * np.pi * (np.arange(per_sphere) + 0.5) / per_sphere)[:, None]
        else:
            net = sphere_uniform(body.d, per_sphere, seed).points

        maxima = [float(np.max(np.abs(body(r * net)))) for r in radii]
        inside, boundary = max(maxima[:-1]), maxima[-1]

        if inside >= 1 or boundary > 1 + 1e-9:
            raise NotASelfMap(f"|phi| reaches {max(inside, boundary):.6f} on the sample net")

        if boundary < 1 - BOUNDARY_MARGIN:
            return cls(body=body, certified_bound=boundary, boundary_touching=False)

        return cls(body=body, certified_bound=None, boundary_touching=True)

    @property
    def d(self) -> int:
        return 1 if isinstance(self.body, BlaschkeProduct) else self.body.d

    @property
    def is_polynomial(self) -> bool:
        return isinstance(self.body, MultiPolynomial)

    def value_at_origin(self) -> complex:
        if self.is_polynomial:
            return complex(self.body.value_at_origin())

        return complex(self.body(0j))

    def __call__(self, z):
        """Evaluates phi; for d = 1 points are plain complex numbers"""
        z = np.asarray(z, dtype=complex)

        if self.is_polynomial:
            return self.body(z[..., None] if self.d == 1 else z)

        return self.body(z)

    def rational(self) -> Tuple[Polynomial, Polynomial]:
        """phi = P / Q for d = 1"""
        if self.d != 1:
            raise DimensionMismatch("only maps of the disk have a rational form")

        if self.is_polynomial:
            return self.univariate(), Polynomial([1.0])

        return self.body.as_rational()

    def univariate(self) -> Polynomial:
        if not (self.is_polynomial and self.d == 1):
            raise DimensionMismatch("not a polynomial map of the disk")

        terms = self.body.terms
        return Polynomial([terms.get((k,), 0) for k in range(self.body.degree + 1)])

    def slice(self, zeta) -> "SelfMap":
        """phi_zeta(lambda) = phi(lambda zeta), a map of the disk"""
        zeta = check_unit_vector(zeta, self.d)

        if isinstance(self.body, BlaschkeProduct):
            body = self.body.rotated(zeta[0])
        else:
            body = MultiPolynomial.from_polynomial(self.body.slice(zeta))

        return SelfMap(body=body, certified_bound=self.certified_bound, boundary_touching=self.boundary_touching)

    def scaled(self, s: float) -> "SelfMap":
        """phi_s(z) = phi(s z) for 0 < s <= 1"""
        if not self.is_polynomial:
            raise DimensionMismatch("scaling is available for polynomial maps only")

        body = MultiPolynomial(self.d, {
            alpha: c * s ** sum(alpha) for alpha, c in self.body.terms.items()
        })

        return SelfMap.certify(body)

    def describe(self) -> dict:
        if isinstance(self.body, BlaschkeProduct):
            return {"kind": "blaschke", "d": 1, **self.body.describe()}

        return {
            "kind": "polynomial",
            "d": self.d,
            "terms": [[list(alpha), c.real, c.imag] for alpha, c in self.body.terms.items()]
        }


@dataclass(frozen=True)
class CountingSample:
    w: complex
    preimages: Tuple[Tuple[complex, int], ...]
    value: float

    def __post_init__(self) -> None:
        if not abs(self.w) < 1:
            raise DomainError(f"w = {self.w} is not in the unit disk", field="w")

        for idx, (z, multiplicity) in enumerate(self.preimages):
            if not abs(z) < 1 or multiplicity < 1:
                raise DomainError(f"preimage {z} with multiplicity {multiplicity} is not admissible",
                                  field=f"preimages[{idx}]")

        if not self.value >= 0:
            raise DomainError(f"counting values are nonnegative, got {self.value}", field="value")


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of an identity and their relative discrepancy.

    `base_point_share` is the part of the area integral coming from the
    small disk around phi(0), `converged` the state of the graded rule.
    """
    lhs: float
    rhs: float
    rel_error: float
    base_point_share: Optional[float] = None
    converged: bool = True

    def passed(self, tol: float) -> bool:
        return self.rel_error <= tol


@dataclass(frozen=True)
class LittlewoodCheck:
    bound: float
    value: float
    satisfied: bool
    margin: float


@dataclass(frozen=True)
class SubmeanCheck:
    center_value: float
    mean_value: float
    satisfied: bool
