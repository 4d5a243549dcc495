# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from nevlab.helpers.errors import BadRadius, DomainError


class Verdict(Enum):
    COMPACT = "Compact"
    NON_COMPACT = "NonCompact"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CriterionProfile:
    """Sup of the compactness integrand over circles |w| = r.

    - radii:          strictly increasing radii in (0, 1)
    - sup_values:     one sup per radius
    - angular_count:  equispaced samples per circle before refinement
    - refined:        per radius, whether the 3x angular pass was needed
    - quadrature:     descriptor of the sphere rule (d >= 2) or {"d": 1}
    - phi, theta:     descriptors of the pair
    """
    radii: Tuple[float, ...]
    sup_values: Tuple[float, ...]
    angular_count: int
    refined: Tuple[bool, ...] = ()
    quadrature: dict = field(default_factory=dict)
    phi: dict = field(default_factory=dict)
    theta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for idx, r in enumerate(self.radii):
            if not 0 < r < 1 or (idx and r <= self.radii[idx - 1]):
                raise BadRadius(f"radii must increase strictly inside (0, 1), got {r}", field=f"radii[{idx}]")

        if len(self.sup_values) != len(self.radii):
            raise DomainError("one sup value per radius is required", field="sup_values")

        for idx, value in enumerate(self.sup_values):
            if not value >= 0:
                raise DomainError(f"sup values are nonnegative, got {value}", field=f"sup_values[{idx}]")

        if self.refined and len(self.refined) != len(self.radii):
            raise DomainError("one refinement flag per radius is required", field="refined")

    def to_dict(self) -> dict:
        return {
            "radii": list(self.radii),
            "sup_values": list(self.sup_values),
            "angular_count": self.angular_count,
            "refined": list(self.refined),
            "quadrature": self.quadrature,
            "phi": self.phi,
            "theta": self.theta
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CriterionProfile":
        return cls(
            radii=tuple(float(r) for r in data["radii"]),
            sup_values=tuple(float(s) for s in data["sup_values"]),
            angular_count=int(data["angular_count"]),
            refined=tuple(bool(f) for f in data.get("refined", ())),
            quadrature=data.get("quadrature", {}),
            phi=data.get("phi", {}),
            theta=data.get("theta", {})
        )


@dataclass(frozen=True)
class VerdictReport:
    """Numerical indicator of the vanishing of the integrand as |w| -> 1.

    `slope` is the least squares slope of log(sup) against log(1 - r) over
    the positive values, None when fewer than two are positive.
    """
    verdict: Verdict
    tol: float
    tail: Tuple[float, ...]
    slope: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "tol": self.tol,
            "tail": list(self.tail),
            "slope": self.slope
        }


@dataclass(frozen=True)
class ComponentProbe:
    connected: bool
    component_count: int
    grid_n: int
    r: float
    caveat: str
