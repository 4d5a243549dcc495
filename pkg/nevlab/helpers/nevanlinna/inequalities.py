# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from typing import Optional

import numpy as np

from nevlab.helpers.errors import BasePointInDisk, DiskNotInDomain
from nevlab.helpers.nevanlinna.counting import (
    _check_point,
    counting,
    counting_avg,
    counting_avg_values
)
from nevlab.helpers.nevanlinna.structs import (
    LittlewoodCheck,
    SelfMap,
    SubmeanCheck
)
from nevlab.helpers.numerics import (
    DiskQuadrature,
    SphereQuadrature,
    disk_quadrature
)


LITTLEWOOD_SLACK = 1e-9


def littlewood_bound(phi: SelfMap, w: complex) -> LittlewoodCheck:
    """Compares N_phi(w) with log |(1 - conj(w) phi(0)) / (phi(0) - w)|"""
    w = complex(w)
    _check_point(phi, w)

    base = phi.value_at_origin()
    bound = float(np.log(abs((1 - np.conj(w) * base) / (base - w))))
    value = counting(phi, w).value

    return LittlewoodCheck(
        bound=bound,
        value=value,
        satisfied=value <= bound + LITTLEWOOD_SLACK,
        margin=bound - value
    )


def submean_check(
        phi: SelfMap,
        w: complex,
        rho: float,
        sq: Optional[SphereQuadrature] = None,
        dq: Optional[DiskQuadrature] = None) -> SubmeanCheck:
    """Sub-mean-value inequality of the (sphere-averaged) counting function
    on the disk of radius rho centred at w."""
    w = complex(w)

    if rho <= 0 or abs(w) + rho >= 1:
        raise DiskNotInDomain(f"the disk |z - {w}| < {rho} is not inside the unit disk")

    if abs(phi.value_at_origin() - w) < rho:
        raise BasePointInDisk(f"phi(0) = {phi.value_at_origin()} lies in the disk |z - {w}| < {rho}")

    if dq is None:
        dq = disk_quadrature(radial_order=16, angular_count=32, grading=1)

    center_value = counting_avg(phi, w, sq)
    mean_value = dq.average(lambda z: counting_avg_values(phi, z, sq), w, rho)

    tolerance = 1e-6 + 1e-3 * mean_value

    return SubmeanCheck(
        center_value=center_value,
        mean_value=mean_value,
        satisfied=center_value <= mean_value + tolerance
    )
