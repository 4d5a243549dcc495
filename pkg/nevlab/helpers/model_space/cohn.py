# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

import logging

import numpy as np

from nevlab.helpers.errors import DomainError
from nevlab.helpers.inner import InnerFunction, inner_modulus
from nevlab.helpers.model_space.structs import CohnEstimate
from nevlab.helpers.numerics import graded_disk_integral


logger = logging.getLogger(__name__)

DIVERGENCE_CHANGE = 1e-4
MODULUS_FLOOR = 1e-16


def cohn_functional(
        f,
        theta: InnerFunction,
        p: float,
        rtol: float = 1e-6,
        order: int = 16,
        angular_count: int = 64,
        max_panels: int = 40) -> CohnEstimate:
    """|f(0)|^2 + integral of |f'|^2 / (1 - |Theta|)^p * log(1/|w|) dA.

    `f` is a Polynomial or a model space basis element. The area integral
    runs on the graded panel rule; when the panels towards the circle do not
    settle, the estimate is flagged as diverged instead of raising, since
    the functional is infinite for some f outside K_Theta.
    """
    if not 0 < p < 1:
        raise DomainError(f"exponent p must lie in (0, 1), got {p}", field="p")

    derivative = f.derivative()

    def integrand(w):
        gap = np.maximum(1 - inner_modulus(theta, w), MODULUS_FLOOR)
        return np.abs(derivative(w)) ** 2 / gap ** p * np.log(1 / np.abs(w))

    result = graded_disk_integral(
        integrand,
        order=order,
        angular_count=angular_count,
        rtol=rtol,
        max_panels=max_panels
    )

    diverged = not result.converged and result.last_change > DIVERGENCE_CHANGE

    if diverged:
        logger.warning("Cohn integral did not settle: relative change %.3e after %d panels",
                       result.last_change, result.panels)

    return CohnEstimate(
        value=abs(complex(f(0j))) ** 2 + result.value,
        diverged=diverged,
        panels=result.panels,
        last_change=result.last_change
    )
