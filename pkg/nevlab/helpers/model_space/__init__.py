# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from nevlab.helpers.model_space.structs import (
    BasisElement,
    CohnEstimate,
    KernelDerivativeRow,
    KernelPoint,
    ModelSpaceBasis,
    RationalFunction,
    ReproduceCheck
)
from nevlab.helpers.model_space.kernels import (
    kernel_derivative,
    kernel_eval,
    kernel_norm,
    kernel_point,
    weak_star_surrogate
)
from nevlab.helpers.model_space.basis import (
    kernel_coordinates,
    kernel_taylor,
    membership_residual,
    model_space_norm,
    pn_project,
    reproduce_check,
    taylor_coefficients,
    tm_basis
)
from nevlab.helpers.model_space.cohn import cohn_functional
from nevlab.helpers.model_space.geometry import (
    kernel_derivative_bound_check,
    pseudo_disk_contains,
    pseudo_disk_mesh,
    pseudo_distance
)
