# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from nevlab.helpers.numerics.structs import (
    DiskQuadrature,
    GradedIntegral,
    MultiPolynomial,
    Polynomial,
    SphereQuadrature,
    check_unit_vector,
    mobius_pullback
)
from nevlab.helpers.numerics.roots import (
    batch_roots,
    poly_roots,
    zeros_in_disk
)
from nevlab.helpers.numerics.quadrature import (
    circle_quadrature,
    disk_quadrature,
    gauss_legendre,
    graded_disk_integral,
    graded_radial_rule,
    inner_disk_integral,
    sphere_uniform
)
from nevlab.helpers.numerics.norms import (
    hardy2_norm,
    hardy_norm_ball,
    slice_function
)
