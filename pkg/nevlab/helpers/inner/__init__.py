# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from nevlab.helpers.inner.structs import (
    BlaschkeProduct,
    BoundaryDiagnostic,
    InnerFunction,
    SingularInner
)
from nevlab.helpers.inner.evaluation import (
    atom,
    blaschke,
    boundary_diagnostic,
    inner_derivative,
    inner_eval,
    inner_modulus,
    monomial_inner
)
