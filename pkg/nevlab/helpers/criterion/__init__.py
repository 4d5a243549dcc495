# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from nevlab.helpers.criterion.structs import (
    ComponentProbe,
    CriterionProfile,
    Verdict,
    VerdictReport
)
from nevlab.helpers.criterion.profile import (
    circle_sup,
    criterion_heatmap,
    criterion_integrand,
    criterion_profile,
    criterion_values
)
from nevlab.helpers.criterion.verdict import compactness_verdict
from nevlab.helpers.criterion.components import one_component_probe
