# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from nevlab.helpers.nevanlinna.structs import (
    CountingSample,
    IdentityCheck,
    LittlewoodCheck,
    SelfMap,
    SubmeanCheck
)
from nevlab.helpers.nevanlinna.counting import (
    counting,
    counting_avg,
    counting_avg_values,
    counting_values,
    merge_roots,
    validate_preimages
)
from nevlab.helpers.nevanlinna.inequalities import (
    littlewood_bound,
    submean_check
)
from nevlab.helpers.nevanlinna.identities import (
    composition_norm_squared,
    littlewood_paley_verify,
    stanton_verify
)
