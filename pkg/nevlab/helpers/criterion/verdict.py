# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

import logging

import numpy as np

from nevlab.helpers.criterion.structs import CriterionProfile, Verdict, VerdictReport
from nevlab.helpers.errors import DomainError, InsufficientProfile


logger = logging.getLogger(__name__)

MIN_RADII = 4
MIN_OUTER_RADIUS = 0.99
TAIL = 3
PLATEAU = 0.95


def _trend(profile: CriterionProfile):
    radii = np.array(profile.radii)
    values = np.array(profile.sup_values)
    positive = values > 0

    if np.count_nonzero(positive) < 2:
        return None

    slope, _ = np.polyfit(np.log(1 - radii[positive]), np.log(values[positive]), 1)
    return float(slope)


def compactness_verdict(profile: CriterionProfile, tol: float) -> VerdictReport:
    """Compact when the last three sups are below tol and non-increasing,
    NonCompact when they stay above 10 tol without falling more than 5%
    from one radius to the next, Inconclusive otherwise."""
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}", field="tol")

    if len(profile.radii) < MIN_RADII or max(profile.radii) < MIN_OUTER_RADIUS:
        raise InsufficientProfile(
            f"need at least {MIN_RADII} radii reaching {MIN_OUTER_RADIUS}, "
            f"got {len(profile.radii)} up to {max(profile.radii, default=0):g}"
        )

    tail = profile.sup_values[-TAIL:]
    steps = list(zip(tail, tail[1:]))

    if all(s < tol for s in tail) and all(b <= a for a, b in steps):
        verdict = Verdict.COMPACT
    elif all(s > 10 * tol for s in tail) and all(b >= PLATEAU * a for a, b in steps):
        verdict = Verdict.NON_COMPACT
    else:
        verdict = Verdict.INCONCLUSIVE

    slope = _trend(profile)
    logger.info("verdict %s at tol %g (tail %s, slope %s)", verdict.value, tol, tail, slope)

    return VerdictReport(verdict=verdict, tol=tol, tail=tuple(tail), slope=slope)
