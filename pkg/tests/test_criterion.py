# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

import json

import numpy as np
import pytest

from nevlab.helpers.catalog import INNER_FUNCTIONS, PAIRS, SELF_MAPS, catalog, catalog_inner, catalog_self_map
from nevlab.helpers.criterion import (
    CriterionProfile,
    Verdict,
    compactness_verdict,
    criterion_heatmap,
    criterion_integrand,
    criterion_profile,
    criterion_values,
    one_component_probe
)
from nevlab.helpers.errors import AtBasePoint, BadRadius, DomainError, InsufficientProfile
from nevlab.helpers.inner import monomial_inner
from nevlab.helpers.nevanlinna import SelfMap
from nevlab.helpers.numerics import Polynomial, sphere_uniform


RADII = (0.9, 0.99, 0.995, 0.999)


def closed_form(r: float, n: int) -> float:
    return (1 - r ** n) * np.log(1 / r) / (1 - r)


def test_integrand_with_an_atom(identity_map, unit_atom):
    expected = np.log(1 / 0.99) / 0.01 * (1 - np.exp(-199))

    assert criterion_integrand(identity_map, unit_atom, 0.99) == pytest.approx(expected, rel=1e-10)


def test_integrand_with_z_to_the_fourth(identity_map, z4):
    assert criterion_integrand(identity_map, z4, 0.99) == pytest.approx(closed_form(0.99, 4), rel=1e-10)
    assert criterion_integrand(identity_map, z4, 0.99) == pytest.approx(0.0396, abs=1e-4)


def test_integrand_vanishes_off_the_image(half_map, unit_atom):
    assert criterion_integrand(half_map, unit_atom, 0.6) == 0.0
    assert criterion_integrand(half_map, unit_atom, -0.55j) == 0.0


def test_integrand_at_the_base_point(identity_map, unit_atom):
    with pytest.raises(AtBasePoint):
        criterion_integrand(identity_map, unit_atom, 0j)


def test_integrand_is_nonnegative(square_map, two_zeros, rng):
    ws = 0.98 * rng.uniform(0.05, 1, 200) * np.exp(2j * np.pi * rng.uniform(size=200))

    assert np.all(criterion_values(square_map, two_zeros, ws) >= 0)


def test_profile_matches_closed_form(identity_map, z4):
    profile = criterion_profile(identity_map, z4, (0.9, 0.99, 0.999), angular_count=64)

    assert profile.sup_values == pytest.approx([closed_form(r, 4) for r in profile.radii], rel=1e-9)
    assert profile.sup_values == pytest.approx([0.3623, 0.0396, 0.0040], abs=1e-4)


def test_profile_of_a_contraction(half_map, unit_atom):
    profile = criterion_profile(half_map, unit_atom, (0.6, 0.9, 0.99))

    assert profile.sup_values == (0.0, 0.0, 0.0)


def test_profile_rejects_bad_radii(identity_map, z4):
    with pytest.raises(BadRadius):
        criterion_profile(identity_map, z4, (0.9, 0.5))

    with pytest.raises(BadRadius) as ex:
        criterion_profile(identity_map, z4, (0.5, 1.0))

    assert ex.value.field == "radii[1]"


def test_non_compact_pair(square_map, unit_atom):
    profile = criterion_profile(square_map, unit_atom, RADII)
    report = compactness_verdict(profile, 0.05)

    assert report.verdict == Verdict.NON_COMPACT
    assert profile.sup_values[-1] == pytest.approx(1.0, rel=0.05)


def test_compact_pairs(identity_map, half_map, z4, unit_atom):
    assert compactness_verdict(criterion_profile(identity_map, z4, RADII), 0.05).verdict == Verdict.COMPACT
    assert compactness_verdict(criterion_profile(half_map, unit_atom, RADII), 0.05).verdict == Verdict.COMPACT


@pytest.mark.parametrize("n", range(1, 9))
def test_finite_dimensional_model_spaces_give_compact(n, identity_map):
    profile = criterion_profile(identity_map, monomial_inner(n), (0.9, 0.995, 0.998, 0.999), angular_count=32)

    assert compactness_verdict(profile, 0.05).verdict == Verdict.COMPACT


def test_inconclusive_profile():
    profile = CriterionProfile(radii=RADII, sup_values=(0.3, 0.2, 0.2, 0.2), angular_count=8)
    report = compactness_verdict(profile, 0.05)

    assert report.verdict == Verdict.INCONCLUSIVE
    assert report.slope is not None


def test_verdict_needs_enough_radii():
    with pytest.raises(InsufficientProfile):
        compactness_verdict(CriterionProfile(radii=(0.9, 0.99, 0.999), sup_values=(0, 0, 0), angular_count=8), 0.05)

    with pytest.raises(InsufficientProfile):
        compactness_verdict(CriterionProfile(radii=(0.5, 0.6, 0.7, 0.8), sup_values=(0, 0, 0, 0), angular_count=8), 0.05)


def test_verdict_needs_positive_tolerance():
    with pytest.raises(DomainError):
        compactness_verdict(CriterionProfile(radii=RADII, sup_values=(0, 0, 0, 0), angular_count=8), 0.0)


def test_profile_round_trip(identity_map, z4):
    profile = criterion_profile(identity_map, z4, RADII, angular_count=16)
    restored = CriterionProfile.from_dict(json.loads(json.dumps(profile.to_dict())))

    assert restored == profile


def test_profile_rejects_decreasing_radii():
    with pytest.raises(BadRadius) as ex:
        CriterionProfile.from_dict({"radii": [0.9, 0.5], "sup_values": [0.1, 0.1], "angular_count": 8})

    assert ex.value.field == "radii[1]"


def test_profile_rejects_malformed_values():
    with pytest.raises(DomainError) as ex:
        CriterionProfile.from_dict({"radii": [0.5, 0.9], "sup_values": [0.1, -0.2], "angular_count": 8})

    assert ex.value.field == "sup_values[1]"

    with pytest.raises(DomainError):
        CriterionProfile(radii=(0.5, 0.9), sup_values=(0.1,), angular_count=8)

    with pytest.raises(DomainError):
        CriterionProfile(radii=(0.5, 0.9), sup_values=(0.1, 0.1), angular_count=8, refined=(True,))


def test_scaling_the_map_never_increases_sups(square_map, z4):
    radii = (0.3, 0.6, 0.9)
    original = criterion_profile(square_map, z4, radii, angular_count=32)
    scaled = criterion_profile(square_map.scaled(0.8), z4, radii, angular_count=32)

    for before, after in zip(original.sup_values, scaled.sup_values):
        assert after <= before + 1e-12


def test_two_variable_profile(first_coordinate, z4):
    profile = criterion_profile(first_coordinate, z4, (0.5, 0.9), angular_count=8, sq=sphere_uniform(2, 2000, seed=5))

    assert profile.quadrature == {"d": 2, "n": 2000, "seed": 5}
    assert all(value > 0 for value in profile.sup_values)


def test_heatmap_rows(half_map, unit_atom):
    rows = criterion_heatmap(half_map, unit_atom, (0.25, 0.75), angular_count=8)

    assert len(rows) == 16
    assert all(value == 0.0 for r, _, value in rows if r == 0.75)
    assert all(value > 0 for r, _, value in rows if r == 0.25)


def test_heatmap_skips_the_base_point(unit_atom):
    phi = SelfMap.certify(Polynomial([0.5, 0.25]))
    rows = criterion_heatmap(phi, unit_atom, (0.5,), angular_count=4)

    assert len(rows) == 3
    assert all(angle != 0 for _, angle, _ in rows)


def test_probe_of_a_disk():
    probe = one_component_probe(monomial_inner(1), 0.5, grid_n=128)

    assert probe.connected
    assert probe.component_count == 1


def test_probe_splits_around_two_zeros(two_zeros):
    assert one_component_probe(two_zeros, 0.05, grid_n=512).component_count == 2
    assert one_component_probe(two_zeros, 0.99, grid_n=512).component_count == 1


def test_probe_needs_a_fine_grid(two_zeros):
    with pytest.raises(DomainError):
        one_component_probe(two_zeros, 0.5, grid_n=32)


def test_catalog_pairs_match_expected_verdicts():
    for pair in PAIRS:
        profile = criterion_profile(catalog_self_map(pair["phi"]), catalog_inner(pair["theta"]), RADII)
        assert compactness_verdict(profile, 0.05).verdict == pair["expected"]


def test_catalog_listing():
    listing = catalog()

    assert "z^2" in listing["self_maps"]
    assert {"phi": "z^2", "theta": "atom(1,1)", "expected": "NonCompact"} in listing["pairs"]


def test_catalog_reports_unknown_names_only(monkeypatch):
    def broken():
        raise KeyError("coefficient")

    monkeypatch.setitem(SELF_MAPS, "broken", broken)
    monkeypatch.setitem(INNER_FUNCTIONS, "broken", broken)

    with pytest.raises(KeyError):
        catalog_self_map("broken")

    with pytest.raises(KeyError):
        catalog_inner("broken")
