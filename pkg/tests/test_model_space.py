# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

import numpy as np
import pytest

from nevlab.helpers.errors import DomainError, SequenceViolation
from nevlab.helpers.inner import BlaschkeProduct, InnerFunction, monomial_inner
from nevlab.helpers.model_space import (
    KernelPoint,
    cohn_functional,
    kernel_coordinates,
    kernel_derivative,
    kernel_derivative_bound_check,
    kernel_eval,
    kernel_norm,
    kernel_point,
    kernel_taylor,
    membership_residual,
    model_space_norm,
    pn_project,
    pseudo_disk_contains,
    pseudo_disk_mesh,
    pseudo_distance,
    reproduce_check,
    taylor_coefficients,
    tm_basis,
    weak_star_surrogate
)
from nevlab.helpers.numerics import Polynomial

from tests.conftest import random_disk_points, random_zeros


def random_basis(rng, m: int = 3):
    return tm_basis(BlaschkeProduct.from_points(random_zeros(rng, m)))


def random_coords(rng, m: int) -> np.ndarray:
    return rng.standard_normal(m) + 1j * rng.standard_normal(m)


def test_kernel_of_the_identity_at_origin():
    theta = monomial_inner(1)

    assert kernel_eval(theta, 0j, 0.7) == pytest.approx(1.0)
    assert kernel_norm(theta, 0j) == pytest.approx(1.0)


def test_kernel_of_z_squared():
    theta = monomial_inner(2)

    assert kernel_eval(theta, 0.5, 0.3) == pytest.approx(1 + 0.5 * 0.3)
    assert kernel_norm(theta, 0.5) == pytest.approx(np.sqrt(1.25))


def test_kernel_norm_of_an_atom(unit_atom):
    assert kernel_norm(unit_atom, 0j) == pytest.approx(np.sqrt(1 - np.exp(-2)))
    assert kernel_eval(unit_atom, 0j, 0j) == pytest.approx(1 - np.exp(-2))


def test_kernel_diagonal_is_squared_norm(unit_atom, rng):
    for w in random_disk_points(rng, 10):
        point = kernel_point(unit_atom, w)
        assert kernel_eval(unit_atom, w, w).real == pytest.approx(point.norm ** 2, rel=1e-12)


def test_kernel_points_carry_the_kernel_norm(two_zeros):
    assert kernel_point(two_zeros, 0.5).norm == pytest.approx(np.sqrt(1 / 0.75))

    with pytest.raises(DomainError) as ex:
        KernelPoint(w=0.5, theta=two_zeros, norm=3.0)

    assert ex.value.field == "norm"

    with pytest.raises(DomainError):
        KernelPoint(w=1.0, theta=two_zeros, norm=0.0)


def test_kernel_outside_the_disk(unit_atom):
    with pytest.raises(DomainError):
        kernel_eval(unit_atom, 0.5, 1.0)


def test_kernel_derivative_matches_central_difference(unit_atom, rng):
    h = 1e-6

    for w, z in zip(random_disk_points(rng, 5, 0.1, 0.8), random_disk_points(rng, 5, 0.1, 0.8)):
        difference = (kernel_eval(unit_atom, w, z + h) - kernel_eval(unit_atom, w, z - h)) / (2 * h)
        assert abs(kernel_derivative(unit_atom, w, z) - difference) < 1e-6 * (1 + abs(difference))


def test_taylor_coefficients_of_a_geometric_series():
    coeffs = taylor_coefficients(Polynomial([1.0]), Polynomial([1.0, -0.5]), 10)

    assert np.allclose(coeffs, 0.5 ** np.arange(10))


def test_monomial_model_space():
    basis = tm_basis(BlaschkeProduct(((0j, 3),)))
    z = 0.4 - 0.2j

    assert basis.dimension == 3
    assert np.allclose(basis.gram, np.eye(3), atol=1e-14)
    assert np.allclose(basis.evaluate(z), [1, z, z ** 2])


def test_single_zero_gives_normalized_szego_kernel():
    a = 0.4 + 0.3j
    basis = tm_basis(BlaschkeProduct.from_points([a]))
    z = -0.2 + 0.5j

    assert basis.evaluate(z)[0] == pytest.approx(np.sqrt(1 - abs(a) ** 2) / (1 - np.conj(a) * z))


def test_random_basis_is_orthonormal_and_in_the_model_space(rng):
    for _ in range(5):
        basis = random_basis(rng)

        assert np.max(np.abs(basis.gram - np.eye(3))) <= 1e-10
        assert membership_residual(basis) <= 1e-9


def test_basis_with_repeated_zero(rng):
    basis = tm_basis(BlaschkeProduct(((0.6, 2), (-0.3j, 1))))

    assert np.max(np.abs(basis.gram - np.eye(3))) <= 1e-10
    assert membership_residual(basis) <= 1e-9


def test_reproduce_check_example():
    basis = tm_basis(BlaschkeProduct(((0j, 2),)))
    check = reproduce_check(basis, [1, 1], 0.3)

    assert check.pairing_value == pytest.approx(1.3)
    assert check.point_value == pytest.approx(1.3)


def test_reproduce_check_of_zero():
    basis = tm_basis(BlaschkeProduct(((0j, 2),)))
    check = reproduce_check(basis, [0, 0], 0.3)

    assert check.pairing_value == 0
    assert check.point_value == 0


def test_reproduce_check_sweep(rng):
    basis = random_basis(rng)
    f = random_coords(rng, 3)

    for w in random_disk_points(rng, 20, 0.0, 0.8):
        assert reproduce_check(basis, f, w).abs_error <= 1e-8 * (1 + basis.norm(f))


def test_kernel_norm_against_taylor_expansion(rng):
    for _ in range(50):
        B = BlaschkeProduct.from_points(random_zeros(rng, int(rng.integers(1, 5))))
        basis = tm_basis(B)
        w = random_disk_points(rng, 1, 0.0, 0.8)[0]

        squared = float(np.sum(np.abs(kernel_taylor(basis, w)) ** 2))
        assert squared == pytest.approx(kernel_norm(InnerFunction(blaschke=B), w) ** 2, abs=1e-9)


def test_kernel_expansion_in_the_basis(rng):
    B = BlaschkeProduct.from_points(random_zeros(rng, 3))
    basis = tm_basis(B)
    theta = InnerFunction(blaschke=B)

    for w, z in zip(random_disk_points(rng, 20, 0.0, 0.8), random_disk_points(rng, 20, 0.0, 0.8)):
        element = basis.element(kernel_coordinates(basis, w))
        assert abs(element(z) - kernel_eval(theta, w, z)) <= 1e-8


def test_projection_drops_low_order_terms():
    basis = tm_basis(BlaschkeProduct(((0j, 3),)))

    assert np.allclose(pn_project(basis, [1, 1, 1], 1), [0, 1, 1])
    assert np.allclose(pn_project(basis, [1, 1, 1], 0), [1, 1, 1])
    assert np.allclose(pn_project(basis, [1, 1, 1], 3), [0, 0, 0])


def test_projection_properties(rng):
    basis = random_basis(rng)
    f = random_coords(rng, 3)

    for n in (1, 2):
        projected = pn_project(basis, f, n)

        assert abs((projected @ basis.taylor)[:n]).max() <= 1e-10
        assert abs(basis.inner_product(f - projected, projected)) <= 1e-9
        assert np.allclose(pn_project(basis, projected, n), projected, atol=1e-9)
        assert basis.norm(projected) <= basis.norm(f) + 1e-10


def test_projection_rejects_negative_order(rng):
    with pytest.raises(DomainError):
        pn_project(random_basis(rng), [1, 0, 0], -1)


def test_model_space_norm_for_p_equal_two(rng):
    basis = random_basis(rng)
    f = random_coords(rng, 3)

    assert model_space_norm(basis, f, 2) == pytest.approx(basis.norm(f), rel=1e-10)
    assert model_space_norm(basis, f, 1) <= model_space_norm(basis, f, 2) + 1e-12


def test_cohn_functional_of_a_constant():
    estimate = cohn_functional(Polynomial([1.0]), monomial_inner(1), 0.5)

    assert estimate.value == pytest.approx(1.0)
    assert not estimate.diverged


def test_cohn_functional_radial_oracle():
    estimate = cohn_functional(Polynomial([0, 1]), monomial_inner(2), 0.5)

    assert estimate.value == pytest.approx(2 * (1 - np.log(2)), rel=1e-5)
    assert not estimate.diverged


def test_cohn_functional_is_monotone_in_p():
    f, theta = Polynomial([1, 1]), monomial_inner(2)
    low, high = cohn_functional(f, theta, 0.3), cohn_functional(f, theta, 0.7)

    assert low.value <= high.value
    # |f(0)|^2 + integral of |f'|^2 log(1/|w|) dA = 1 + 1/2
    assert low.value >= 1.5 - 1e-6


def test_cohn_functional_on_a_basis_element(rng):
    basis = tm_basis(BlaschkeProduct(((0j, 2),)))
    element = basis.element([0, 1])
    estimate = cohn_functional(element, monomial_inner(2), 0.5)

    assert estimate.value == pytest.approx(2 * (1 - np.log(2)), rel=1e-5)


def test_cohn_functional_exponent_range():
    with pytest.raises(DomainError):
        cohn_functional(Polynomial([1.0]), monomial_inner(1), 1.0)


def test_pseudo_disk_membership():
    assert pseudo_disk_contains(0j, 0.5, 0.3)
    assert not pseudo_disk_contains(0j, 0.5, 0.5)
    assert pseudo_disk_contains(0.9j, 0.01, 0.9j)


def test_pseudo_distance_is_symmetric(rng):
    z, w = random_disk_points(rng, 2)

    assert pseudo_distance(z, w) == pytest.approx(pseudo_distance(w, z))


def test_pseudo_disk_mesh_stays_inside(rng):
    w = 0.95 * np.exp(0.3j)
    mesh = pseudo_disk_mesh(w, 0.4)

    assert mesh[0] == pytest.approx(w)
    assert np.all(pseudo_distance(mesh, w) < 0.4)


def test_kernel_derivative_bound_along_the_radius(unit_atom):
    rows = kernel_derivative_bound_check(unit_atom, [1 - 2.0 ** -n for n in range(1, 9)], a=0.5, epsilon=0.3, c=0.1)

    assert len(rows) == 8
    assert all(row.theta_modulus < 0.5 for row in rows)
    assert all(row.empirical_c > 0 for row in rows)
    assert rows[0].ratio_to_c == pytest.approx(rows[0].empirical_c / 0.1)


def test_kernel_derivative_bound_needs_small_theta():
    with pytest.raises(SequenceViolation) as ex:
        kernel_derivative_bound_check(monomial_inner(1), [0.25, 0.5, 0.75], a=0.5, epsilon=0.3)

    assert ex.value.field == "w_seq[1]"


def test_weak_star_surrogate_decays_for_an_atom(unit_atom):
    values = weak_star_surrogate(unit_atom, [0.9, 0.99, 0.999])

    assert values[0] > values[1] > values[2]
    assert values[2] < 0.2
