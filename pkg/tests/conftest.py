# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

import json

import numpy as np
import pytest

from nevlab.helpers.inner import atom, blaschke, monomial_inner
from nevlab.helpers.nevanlinna import SelfMap
from nevlab.helpers.numerics import MultiPolynomial, Polynomial, disk_quadrature


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


@pytest.fixture(scope="session")
def dq():
    return disk_quadrature()


@pytest.fixture(scope="session")
def identity_map():
    return SelfMap.certify(Polynomial([0, 1]))


@pytest.fixture(scope="session")
def square_map():
    return SelfMap.certify(Polynomial([0, 0, 1]))


@pytest.fixture(scope="session")
def half_map():
    return SelfMap.certify(Polynomial([0, 0.5]))


@pytest.fixture(scope="session")
def first_coordinate():
    return SelfMap.certify(MultiPolynomial(2, {(1, 0): 1}))


@pytest.fixture(scope="session")
def unit_atom():
    return atom(1.0, 1.0)


@pytest.fixture(scope="session")
def z4():
    return monomial_inner(4)


@pytest.fixture(scope="session")
def two_zeros():
    return blaschke(0.5, -0.5)


def random_disk_points(rng, n: int, low: float = 0.05, high: float = 0.95) -> np.ndarray:
    radii = rng.uniform(low, high, n)
    return radii * np.exp(2j * np.pi * rng.uniform(size=n))


def random_zeros(rng, m: int, high: float = 0.8) -> list:
    return list(random_disk_points(rng, m, 0.0, high))


@pytest.fixture
def write_config(tmp_path):
    def _write(document: dict, name: str = "config.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)

    return _write
