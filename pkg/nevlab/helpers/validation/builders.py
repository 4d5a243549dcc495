# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Builds domain objects from validated experiment documents.

Domain errors raised while building are re-raised as ConfigError with the
JSON field path of the offending entry.
"""
from contextlib import contextmanager

import numpy as np

from nevlab.helpers.catalog import catalog_inner, catalog_self_map
from nevlab.helpers.errors import ConfigError, DomainError
from nevlab.helpers.inner import BlaschkeProduct, InnerFunction, SingularInner
from nevlab.helpers.nevanlinna import SelfMap
from nevlab.helpers.numerics import MultiPolynomial, Polynomial


def as_complex(pair) -> complex:
    return complex(pair[0], pair[1])


@contextmanager
def config_field(path: str):
    try:
        yield
    except DomainError as ex:
        raise ConfigError(ex.message, field=path) from ex


def _zeros(items: list, path: str) -> tuple:
    zeros = []

    for idx, item in enumerate(items):
        a = as_complex(item["zero"])

        if not abs(a) < 1:
            raise ConfigError(f"Blaschke zero {a} is not inside the unit disk", field=f"{path}[{idx}].zero")

        zeros.append((a, item.get("multiplicity", 1)))

    return tuple(zeros)


def _gamma(entry: dict, path: str) -> complex:
    gamma = as_complex(entry.get("gamma", [1.0, 0.0]))

    if abs(abs(gamma) - 1) > 1e-12:
        raise ConfigError(f"front factor {gamma} is not unimodular", field=f"{path}.gamma")

    return gamma


def build_polynomial(coefficients: list, path: str = "f") -> Polynomial:
    with config_field(path):
        return Polynomial([as_complex(c) for c in coefficients])


def build_self_map(entry: dict, path: str = "phi") -> SelfMap:
    if "catalog" in entry:
        return catalog_self_map(entry["catalog"])

    if entry["kind"] == "blaschke":
        zeros = _zeros(entry["zeros"], f"{path}.zeros")

        with config_field(path):
            return SelfMap.certify(BlaschkeProduct(zeros, _gamma(entry, path)))

    if "coefficients" in entry:
        if "d" in entry:
            raise ConfigError("'d' applies to 'terms' maps only, coefficient lists are maps of the disk",
                              field=f"{path}.d")

        body = build_polynomial(entry["coefficients"], f"{path}.coefficients")
    else:
        d = entry["d"]

        for idx, term in enumerate(entry["terms"]):
            if len(term["index"]) != d:
                raise ConfigError(f"multi-index has {len(term['index'])} entries, expected {d}",
                                  field=f"{path}.terms[{idx}].index")

        terms = {}

        for term in entry["terms"]:
            alpha = tuple(term["index"])
            terms[alpha] = terms.get(alpha, 0) + as_complex(term["coeff"])

        with config_field(f"{path}.terms"):
            body = MultiPolynomial(d, terms)

    with config_field(path):
        return SelfMap.certify(body)


def build_inner(entry: dict, path: str = "theta") -> InnerFunction:
    if "catalog" in entry:
        return catalog_inner(entry["catalog"])

    blaschke, singular = None, None

    if "blaschke" in entry:
        zeros = _zeros(entry["blaschke"], f"{path}.blaschke")

        with config_field(f"{path}.blaschke"):
            blaschke = BlaschkeProduct(zeros, _gamma(entry, path))

    if "atoms" in entry:
        atoms = []

        for idx, item in enumerate(entry["atoms"]):
            zeta = as_complex(item["zeta"])

            if abs(abs(zeta) - 1) > 1e-12:
                raise ConfigError(f"atom {zeta} is not on the unit circle", field=f"{path}.atoms[{idx}].zeta")

            atoms.append((zeta, item["mass"]))

        with config_field(f"{path}.atoms"):
            singular = SingularInner(tuple(atoms))

    with config_field(path):
        return InnerFunction(blaschke=blaschke, singular=singular)


def build_points(items: list, path: str = "ws") -> np.ndarray:
    points = np.array([as_complex(item) for item in items], dtype=complex)
    outside = np.flatnonzero(np.abs(points) >= 1)

    if outside.size:
        raise ConfigError(f"point {points[outside[0]]} is not inside the unit disk", field=f"{path}[{outside[0]}]")

    return points
