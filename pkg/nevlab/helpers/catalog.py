# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Named self-maps, inner functions and pairs with a known answer"""
from nevlab.helpers.criterion import Verdict
from nevlab.helpers.errors import ConfigError
from nevlab.helpers.inner import InnerFunction, atom, blaschke, monomial_inner
from nevlab.helpers.nevanlinna import SelfMap
from nevlab.helpers.numerics import MultiPolynomial


SELF_MAPS = {
    "z": lambda: MultiPolynomial(1, {(1,): 1}),
    "z^2": lambda: MultiPolynomial(1, {(2,): 1}),
    "z/2": lambda: MultiPolynomial(1, {(1,): 0.5}),
    "z1": lambda: MultiPolynomial(2, {(1, 0): 1}),
    "(z1+z2)/4": lambda: MultiPolynomial(2, {(1, 0): 0.25, (0, 1): 0.25})
}

INNER_FUNCTIONS = {
    "z": lambda: monomial_inner(1),
    "z^4": lambda: monomial_inner(4),
    "atom(1,1)": lambda: atom(1.0, 1.0),
    "blaschke(0.5,-0.5)": lambda: blaschke(0.5, -0.5)
}

PAIRS = [
    {"phi": "z/2", "theta": "atom(1,1)", "expected": Verdict.COMPACT},
    {"phi": "z^2", "theta": "atom(1,1)", "expected": Verdict.NON_COMPACT},
    {"phi": "z", "theta": "z^4", "expected": Verdict.COMPACT}
]


def catalog_self_map(name: str) -> SelfMap:
    if name not in SELF_MAPS:
        raise ConfigError(f"unknown catalog self-map '{name}'", field="phi.catalog")

    return SelfMap.certify(SELF_MAPS[name]())


def catalog_inner(name: str) -> InnerFunction:
    if name not in INNER_FUNCTIONS:
        raise ConfigError(f"unknown catalog inner function '{name}'", field="theta.catalog")

    return INNER_FUNCTIONS[name]()


def catalog() -> dict:
    return {
        "self_maps": sorted(SELF_MAPS),
        "inner_functions": sorted(INNER_FUNCTIONS),
        "pairs": [
            {"phi": pair["phi"], "theta": pair["theta"], "expected": pair["expected"].value}
            for pair in PAIRS
        ]
    }
