# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Experiment tasks: a validated config document in, a TaskResult out"""
import logging

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional

import numpy as np

from nevlab.helpers.criterion import (
    Verdict,
    compactness_verdict,
    criterion_heatmap,
    criterion_profile,
    one_component_probe
)
from nevlab.helpers.errors import ConfigError
from nevlab.helpers.model_space import (
    cohn_functional,
    kernel_eval,
    kernel_norm,
    membership_residual,
    pn_project,
    reproduce_check,
    tm_basis,
    weak_star_surrogate
)
from nevlab.helpers.nevanlinna import (
    counting,
    counting_avg_values,
    littlewood_bound,
    littlewood_paley_verify,
    stanton_verify,
    validate_preimages
)
from nevlab.helpers.inner import inner_modulus
from nevlab.helpers.numerics import disk_quadrature, sphere_uniform
from nevlab.helpers.validation.builders import (
    as_complex,
    build_inner,
    build_points,
    build_polynomial,
    build_self_map
)


logger = logging.getLogger(__name__)

GRAM_TOLERANCE = 1e-10
MEMBERSHIP_TOLERANCE = 1e-9


@dataclass
class TaskResult:
    """Outcome of a task.

    `columns`/`rows` form the table written as CSV, `summary` the metadata
    and verdicts that go to JSON next to the rows.
    """
    passed: bool
    columns: tuple = ()
    rows: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    default_format: str = "csv"


def _require(doc: dict, key: str):
    if key not in doc:
        raise ConfigError(f"'{key}' is required for task {doc.get('task')}", field=key)

    return doc[key]


def _tol(doc: dict, settings: dict, key: str) -> float:
    return float(doc.get("tol", settings["tolerances"][key]))


def _sphere(doc: dict, settings: dict, d: int):
    if d == 1:
        return None

    return sphere_uniform(d, doc.get("sphere_n", settings["sphere"]["n"]), doc.get("seed", settings["sphere"]["seed"]))


def verify_lp(doc: dict, settings: dict) -> TaskResult:
    f = build_polynomial(_require(doc, "f"))
    check = littlewood_paley_verify(f, disk_quadrature(**settings["disk"]))
    passed = check.passed(_tol(doc, settings, "verify-lp"))

    return TaskResult(
        passed=passed,
        columns=("lhs", "rhs", "rel_error", "passed"),
        rows=[(check.lhs, check.rhs, check.rel_error, passed)]
    )


def verify_stanton(doc: dict, settings: dict) -> TaskResult:
    f = build_polynomial(_require(doc, "f"))
    phi = build_self_map(_require(doc, "phi"))
    sq = _sphere(doc, settings, phi.d)

    check = stanton_verify(f, phi, sq=sq)
    passed = check.passed(_tol(doc, settings, "verify-stanton" if phi.d == 1 else "verify-stanton-ball"))

    return TaskResult(
        passed=passed,
        columns=("lhs", "rhs", "rel_error", "base_point_share", "converged", "passed"),
        rows=[(check.lhs, check.rhs, check.rel_error, check.base_point_share, check.converged, passed)],
        summary={"sphere": sq.describe() if sq is not None else None}
    )


def counting_task(doc: dict, settings: dict) -> TaskResult:
    phi = build_self_map(_require(doc, "phi"))
    ws = build_points(_require(doc, "ws"))

    if phi.d > 1:
        sq = _sphere(doc, settings, phi.d)
        values = counting_avg_values(phi, ws, sq)

        return TaskResult(
            passed=True,
            columns=("w_re", "w_im", "value"),
            rows=[(w.real, w.imag, value) for w, value in zip(ws, values)],
            summary={"sphere": sq.describe()}
        )

    rows, passed = [], True

    for w in ws:
        sample = counting(phi, w)
        bound = littlewood_bound(phi, w)
        argument = validate_preimages(phi, sample)

        passed = passed and bound.satisfied and argument
        rows.append((
            w.real,
            w.imag,
            sample.value,
            sum(m for _, m in sample.preimages),
            bound.bound,
            bound.satisfied,
            argument
        ))

    return TaskResult(
        passed=passed,
        columns=("w_re", "w_im", "value", "preimages", "littlewood_bound", "littlewood_ok", "argument_ok"),
        rows=rows
    )


def criterion_task(doc: dict, settings: dict) -> TaskResult:
    phi = build_self_map(_require(doc, "phi"))
    theta = build_inner(_require(doc, "theta"))
    sq = _sphere(doc, settings, phi.d)

    profile = criterion_profile(
        phi,
        theta,
        doc.get("radii", settings["radii"]),
        doc.get("angular_count", settings["angular_count"]),
        sq
    )
    report = compactness_verdict(profile, _tol(doc, settings, "criterion"))

    expect = doc.get("expect")
    passed = expect is None or Verdict(expect) == report.verdict

    return TaskResult(
        passed=passed,
        columns=("r", "sup_value", "refined"),
        rows=list(zip(profile.radii, profile.sup_values, profile.refined)),
        summary={
            "profile": profile.to_dict(),
            "verdict": report.to_dict(),
            "expect": expect
        },
        default_format="json"
    )


def kernel_task(doc: dict, settings: dict) -> TaskResult:
    theta = build_inner(_require(doc, "theta"))
    ws = build_points(_require(doc, "ws"))
    tol = _tol(doc, settings, "kernel")

    surrogates = weak_star_surrogate(theta, ws)
    rows, passed = [], True

    for w, surrogate in zip(ws, surrogates):
        norm = kernel_norm(theta, w)
        diagonal = complex(kernel_eval(theta, w, w)).real
        ok = abs(norm ** 2 - diagonal) <= tol * (1 + norm ** 2)

        passed = passed and ok
        rows.append((w.real, w.imag, float(inner_modulus(theta, w)), norm, diagonal, surrogate, ok))

    return TaskResult(
        passed=passed,
        columns=("w_re", "w_im", "theta_modulus", "norm", "diagonal", "weak_star_surrogate", "passed"),
        rows=rows
    )


def basis_task(doc: dict, settings: dict) -> TaskResult:
    theta = build_inner(_require(doc, "theta"))

    if not theta.is_finite_blaschke:
        raise ConfigError("a basis exists for finite Blaschke products only", field="theta")

    basis = tm_basis(theta.blaschke)
    coords = np.array([as_complex(c) for c in doc.get("coords", [[1.0, 0.0]] * basis.dimension)])

    if coords.shape != (basis.dimension,):
        raise ConfigError(f"expected {basis.dimension} coordinates, got {coords.size}", field="coords")

    tol = _tol(doc, settings, "basis")
    gram_error = float(np.max(np.abs(basis.gram - np.eye(basis.dimension))))
    membership = membership_residual(basis)
    bound = tol * (1 + basis.norm(coords))

    rows, passed = [], gram_error <= GRAM_TOLERANCE and membership <= MEMBERSHIP_TOLERANCE

    for w in build_points(doc.get("ws", [[0.3, 0.0]])):
        check = reproduce_check(basis, coords, w)
        passed = passed and check.abs_error <= bound

        rows.append((
            w.real,
            w.imag,
            check.pairing_value.real,
            check.pairing_value.imag,
            check.point_value.real,
            check.point_value.imag,
            check.abs_error
        ))

    summary = {
        "dimension": basis.dimension,
        "expansion_degree": basis.expansion_degree,
        "gram_error": gram_error,
        "membership_residual": membership
    }

    if "n" in doc:
        projected = pn_project(basis, coords, doc["n"])
        summary["projection"] = {
            "n": doc["n"],
            "coords": [[c.real, c.imag] for c in projected],
            "norm": basis.norm(projected)
        }

    return TaskResult(
        passed=passed,
        columns=("w_re", "w_im", "pairing_re", "pairing_im", "point_re", "point_im", "abs_error"),
        rows=rows,
        summary=summary,
        default_format="json"
    )


def cohn_task(doc: dict, settings: dict) -> TaskResult:
    f = build_polynomial(_require(doc, "f"))
    theta = build_inner(_require(doc, "theta"))
    p = doc.get("p", settings["cohn_p"])

    estimate = cohn_functional(f, theta, p)

    return TaskResult(
        passed=True,
        columns=("p", "value", "diverged", "panels", "last_change"),
        rows=[(p, estimate.value, estimate.diverged, estimate.panels, estimate.last_change)]
    )


def probe_task(doc: dict, settings: dict) -> TaskResult:
    theta = build_inner(_require(doc, "theta"))
    probe = one_component_probe(
        theta,
        doc.get("r", settings["probe"]["r"]),
        doc.get("grid_n", settings["probe"]["grid_n"])
    )

    return TaskResult(
        passed=True,
        columns=("r", "grid_n", "component_count", "connected"),
        rows=[(probe.r, probe.grid_n, probe.component_count, probe.connected)],
        summary={"caveat": probe.caveat},
        default_format="json"
    )


def heatmap_task(doc: dict, settings: dict) -> TaskResult:
    phi = build_self_map(_require(doc, "phi"))
    theta = build_inner(_require(doc, "theta"))

    rows = criterion_heatmap(
        phi,
        theta,
        doc.get("radii", settings["radii"]),
        doc.get("angular_count", settings["heatmap_angular_count"]),
        _sphere(doc, settings, phi.d)
    )

    return TaskResult(passed=True, columns=("r", "angle", "value"), rows=rows)


TASKS: Dict[str, Callable] = {
    "verify-lp": verify_lp,
    "verify-stanton": verify_stanton,
    "counting": counting_task,
    "criterion": criterion_task,
    "kernel": kernel_task,
    "basis": basis_task,
    "cohn": cohn_task,
    "probe": probe_task,
    "heatmap": heatmap_task
}


def run(task: str, doc: dict, settings: dict, seed: Optional[int] = None, tol: Optional[float] = None) -> TaskResult:
    """Runs `task` on a schema-valid document, --seed/--tol overriding the document"""
    if doc.get("task", task) != task:
        raise ConfigError(f"config is for task '{doc['task']}', not '{task}'", field="task")

    doc = dict(doc, task=task)

    if seed is not None:
        doc["seed"] = seed

    if tol is not None:
        doc["tol"] = tol

    logger.info("running %s", task)
    return TASKS[task](doc, settings)
