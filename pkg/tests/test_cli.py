# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

import json

import numpy as np
import pytest

from click.testing import CliRunner

from nevlab import tasks
from nevlab.cli import cli
from nevlab.helpers.errors import ConfigError
from nevlab.helpers.validation import ValidationSchema, validate_config
from nevlab.helpers.validation.builders import build_self_map
from nevlab.output import format_cell, render_csv
from nevlab.tasks import TaskResult


SQUARE_WITH_ATOM = {
    "version": "1",
    "phi": {"catalog": "z^2"},
    "theta": {"catalog": "atom(1,1)"},
    "radii": [0.9, 0.99, 0.995, 0.999],
    "angular_count": 64
}


@pytest.fixture
def runner():
    return CliRunner()


def test_verify_lp(runner, write_config):
    path = write_config({"version": "1", "task": "verify-lp", "f": [[0, 0], [1, 0]]})
    result = runner.invoke(cli, ["verify-lp", "--config", path])

    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "lhs,rhs,rel_error,passed"
    assert result.output.splitlines()[1].endswith(",true")


def test_criterion_verdict(runner, write_config):
    result = runner.invoke(cli, ["criterion", "--config", write_config(SQUARE_WITH_ATOM)])

    assert result.exit_code == 0

    document = json.loads(result.output)

    assert document["verdict"]["verdict"] == "NonCompact"
    assert len(document["rows"]) == 4


def test_criterion_with_a_wrong_expectation(runner, write_config):
    path = write_config(dict(SQUARE_WITH_ATOM, expect="Compact"))
    result = runner.invoke(cli, ["criterion", "--config", path])

    assert result.exit_code == 1


def test_zero_outside_the_disk(runner, write_config):
    path = write_config({
        "version": "1",
        "theta": {"blaschke": [{"zero": [1.2, 0]}]},
        "ws": [[0.5, 0]]
    })
    result = runner.invoke(cli, ["kernel", "--config", path])

    assert result.exit_code == 2
    assert "theta.blaschke[0].zero" in result.output


def test_missing_version(runner, write_config):
    result = runner.invoke(cli, ["probe", "--config", write_config({"theta": {"catalog": "z"}})])

    assert result.exit_code == 2
    assert "version" in result.output


def test_missing_config_file(runner, tmp_path):
    result = runner.invoke(cli, ["probe", "--config", str(tmp_path / "absent.json")])

    assert result.exit_code == 2
    assert "ConfigError" in result.output


def test_task_mismatch(runner, write_config):
    path = write_config({"version": "1", "task": "probe", "theta": {"catalog": "z"}, "ws": [[0.5, 0]]})
    result = runner.invoke(cli, ["kernel", "--config", path])

    assert result.exit_code == 2
    assert '"field": "task"' in result.output


def test_unknown_catalog_entry(runner, write_config):
    path = write_config({"version": "1", "theta": {"catalog": "z^9"}, "ws": [[0.5, 0]]})
    result = runner.invoke(cli, ["kernel", "--config", path])

    assert result.exit_code == 2
    assert "theta.catalog" in result.output


def test_list_catalog(runner):
    result = runner.invoke(cli, ["--list-catalog"])

    assert result.exit_code == 0
    assert "atom(1,1)" in json.loads(result.output)["inner_functions"]


def test_output_is_deterministic(runner, write_config, tmp_path):
    path = write_config(dict(SQUARE_WITH_ATOM, output={"format": "csv"}))
    first, second = tmp_path / "first.csv", tmp_path / "second.csv"

    assert runner.invoke(cli, ["criterion", "--config", path, "--out", str(first)]).exit_code == 0
    assert runner.invoke(cli, ["criterion", "--config", path, "--out", str(second)]).exit_code == 0
    assert first.read_bytes() == second.read_bytes()
    assert first.read_text().startswith("r,sup_value,refined\n")


def test_probe(runner, write_config):
    path = write_config({"version": "1", "theta": {"catalog": "blaschke(0.5,-0.5)"}, "r": 0.05, "grid_n": 512})
    result = runner.invoke(cli, ["probe", "--config", path])
    document = json.loads(result.output)

    assert result.exit_code == 0
    assert document["rows"][0]["component_count"] == 2
    assert "caveat" in document


def test_basis(runner, write_config):
    path = write_config({
        "version": "1",
        "theta": {"blaschke": [{"zero": [0.5, 0]}, {"zero": [0, -0.3], "multiplicity": 2}]},
        "coords": [[1, 0], [0, 1], [0.5, 0]],
        "ws": [[0.2, 0.1], [-0.6, 0]],
        "n": 1
    })
    result = runner.invoke(cli, ["basis", "--config", path])
    document = json.loads(result.output)

    assert result.exit_code == 0
    assert document["dimension"] == 3
    assert document["gram_error"] <= 1e-10
    assert len(document["projection"]["coords"]) == 3


def test_schema_validation():
    assert ValidationSchema.EXPERIMENT.validate({"version": "1"}) == (True, None)

    valid, message = ValidationSchema.EXPERIMENT.validate({"version": "1", "grid_n": 32})

    assert not valid
    assert message.startswith("grid_n:")


def test_validate_config_names_the_field():
    with pytest.raises(ConfigError) as ex:
        validate_config(ValidationSchema.EXPERIMENT, {"version": "1", "radii": [0.5, 1.5]})

    assert ex.value.field == "radii[1]"


def test_csv_cells():
    assert format_cell(True) == "true"
    assert format_cell(np.int64(3)) == "3"
    assert format_cell(0.1) == "1.000000000000000e-01"

    result = TaskResult(passed=True, columns=("a", "b"), rows=[(1, False)])

    assert render_csv(result) == "a,b\n1,false\n"


def test_verify_stanton(runner, write_config):
    path = write_config({"version": "1", "phi": {"catalog": "z^2"}, "f": [[0, 0], [1, 0]]})
    result = runner.invoke(cli, ["verify-stanton", "--config", path])

    assert result.exit_code == 0
    assert result.output.startswith("lhs,rhs,rel_error,base_point_share,converged,passed\n")
    assert result.output.splitlines()[1].endswith(",true")


def test_counting(runner, write_config):
    path = write_config({"version": "1", "phi": {"catalog": "z^2"}, "ws": [[0.3, 0], [0, -0.5]]})
    result = runner.invoke(cli, ["counting", "--config", path])
    lines = result.output.splitlines()

    assert result.exit_code == 0
    assert lines[0].startswith("w_re,w_im,value,preimages")
    assert len(lines) == 3
    assert float(lines[1].split(",")[2]) == pytest.approx(np.log(1 / 0.3))


def test_kernel(runner, write_config):
    path = write_config({"version": "1", "theta": {"catalog": "atom(1,1)"}, "ws": [[0.5, 0]]})
    result = runner.invoke(cli, ["kernel", "--config", path])
    lines = result.output.splitlines()

    assert result.exit_code == 0
    assert lines[0] == "w_re,w_im,theta_modulus,norm,diagonal,weak_star_surrogate,passed"
    assert lines[1].endswith(",true")


def test_cohn(runner, write_config):
    path = write_config({
        "version": "1",
        "f": [[0, 0], [1, 0]],
        "theta": {"blaschke": [{"zero": [0, 0], "multiplicity": 2}]},
        "p": 0.5
    })
    result = runner.invoke(cli, ["cohn", "--config", path])
    lines = result.output.splitlines()

    assert result.exit_code == 0
    assert lines[0] == "p,value,diverged,panels,last_change"
    assert float(lines[1].split(",")[1]) == pytest.approx(2 * (1 - np.log(2)), rel=1e-5)


def test_heatmap(runner, write_config):
    path = write_config({
        "version": "1",
        "phi": {"catalog": "z/2"},
        "theta": {"catalog": "atom(1,1)"},
        "radii": [0.5],
        "angular_count": 8
    })
    result = runner.invoke(cli, ["heatmap", "--config", path])
    lines = result.output.splitlines()

    assert result.exit_code == 0
    assert lines[0] == "r,angle,value"
    assert len(lines) == 9


def test_unconverged_expansion_exits_with_a_numerical_failure(runner, write_config):
    path = write_config({"version": "1", "theta": {"blaschke": [{"zero": [0.99999, 0]}]}})
    result = runner.invoke(cli, ["basis", "--config", path])

    assert result.exit_code == 3
    assert "NoConvergence" in result.output


def test_linear_algebra_failures_exit_with_a_numerical_failure(runner, write_config, monkeypatch):
    def singular(doc, settings):
        raise np.linalg.LinAlgError("singular matrix")

    monkeypatch.setitem(tasks.TASKS, "probe", singular)
    result = runner.invoke(cli, ["probe", "--config", write_config({"version": "1"})])

    assert result.exit_code == 3
    assert "NumericalError" in result.output
    assert "LinAlgError" in result.output


def test_coefficient_maps_reject_a_dimension():
    entry = {"kind": "polynomial", "coefficients": [[0, 0], [1, 0]], "d": 2}

    with pytest.raises(ConfigError) as ex:
        build_self_map(entry)

    assert ex.value.field == "phi.d"

    valid, message = ValidationSchema.EXPERIMENT.validate({"version": "1", "phi": entry})

    assert not valid
    assert message.startswith("phi")
