# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Command line front end: nevlab <task> --config <path>"""
import sys
import json
import click
import numpy as np

from functools import wraps

from nevlab.app import settings
from nevlab.helpers.catalog import catalog
from nevlab.helpers.errors import ConfigError, NevlabError, NumericalError
from nevlab.helpers.validation import ValidationSchema, validate_config
from nevlab.output import render, write_atomic
from nevlab.tasks import run


CHECK_FAILED = 1


def load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as config_file:
            document = json.loads(config_file.read())
    except FileNotFoundError:
        raise ConfigError(f"{path} not found", field="config")
    except json.JSONDecodeError as ex:
        raise ConfigError(f"{path} is not valid JSON: {ex.msg} (line {ex.lineno})", field="config")

    return validate_config(ValidationSchema.EXPERIMENT, document)


def fail(error: NevlabError) -> None:
    click.echo(json.dumps(error.to_record()), err=True)
    sys.exit(error.exit_code)


def execute(task: str, config: str, out: str, seed: int, tol: float) -> None:
    try:
        document = load_config(config)
        result = run(task, document, settings, seed=seed, tol=tol)
    except NevlabError as ex:
        fail(ex)
    except (np.linalg.LinAlgError, ArithmeticError) as ex:
        fail(NumericalError(f"{type(ex).__name__}: {ex}"))

    output = document.get("output", {})
    content = render(task, result, output.get("format"))
    path = out or output.get("path")

    if path:
        write_atomic(path, content)
    else:
        click.echo(content, nl=False)

    if not result.passed:
        sys.exit(CHECK_FAILED)


def task_command(name: str):
    def task_command_decorator(f):
        @cli.command(name)
        @click.option("--config", "config", required=True, type=click.Path(dir_okay=False), help="experiment config (JSON)")
        @click.option("--out", "out", default=None, type=click.Path(dir_okay=False), help="output file, stdout by default")
        @click.option("--seed", type=int, default=None, help="overrides the config seed")
        @click.option("--tol", type=float, default=None, help="overrides the config tolerance")
        @wraps(f)
        def decorated_function(config, out, seed, tol):
            execute(name, config, out, seed, tol)

        return decorated_function

    return task_command_decorator


def print_catalog(ctx, param, value):
    if not value or ctx.resilient_parsing:
        return

    click.echo(json.dumps(catalog(), indent=4))
    ctx.exit()


@click.group()
@click.option("--list-catalog", is_flag=True, expose_value=False, is_eager=True, callback=print_catalog,
              help="print the built-in self-maps, inner functions and pairs")
def cli():
    pass


@task_command("verify-lp")
def verify_lp():
    """Littlewood-Paley identity for a polynomial f"""


@task_command("verify-stanton")
def verify_stanton():
    """Stanton's formula for f and a self-map phi"""


@task_command("counting")
def counting():
    """Counting function rows with Littlewood bound and winding-number check"""


@task_command("criterion")
def criterion():
    """Criterion profile and compactness verdict"""


@task_command("kernel")
def kernel():
    """Kernel norms, diagonals and the weak-star surrogate"""


@task_command("basis")
def basis():
    """Orthonormal basis of K_B, reproducing check and projection"""


@task_command("cohn")
def cohn():
    """Cohn functional for f, Theta and p"""


@task_command("probe")
def probe():
    """One-component probe of {|Theta| < r}"""


@task_command("heatmap")
def heatmap():
    """Criterion integrand on a polar mesh"""


if __name__ == '__main__':
    cli()
