# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""CSV and JSON artifacts of a TaskResult"""
import os
import io
import csv
import json
import tempfile

import numpy as np

from nevlab.tasks import TaskResult


def format_cell(value) -> str:
    if value is None:
        return ""

    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"

    if isinstance(value, (int, np.integer)):
        return str(int(value))

    return "{:.15e}".format(float(value))


def _native(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)

    if isinstance(value, (int, np.integer)):
        return int(value)

    if isinstance(value, (float, np.floating)):
        return float(value)

    return value


def render_csv(result: TaskResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    writer.writerow(result.columns)

    for row in result.rows:
        writer.writerow([format_cell(value) for value in row])

    return buffer.getvalue()


def render_json(task: str, result: TaskResult) -> str:
    return json.dumps({
        "task": task,
        "passed": result.passed,
        "rows": [
            {column: _native(value) for column, value in zip(result.columns, row)}
            for row in result.rows
        ],
        **result.summary
    }, indent=4) + "\n"


def render(task: str, result: TaskResult, fmt: str = None) -> str:
    fmt = fmt or result.default_format
    return render_csv(result) if fmt == "csv" else render_json(task, result)


def write_atomic(path: str, content: str) -> None:
    """Writes to a temporary file next to `path` and renames it into place"""
    directory = os.path.dirname(os.path.abspath(path))
    handle, temporary = tempfile.mkstemp(dir=directory, suffix=".tmp")

    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="") as out_file:
            out_file.write(content)

        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise
