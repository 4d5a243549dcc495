# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from nevlab.cli import cli


cli(prog_name="nevlab")
