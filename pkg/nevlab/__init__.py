# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

__version__ = "0.1.0"
