# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

import os
import sys
import json
import logging

from dotenv import load_dotenv


load_dotenv()

logging.basicConfig(
    level=os.environ.get("NEVLAB_LOG_LEVEL", "WARNING").upper(),
    stream=sys.stderr,
    format="%(asctime)s %(levelname)s %(name)s: %(message)s"
)

defaults_path = os.environ.get(
    "NEVLAB_DEFAULTS",
    os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "config.json")
)

try:
    with open(defaults_path) as defaults_file:
        settings = json.loads(defaults_file.read())
except FileNotFoundError:
    raise FileNotFoundError(f"{defaults_path} not found")
