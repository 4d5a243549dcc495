# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""This module contains validation schemas for experiment configs"""
import os
import json

from enum import Enum

from jsonschema.exceptions import ValidationError
from jsonschema import validate, FormatChecker


SCHEMA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(__file__))), "validation_schemas")


def field_path(path) -> str:
    """Renders a jsonschema path as theta.blaschke[0].zero"""
    out = ""

    for part in path:
        if isinstance(part, int):
            out += f"[{part}]"
        else:
            out += f".{part}" if out else str(part)

    return out


class ValidationSchema(Enum):
    EXPERIMENT = "experiment"

    @classmethod
    def load_schema(cls, schema):
        with open(ValidationSchema.filename_for_schema(schema)) as schema_file:
            return json.loads(schema_file.read())

    @classmethod
    def filename_for_schema(cls, schema):
        filename = {
            ValidationSchema.EXPERIMENT: "experiment.json"
        }[schema]

        return os.path.join(SCHEMA_DIR, filename)

    def first_error(self, instance: dict):
        """(field path, message) of the first violation, None for a valid instance"""
        schema = ValidationSchema.load_schema(self)

        try:
            validate(
                instance=instance,
                schema=schema,
                format_checker=FormatChecker()
            )

            return None
        except ValidationError as ex:
            return field_path(ex.absolute_path), ex.message

    def validate(self, instance: dict):
        error = self.first_error(instance)

        if error is None:
            return True, None

        path, message = error
        return False, f"{path}: {message}" if path else message
