# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from nevlab.helpers.errors import ConfigError

from .validators import ValidationSchema, field_path


def validate_config(schema: ValidationSchema, document: dict) -> dict:
    """Returns the document, or raises a ConfigError naming the offending field"""
    error = schema.first_error(document)

    if error is not None:
        path, message = error
        raise ConfigError(f"{path}: {message}" if path else message, field=path or None)

    return document
