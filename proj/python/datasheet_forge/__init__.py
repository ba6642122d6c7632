"""Authoring and audit toolkit for healthcare AI dataset datasheets."""

from ._core import (
    Datasheet,
    assess,
    check_compliance,
    coverage,
    export_ntriples,
    field_paths,
    format_version,
    new_template,
    parse,
    serialize,
    validate,
)

__all__ = [
    "Datasheet",
    "assess",
    "check_compliance",
    "coverage",
    "export_ntriples",
    "field_paths",
    "format_version",
    "new_template",
    "parse",
    "serialize",
    "validate",
]
