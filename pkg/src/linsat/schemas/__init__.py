"""JSON schemas for the CLI's machine-readable outputs."""

import json
from importlib import resources

NAMES = ("saturation_report", "search_result", "bounds_table", "audit_report")


def load_schema(name: str) -> dict:
    if name not in NAMES:
        raise KeyError(f"unknown schema {name!r}")
    return json.loads(resources.files(__name__).joinpath(f"{name}.json").read_text())
