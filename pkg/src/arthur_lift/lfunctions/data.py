"""JSON ingestion of eigenform data and parameter files."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import TYPE_CHECKING, Any

import jsonschema

from ..errors import DataFormatError
from .hecke import ELLIPTIC, SIEGEL2, HeckeData

if TYPE_CHECKING:
    from ..params import GlobalAParameter

_RATIONAL = {"type": ["string", "integer"], "pattern": r"^-?\d+(/\d+)?$"}

EIGENFORM_SCHEMA = {
    "oneOf": [
        {
            "type": "object",
            "required": ["name", "kind", "weight", "ap"],
            "properties": {
                "name": {"type": "string"},
                "kind": {"const": ELLIPTIC},
                "weight": {"type": "integer", "minimum": 2, "multipleOf": 2},
                "ap": {
                    "type": "object",
                    "propertyNames": {"pattern": r"^[1-9]\d*$"},
                    "additionalProperties": {"type": "integer"},
                },
            },
        },
        {
            "type": "object",
            "required": ["kind", "k", "j"],
            "properties": {
                "name": {"type": "string"},
                "kind": {"const": SIEGEL2},
                "k": {"type": "integer"},
                "j": {"type": "integer"},
                "spin_satake": {
                    "type": "object",
                    "propertyNames": {"pattern": r"^[1-9]\d*$"},
                    "additionalProperties": {
                        "type": "array",
                        "items": _RATIONAL,
                        "minItems": 2,
                        "maxItems": 2,
                    },
                },
            },
        },
    ]
}

DATUM_SCHEMA = {
    "type": "object",
    "required": ["name", "m", "type", "arch"],
    "properties": {
        "name": {"type": "string"},
        "m": {"type": "integer", "minimum": 1},
        "type": {"enum": ["orthogonal", "symplectic"]},
        "arch": {"type": "array", "items": {"type": "string"}},
        "kind": {"enum": ["generic", "trivial", "elliptic", "sym2", "siegel2"]},
        "hecke": EIGENFORM_SCHEMA,
    },
}

PARAMETER_SCHEMA = {
    "type": "object",
    "required": ["constituents"],
    "properties": {
        "name": {"type": "string"},
        "constituents": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["datum", "d"],
                "properties": {"datum": DATUM_SCHEMA, "d": {"type": "integer", "minimum": 1}},
            },
        },
        "k": {"type": "array", "items": {"type": "integer"}},
    },
}


def _location(err: jsonschema.ValidationError) -> str:
    return "$" + "".join(f"[{p!r}]" if isinstance(p, str) else f"[{p}]" for p in err.absolute_path)


def check_schema(obj: Any, schema: dict, what: str = "document") -> None:
    try:
        jsonschema.validate(obj, schema)
    except jsonschema.ValidationError as err:
        # oneOf failures are more useful when reported from the closest branch
        best = jsonschema.exceptions.best_match([err] + list(err.context or []))
        raise DataFormatError(f"malformed {what}: {best.message}", _location(best)) from None


def read_json(path) -> Any:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DataFormatError(f"cannot read file: {exc.strerror}", str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"invalid JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from None


def hecke_from_json(obj: Any) -> HeckeData:
    check_schema(obj, EIGENFORM_SCHEMA, "eigenform data")
    if obj["kind"] == ELLIPTIC:
        return HeckeData(obj["name"], ELLIPTIC, obj["weight"], {int(p): a for p, a in obj["ap"].items()})
    traces = {
        int(p): tuple(Fraction(str(t)) for t in ts) for p, ts in obj.get("spin_satake", {}).items()
    }
    return HeckeData(obj.get("name", "f"), SIEGEL2, k=obj["k"], j=obj["j"], spin_traces=traces)


def load_eigenform_data(path) -> HeckeData:
    obj = read_json(path)
    try:
        return hecke_from_json(obj)
    except DataFormatError as exc:
        raise DataFormatError(str(exc), f"{path}") from None


def parameter_from_json(obj: Any) -> tuple["GlobalAParameter", list[int] | None]:
    from ..params import GlobalAParameter

    check_schema(obj, PARAMETER_SCHEMA, "parameter file")
    try:
        psi = GlobalAParameter.from_json(obj)
    except ValueError as exc:
        raise DataFormatError(str(exc), "$['constituents']") from None
    return psi, obj.get("k")


def load_parameter(path) -> tuple["GlobalAParameter", list[int] | None]:
    """A parameter file: constituents plus an optional weight ``k``."""
    return parameter_from_json(read_json(path))


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("arthur_lift") / "data" / name))
