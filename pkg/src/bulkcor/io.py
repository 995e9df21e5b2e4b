"""JSON data files: Hopf algebras, modules, Frobenius objects and reports.

Scalars use the text encoding of :mod:`bulkcor.scalar` ("p/q" strings or
{"order", "coeffs"} objects).  Matrices are lists of rows, vectors are flat
lists.  Files reference each other by relative path; a Frobenius object may
name the reserved module "unit" for the tensor unit of whatever Hopf algebra
it is combined with.
"""
from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .frobenius import FrobeniusObject
from .hopf import HopfData
from .linalg import Matrix
from .rep import ModuleRep, unit_object
from .report import Report
from .scalar import ScalarError, decode, encode


class DataError(ValueError):
    """A data file is unreadable, violates its schema or is inconsistent."""


_SCALAR = {
    "oneOf": [
        {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"},
        {"type": "integer"},
        {
            "type": "object",
            "properties": {
                "order": {"type": "integer", "minimum": 1},
                "coeffs": {"type": "array", "items": {"type": "string"}},
            },
            "required": ["order", "coeffs"],
            "additionalProperties": False,
        },
    ]
}
_VECTOR = {"type": "array", "items": {"$ref": "#/$defs/scalar"}}
_MATRIX = {"type": "array", "items": {"$ref": "#/$defs/vector"}}
_DEFS = {"scalar": _SCALAR, "vector": _VECTOR, "matrix": _MATRIX}


def _schema(tag: str, properties: dict, required: list[str]) -> dict:
    props = {"schema": {"const": tag}, "name": {"type": "string"}, **properties}
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "properties": props,
        "required": ["schema", *required],
        "additionalProperties": False,
        "$defs": _DEFS,
    }


_M = {"$ref": "#/$defs/matrix"}
_V = {"$ref": "#/$defs/vector"}
_POS = {"type": "integer", "minimum": 1}

SCHEMAS = {
    "hopf-v1": _schema(
        "hopf-v1",
        {
            "dim": _POS,
            "field_order": _POS,
            "mult": _M,
            "unit": _V,
            "comult": _M,
            "counit": _V,
            "antipode": _M,
            "r_summands": {"type": "array", "items": {"type": "array", "items": _V, "minItems": 2, "maxItems": 2}},
            "ribbon": _V,
            "pivot": _V,
        },
        ["dim", "field_order", "mult", "unit", "comult", "counit", "antipode", "r_summands", "ribbon", "pivot"],
    ),
    "module-v1": _schema(
        "module-v1",
        {"hopf_ref": {"type": "string"}, "dim": _POS, "action": {"type": "array", "items": _M}},
        ["hopf_ref", "dim", "action"],
    ),
    "frobenius-v1": _schema(
        "frobenius-v1",
        {"module_ref": {"type": "string"}, "mult": _M, "unit": _V, "comult": _M, "counit": _V},
        ["module_ref", "mult", "unit", "comult", "counit"],
    ),
    "report-v1": _schema(
        "report-v1",
        {
            "command": {"type": "string"},
            "inputs": {"type": "array", "items": {"type": "string"}},
            "ok": {"type": "boolean"},
            "checks": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "check_id": {"type": "string"},
                        "status": {"enum": ["pass", "fail", "not checkable", "info"]},
                        "witness": {},
                    },
                    "required": ["check_id", "status", "witness"],
                    "additionalProperties": False,
                },
            },
            "results": {"type": "object"},
        },
        ["command", "inputs", "ok", "checks"],
    ),
}

UNIT_MODULE = "unit"


def validate(obj, tag: str) -> None:
    try:
        jsonschema.validate(obj, SCHEMAS[tag])
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise DataError(f"{tag}: {exc.message} at {where}") from None


def read_json(path: str | Path, tag: str) -> dict:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"{path}: {exc}") from None
    if not isinstance(obj, dict) or obj.get("schema") != tag:
        raise DataError(f"{path}: expected a {tag} document")
    validate(obj, tag)
    return obj


def write_json(path: str | Path, obj: dict) -> None:
    validate(obj, obj["schema"])
    Path(path).write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


# matrices -------------------------------------------------------------------------------

def matrix_to_json(m: Matrix) -> list[list]:
    return [[encode(x) for x in row] for row in m.to_rows()]


def vector_to_json(m: Matrix) -> list:
    return [encode(x) for x in m.entries()]


def matrix_from_json(rows, order: int, shape: tuple[int, int], key: str) -> Matrix:
    if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
        got = (len(rows), len(rows[0]) if rows else 0)
        raise DataError(f"{key} has shape {got}, expected {shape}")
    try:
        flat = [decode(x, order) for r in rows for x in r]
    except ScalarError as exc:
        raise DataError(f"{key}: {exc}") from None
    return Matrix.from_entries(shape[0], shape[1], flat, order)


def vector_from_json(values, order: int, size: int, key: str) -> Matrix:
    return matrix_from_json([[x] for x in values], order, (size, 1), key)


# Hopf algebras --------------------------------------------------------------------------

def hopf_to_json(h: HopfData) -> dict:
    return {
        "schema": "hopf-v1",
        "name": h.name,
        "dim": h.dim,
        "field_order": h.field_order,
        "mult": matrix_to_json(h.mult),
        "unit": vector_to_json(h.unit),
        "comult": matrix_to_json(h.comult),
        "counit": vector_to_json(h.counit.T),
        "antipode": matrix_to_json(h.antipode),
        "r_summands": [[vector_to_json(r), vector_to_json(s)] for r, s in h.r_summands],
        "ribbon": vector_to_json(h.ribbon),
        "pivot": vector_to_json(h.pivot),
    }


def hopf_from_json(obj: dict, field_order: int | None = None) -> HopfData:
    validate(obj, "hopf-v1")
    d = obj["dim"]
    n = field_order or obj["field_order"]
    if n % obj["field_order"]:
        raise DataError(f"field order {n} is not a multiple of the declared {obj['field_order']}")
    r = [(vector_from_json(a, n, d, f"r_summands[{t}][0]"), vector_from_json(b, n, d, f"r_summands[{t}][1]"))
         for t, (a, b) in enumerate(obj["r_summands"])]
    return HopfData(
        d, n,
        matrix_from_json(obj["mult"], n, (d, d * d), "mult"),
        vector_from_json(obj["unit"], n, d, "unit"),
        matrix_from_json(obj["comult"], n, (d * d, d), "comult"),
        vector_from_json(obj["counit"], n, d, "counit").T,
        matrix_from_json(obj["antipode"], n, (d, d), "antipode"),
        r,
        vector_from_json(obj["ribbon"], n, d, "ribbon"),
        vector_from_json(obj["pivot"], n, d, "pivot"),
        obj.get("name", "H"),
    )


def load_hopf(path: str | Path, field_order: int | None = None) -> HopfData:
    return hopf_from_json(read_json(path, "hopf-v1"), field_order)


# modules --------------------------------------------------------------------------------

def module_to_json(m: ModuleRep, hopf_ref: str) -> dict:
    return {
        "schema": "module-v1",
        "name": m.name,
        "hopf_ref": hopf_ref,
        "dim": m.dim,
        "action": [matrix_to_json(a) for a in m.action],
    }


def module_from_json(obj: dict, h: HopfData) -> ModuleRep:
    validate(obj, "module-v1")
    n = obj["dim"]
    if len(obj["action"]) != h.dim:
        raise DataError(f"module lists {len(obj['action'])} action matrices, Hopf algebra has dim {h.dim}")
    action = [matrix_from_json(a, h.field_order, (n, n), f"action[{i}]") for i, a in enumerate(obj["action"])]
    return ModuleRep(h, n, action, obj.get("name", "M"))


def _same_file(ref: str, base: Path, target: Path) -> bool:
    return (base / ref).resolve() == target.resolve()


def load_module(path: str | Path, h: HopfData, hopf_path: str | Path | None = None) -> ModuleRep:
    path = Path(path)
    obj = read_json(path, "module-v1")
    if hopf_path is not None and not _same_file(obj["hopf_ref"], path.parent, Path(hopf_path)):
        raise DataError(f"{path}: hopf_ref {obj['hopf_ref']!r} does not name {hopf_path}")
    return module_from_json(obj, h)


# Frobenius objects ----------------------------------------------------------------------

def frobenius_to_json(f: FrobeniusObject, module_ref: str) -> dict:
    return {
        "schema": "frobenius-v1",
        "name": f.name,
        "module_ref": module_ref,
        "mult": matrix_to_json(f.mult),
        "unit": vector_to_json(f.unit),
        "comult": matrix_to_json(f.comult),
        "counit": vector_to_json(f.counit.T),
    }


def frobenius_from_json(obj: dict, x: ModuleRep) -> FrobeniusObject:
    validate(obj, "frobenius-v1")
    n, order = x.dim, x.order
    return FrobeniusObject(
        x,
        matrix_from_json(obj["mult"], order, (n, n * n), "mult"),
        vector_from_json(obj["unit"], order, n, "unit"),
        matrix_from_json(obj["comult"], order, (n * n, n), "comult"),
        vector_from_json(obj["counit"], order, n, "counit").T,
        obj.get("name", "F"),
    )


def load_frobenius(path: str | Path, h: HopfData, hopf_path: str | Path | None = None) -> FrobeniusObject:
    path = Path(path)
    obj = read_json(path, "frobenius-v1")
    ref = obj["module_ref"]
    x = unit_object(h) if ref == UNIT_MODULE else load_module(path.parent / ref, h, hopf_path)
    return frobenius_from_json(obj, x)


# reports --------------------------------------------------------------------------------

def report_to_json(command: str, inputs: list[str], report: Report, results: dict | None = None) -> dict:
    obj = {
        "schema": "report-v1",
        "command": command,
        "inputs": list(inputs),
        "ok": report.ok,
        "checks": [c.as_dict() for c in report.checks],
    }
    if results is not None:
        obj["results"] = results
    validate(obj, "report-v1")
    return obj
