"""JSON form of an arrangement.

    {"schema": 1, "n": 8, "l": 2, "count": 21, "valid": true,
     "diagonals": [{"x": 0, "y": 0}, ...]}

Anchors are written in (y, x) order.  ``count`` and ``valid`` are derived
fields: they are recomputed on every dump and checked on load.
"""

from __future__ import annotations

import json
from typing import Optional

from .grid_core import Arrangement, Diagonal, GridSpec, Verdict, validate

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    pass


def arrangement_to_dict(a: Arrangement, verdict: Optional[Verdict] = None) -> dict:
    if verdict is None:
        verdict = validate(a)
    return {
        "schema": SCHEMA_VERSION,
        "n": a.grid.n,
        "l": a.grid.l,
        "count": len(a),
        "valid": verdict.ok,
        "diagonals": [{"x": d.x, "y": d.y} for d in a.diagonals],
    }


def dumps(a: Arrangement, verdict: Optional[Verdict] = None) -> str:
    return json.dumps(arrangement_to_dict(a, verdict), separators=(",", ":")) + "\n"


def loads(text: str) -> Arrangement:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    if doc.get("schema") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema {doc.get('schema')!r}")
    try:
        grid = GridSpec(doc["n"], doc["l"])
        diagonals = tuple(Diagonal(item["x"], item["y"], grid.l) for item in doc["diagonals"])
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed arrangement: {exc!r}") from exc
    a = Arrangement(grid, diagonals)
    if "count" in doc and doc["count"] != len(a):
        raise SchemaError(f"count {doc['count']} does not match {len(a)} listed diagonals")
    return a
