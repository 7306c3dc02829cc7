"""Canonical machine output: stable float formatting and JSON/CSV writers.

Every number leaving the package goes through :func:`fmt12`, which renders
floats with 12 significant digits. Identical inputs therefore serialize to
byte-identical documents, which is what the determinism guarantees rest on.
"""

import hashlib
import json
import math


def fmt12(x):
    """Format a float with 12 significant digits (fixed across runs)."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value cannot be serialized: {x!r}")
    if x == 0.0:
        return "0"  # avoid "-0"
    return format(x, ".12g")


def canonical_json(obj):
    """Serialize to a compact JSON string with fmt12 floats.

    Dict insertion order is preserved; callers are responsible for building
    dictionaries in a stable field order.
    """
    parts = []
    _write(obj, parts)
    return "".join(parts)


def _write(obj, parts):
    if obj is None:
        parts.append("null")
    elif obj is True:
        parts.append("true")
    elif obj is False:
        parts.append("false")
    elif isinstance(obj, str):
        parts.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, int):
        parts.append(str(obj))
    elif isinstance(obj, float):
        parts.append(fmt12(obj))
    elif isinstance(obj, dict):
        parts.append("{")
        first = True
        for key, value in obj.items():
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            if not first:
                parts.append(",")
            first = False
            parts.append(json.dumps(key, ensure_ascii=False))
            parts.append(":")
            _write(value, parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple)):
        parts.append("[")
        for i, value in enumerate(obj):
            if i:
                parts.append(",")
            _write(value, parts)
        parts.append("]")
    else:
        # numpy scalars and similar duck-typed numbers
        if hasattr(obj, "item"):
            _write(obj.item(), parts)
        else:
            raise TypeError(f"cannot serialize {type(obj).__name__}")


def csv_row(values):
    """One CSV row; numbers via fmt12, strings quoted only when needed."""
    cells = []
    for v in values:
        if isinstance(v, float):
            cells.append(fmt12(v))
        elif isinstance(v, int):
            cells.append(str(v))
        else:
            s = str(v)
            if any(c in s for c in ',"\n'):
                s = '"' + s.replace('"', '""') + '"'
            cells.append(s)
    return ",".join(cells)


def sha256_text(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
