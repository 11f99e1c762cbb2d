"""RingFile: the JSON document format for a single ring.

Top-level fields are written in a fixed order (formatVersion, name, order,
groupModuli, mulTable, elementLabels, provenance); nested objects use
sorted keys.  Each table row sits on one line so files diff cleanly.
Addition is implied by groupModuli via mixed-radix indexing.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import FormatError
from .groups import AdditiveGroup
from .iso import coordinatize
from .ring import FiniteRing, validate

FORMAT_VERSION = 1
FIELDS = ("formatVersion", "name", "order", "groupModuli", "mulTable", "elementLabels", "provenance")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    return obj


def ring_to_dict(R: FiniteRing) -> dict:
    """RingFile fields as a plain dict; table rings are coordinatized first."""
    if R.group is None:
        R = coordinatize(R).ring
    d = {
        "formatVersion": FORMAT_VERSION,
        "name": R.name,
        "order": R.order,
        "groupModuli": list(R.group.moduli),
        "mulTable": R.mul_table.tolist(),
    }
    if R.labels is not None:
        d["elementLabels"] = list(R.labels)
    if R.provenance:
        d["provenance"] = _jsonable(R.provenance)
    return d


def _dump(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(", ", ": "), ensure_ascii=False)


def serialize_ring(R: FiniteRing) -> str:
    d = ring_to_dict(R)
    lines = ["{"]
    items = [(k, d[k]) for k in FIELDS if k in d]
    for pos, (key, value) in enumerate(items):
        comma = "," if pos < len(items) - 1 else ""
        if key == "mulTable":
            rows = ",\n".join("    " + _dump(row) for row in value)
            lines.append(f'  "{key}": [\n{rows}\n  ]{comma}')
        else:
            lines.append(f'  "{key}": {_dump(value)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _require(doc: dict, key: str, kind):
    if key not in doc:
        raise FormatError(key, "missing field")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FormatError(key, f"expected {kind.__name__}")
    return value


def ring_from_dict(doc: dict, *, check: bool = True) -> FiniteRing:
    """Build a ring from parsed RingFile fields.

    Raises FormatError for malformed documents and, when `check` is set,
    the first RingAxiomError for tables that are not rings.
    """
    if not isinstance(doc, dict):
        raise FormatError("<root>", "expected a JSON object")
    unknown = set(doc) - set(FIELDS)
    if unknown:
        raise FormatError(sorted(unknown)[0], "unknown field")
    version = _require(doc, "formatVersion", int)
    if version != FORMAT_VERSION:
        raise FormatError("formatVersion", f"unsupported version {version}")
    name = _require(doc, "name", str)
    order = _require(doc, "order", int)
    moduli = _require(doc, "groupModuli", list)
    if not all(isinstance(d, int) and not isinstance(d, bool) for d in moduli):
        raise FormatError("groupModuli", "entries must be integers")
    try:
        group = AdditiveGroup(tuple(moduli))
    except ValueError as e:
        raise FormatError("groupModuli", str(e)) from None
    if list(group.moduli) != moduli:
        raise FormatError("groupModuli", "moduli must be sorted by (prime, exponent)")
    if group.order != order:
        raise FormatError("order", f"order {order} != product of groupModuli {group.order}")
    table = _require(doc, "mulTable", list)
    if len(table) != order:
        raise FormatError("mulTable", f"expected {order} rows, got {len(table)}")
    for r, row in enumerate(table):
        if not isinstance(row, list) or len(row) != order:
            raise FormatError(f"mulTable[{r}]", f"expected a row of {order} entries")
        for c, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool):
                raise FormatError(f"mulTable[{r}][{c}]", "entry is not an integer")
            if not 0 <= x < order:
                raise FormatError(f"mulTable[{r}][{c}]", f"entry {x} outside 0..{order - 1}")
    labels = doc.get("elementLabels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != order or not all(isinstance(s, str) for s in labels):
            raise FormatError("elementLabels", f"expected {order} strings")
    prov = doc.get("provenance", {})
    if not isinstance(prov, dict):
        raise FormatError("provenance", "expected an object")
    R = FiniteRing.from_group(group, np.array(table, dtype=np.int64), name=name, provenance=prov, labels=labels)
    if check:
        validate(R)
    return R


def parse_ring(text: str, *, check: bool = True) -> FiniteRing:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"line {e.lineno}", e.msg) from None
    return ring_from_dict(doc, check=check)


def read_ring(path, *, check: bool = True) -> FiniteRing:
    with open(path, encoding="utf-8") as fh:
        return parse_ring(fh.read(), check=check)


def write_ring(R: FiniteRing, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_ring(R))
