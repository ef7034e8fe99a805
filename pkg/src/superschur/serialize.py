"""JSON documents for algebras and extensions.

Algebra document::

    {"field": "rational" | {"prime": p},
     "basis": [{"name": "u1", "parity": 0}, ...],
     "brackets": [{"left": i, "right": j, "value": [[k, "num/den"], ...]}, ...]}

Only entries with left <= right are written; brackets are sorted by
(left, right) and values by index, and scalars are reduced fraction strings
(residues for prime fields), so ``dumps(load(text)) == text`` for any
canonical document.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Tuple

from .algebra import HomSpec, LieSuperalgebra, StructureError
from .core import RATIONAL, Field, HostMismatch, ParityError
from .extensions import ExtensionSpec

__all__ = [
    "DocumentError",
    "algebra_to_doc",
    "doc_to_algebra",
    "extension_to_doc",
    "doc_to_extension",
    "dumps",
    "parse_json",
]


class DocumentError(ValueError):
    """Malformed or inconsistent document."""


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None


def _field_doc(field: Field):
    return "rational" if field.prime is None else {"prime": field.prime}


def _doc_field(raw) -> Field:
    if raw == "rational":
        return RATIONAL
    if isinstance(raw, dict) and set(raw) == {"prime"} and isinstance(raw["prime"], int):
        try:
            return Field(raw["prime"])
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
    raise DocumentError(f"field must be \"rational\" or {{\"prime\": p}}, got {raw!r}")


def _scalar(field: Field, s):
    try:
        return field.parse(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(str(exc)) from None


def _int(x, what: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise DocumentError(f"{what} must be an integer, got {x!r}")
    return x


def algebra_to_doc(L: LieSuperalgebra) -> Dict[str, Any]:
    brackets = []
    for (i, j), val in L.canonical_brackets().items():
        brackets.append({"left": i, "right": j,
                         "value": [[k, L.field.format(c)] for k, c in sorted(val.items())]})
    return {
        "field": _field_doc(L.field),
        "basis": [{"name": nm, "parity": p} for nm, p in zip(L.names, L.parities)],
        "brackets": brackets,
    }


def doc_to_algebra(doc, strict: bool = True) -> LieSuperalgebra:
    """Load an algebra document.

    With ``strict=False`` an entry and an explicitly given mirror that
    disagree are both kept as written, so :func:`~superschur.algebra.validate`
    can report the skew violation instead of the load failing.
    """
    if not isinstance(doc, dict) or not {"field", "basis", "brackets"} <= set(doc):
        raise DocumentError("algebra document needs keys field, basis, brackets")
    field = _doc_field(doc["field"])
    names, parities = [], []
    if not isinstance(doc["basis"], list):
        raise DocumentError("basis must be a list")
    for b in doc["basis"]:
        if not isinstance(b, dict) or not isinstance(b.get("name"), str) or b.get("parity") not in (0, 1):
            raise DocumentError(f"bad basis entry {b!r}")
        names.append(b["name"])
        parities.append(b["parity"])
    if len(set(names)) != len(names):
        raise DocumentError("basis names must be distinct")
    n = len(names)
    entries: Dict[Tuple[int, int], Dict[int, Any]] = {}
    if not isinstance(doc["brackets"], list):
        raise DocumentError("brackets must be a list")
    for e in doc["brackets"]:
        if not isinstance(e, dict) or set(e) != {"left", "right", "value"}:
            raise DocumentError(f"bad bracket entry {e!r}")
        i, j = _int(e["left"], "left"), _int(e["right"], "right")
        if not (0 <= i < n and 0 <= j < n):
            raise DocumentError(f"bracket index out of range: ({i}, {j})")
        if (i, j) in entries:
            raise DocumentError(f"duplicate bracket entry ({i}, {j})")
        val: Dict[int, Any] = {}
        if not isinstance(e["value"], list):
            raise DocumentError("bracket value must be a list of [index, scalar] pairs")
        for item in e["value"]:
            if not isinstance(item, list) or len(item) != 2:
                raise DocumentError(f"bad bracket value item {item!r}")
            k = _int(item[0], "value index")
            if not 0 <= k < n:
                raise DocumentError(f"value index out of range: {k}")
            if k in val:
                raise DocumentError(f"duplicate value index {k} in ({i}, {j})")
            val[k] = _scalar(field, item[1])
        entries[i, j] = val
    try:
        if strict:
            return LieSuperalgebra.from_brackets(names, parities, entries, field)
        mirrored = LieSuperalgebra.from_brackets(
            names, parities, {k: v for k, v in entries.items()
                              if k[0] <= k[1] or (k[1], k[0]) not in entries}, field)
        table = dict(mirrored.table)
        for (i, j), v in entries.items():
            if i > j and (j, i) in entries:
                if v:
                    table[i, j] = v
                else:
                    table.pop((i, j), None)
        return LieSuperalgebra(tuple(names), tuple(parities), table, field)
    except StructureError as exc:
        raise DocumentError(str(exc)) from None


def _vec_doc(field: Field, v) -> List[str]:
    return [field.format(c) for c in v]


def extension_to_doc(e: ExtensionSpec) -> Dict[str, Any]:
    F = e.total.field
    return {
        "total": algebra_to_doc(e.total),
        "kernel": [_vec_doc(F, v) for v in e.kernel.basis],
        "base": algebra_to_doc(e.base),
        "projection": [_vec_doc(F, row) for row in e.projection.matrix],
    }


def doc_to_extension(doc) -> ExtensionSpec:
    if not isinstance(doc, dict) or set(doc) != {"total", "kernel", "base", "projection"}:
        raise DocumentError("extension document needs keys total, kernel, base, projection")
    total = doc_to_algebra(doc["total"])
    base = doc_to_algebra(doc["base"])
    if total.field != base.field:
        raise DocumentError("total and base are over different fields")
    F = total.field
    vecs = []
    if not isinstance(doc["kernel"], list):
        raise DocumentError("kernel must be a list")
    for item in doc["kernel"]:
        if isinstance(item, int) and not isinstance(item, bool):
            if not 0 <= item < total.dim:
                raise DocumentError(f"kernel index out of range: {item}")
            vecs.append(total.unit(item))
        elif isinstance(item, list) and len(item) == total.dim:
            vecs.append(tuple(_scalar(F, s) for s in item))
        else:
            raise DocumentError(f"bad kernel entry {item!r}")
    try:
        kernel = total.span(vecs)
    except ParityError as exc:
        raise DocumentError(f"kernel vector is not homogeneous: {exc}") from None
    rows = doc["projection"]
    if not isinstance(rows, list) or len(rows) != base.dim or any(
            not isinstance(r, list) or len(r) != total.dim for r in rows):
        raise DocumentError("projection must be a base.dim x total.dim matrix")
    matrix = tuple(tuple(_scalar(F, s) for s in r) for r in rows)
    try:
        return ExtensionSpec(total, kernel, base, HomSpec(total, base, matrix))
    except HostMismatch as exc:
        raise DocumentError(str(exc)) from None
