"""JSON document format for linear representations.

Example::

    {
      "dim": 2,
      "field": "QQ",
      "matrices": [[["1", "1"], ["0", "0"]], [["1", "0"], ["0", "0"]]],
      "name": "gone-wrong",
      "q": 2,
      "u": ["1", "0"],
      "w": ["0", "1"]
    }

Scalars are always strings (``"-3"``, ``"5/7"``) so nothing passes through
floating point. :func:`dumps` is canonical: sorted keys, fixed indentation,
reduced fractions, hence byte-stable across save/load cycles.
"""

from __future__ import annotations

import json
import re
import sys
from fractions import Fraction

from .series import LinearRepresentation

FIELD_TAG = "QQ"

_RATIONAL = re.compile(r"-?[0-9]+(/[0-9]*[1-9][0-9]*)?")


class DocumentError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


def parse_rational(text, path: str) -> Fraction:
    if not isinstance(text, str):
        raise DocumentError(path, f"expected a rational string, got {type(text).__name__} {text!r}")
    if not _RATIONAL.fullmatch(text):
        raise DocumentError(path, f"malformed rational {text!r}")
    return Fraction(text)


def _int_field(doc: dict, key: str) -> int:
    if key not in doc:
        raise DocumentError(key, "missing field")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(key, f"expected an integer, got {value!r}")
    return value


def _vector(value, path: str, dim: int):
    if not isinstance(value, list):
        raise DocumentError(path, "expected a list")
    if len(value) != dim:
        raise DocumentError(path, f"expected {dim} entries, got {len(value)}")
    return tuple(parse_rational(x, f"{path}[{i}]") for i, x in enumerate(value))


def from_dict(doc) -> LinearRepresentation:
    if not isinstance(doc, dict):
        raise DocumentError("", "document must be a JSON object")
    field = doc.get("field", FIELD_TAG)
    if field != FIELD_TAG:
        raise DocumentError("field", f"unsupported field {field!r}; only {FIELD_TAG!r}")
    q = _int_field(doc, "q")
    if q < 2:
        raise DocumentError("q", f"alphabet size must be >= 2, got {q}")
    dim = _int_field(doc, "dim")
    if dim < 0:
        raise DocumentError("dim", f"dimension must be non-negative, got {dim}")
    for key in ("u", "matrices", "w"):
        if key not in doc:
            raise DocumentError(key, "missing field")
    u = _vector(doc["u"], "u", dim)
    w = _vector(doc["w"], "w", dim)
    mats = doc["matrices"]
    if not isinstance(mats, list):
        raise DocumentError("matrices", "expected a list")
    if len(mats) != q:
        raise DocumentError("matrices", f"expected {q} matrices, got {len(mats)}")
    matrices = []
    for a, m in enumerate(mats):
        path = f"matrices[{a}]"
        if not isinstance(m, list) or len(m) != dim:
            raise DocumentError(path, f"expected {dim} rows")
        matrices.append(tuple(_vector(row, f"{path}[{i}]", dim) for i, row in enumerate(m)))
    for key in ("name", "description"):
        if not isinstance(doc.get(key, ""), str):
            raise DocumentError(key, "expected a string")
    return LinearRepresentation(
        q, u, tuple(matrices), w, doc.get("name", ""), doc.get("description", "")
    )


def to_dict(rep: LinearRepresentation) -> dict:
    doc = {
        "field": FIELD_TAG,
        "q": rep.q,
        "dim": rep.dim,
        "u": [str(x) for x in rep.u],
        "matrices": [[[str(x) for x in row] for row in m] for m in rep.matrices],
        "w": [str(x) for x in rep.w],
    }
    if rep.name:
        doc["name"] = rep.name
    if rep.description:
        doc["description"] = rep.description
    return doc


def loads(text: str) -> LinearRepresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("", f"invalid JSON: {exc}") from exc
    return from_dict(doc)


def dumps(rep: LinearRepresentation) -> str:
    return json.dumps(to_dict(rep), sort_keys=True, indent=2) + "\n"


def load(path: str) -> LinearRepresentation:
    if path == "-":
        return loads(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def save(rep: LinearRepresentation, path: str) -> None:
    if path == "-":
        sys.stdout.write(dumps(rep))
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(rep))
