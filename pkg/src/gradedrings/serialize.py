"""JSON persistence for graded algebras.

The on-disk format is deliberately sparse and diff-friendly:

    {
      "field": {"type": "Q"} | {"type": "GF", "p": 2},
      "group": {"names": ["0", "1"], "table": [[0, 1], [1, 0]]},
      "components": {"0": 5, "1": 4},
      "structure": [[g, i, h, j, [c0, c1, ...]], ...],
      "unit": [c0, ...],
      "meta": {...}          # optional, free-form
    }

Structure rows list the nonzero basis products b_{g,i} * b_{h,j} as
coefficient vectors over the target component R_{gh}; omitted rows mean the
product is zero.  Rows are emitted sorted by (g, i, h, j).  Rationals are
written as "num/den" strings so nothing ever passes through floats; GF(p)
scalars are plain integers in [0, p).

Serialization is canonical: dumps(loads(text)) == text for any text this
module produced, which is what lets the CLI promise byte-identical output
for a fixed seed.
"""

import json
from fractions import Fraction

from .algebra import GradedAlgebra
from .errors import InvalidInput
from .groups import FiniteGroup
from .linalg import GF, Field


def scalar_to_json(field: Field, x):
    """Encode one scalar: int for GF(p), "num/den" string for Q."""
    if field.p:
        return int(x)
    frac = Fraction(x)
    return f"{frac.numerator}/{frac.denominator}"


def scalar_from_json(field: Field, v):
    if field.p:
        if not isinstance(v, int):
            raise InvalidInput(f"GF({field.p}) scalar must be an integer, got {v!r}")
        return field.coerce(v)
    if isinstance(v, str):
        try:
            return field.coerce(Fraction(v))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"bad rational scalar {v!r}") from exc
    if isinstance(v, int):
        return field.coerce(v)
    raise InvalidInput(f"rational scalar must be a string or integer, got {v!r}")


def vector_to_json(field: Field, vec):
    return [scalar_to_json(field, c) for c in vec]


def vector_from_json(field: Field, vec):
    if not isinstance(vec, list):
        raise InvalidInput("coefficient vector must be a list")
    return tuple(scalar_from_json(field, c) for c in vec)


def _field_to_obj(field: Field) -> dict:
    if field.p:
        return {"type": "GF", "p": field.p}
    return {"type": "Q"}


def _field_from_obj(obj) -> Field:
    if not isinstance(obj, dict) or "type" not in obj:
        raise InvalidInput("field entry must be an object with a 'type'")
    if obj["type"] == "Q":
        return Field(0)
    if obj["type"] == "GF":
        p = obj.get("p")
        if not isinstance(p, int):
            raise InvalidInput("GF field entry needs an integer 'p'")
        return GF(p)
    raise InvalidInput(f"unknown field type {obj['type']!r}")


def algebra_to_obj(alg: GradedAlgebra) -> dict:
    names = alg.group.names
    if len(set(names)) != len(names):
        raise InvalidInput("group element names must be unique to serialize")
    obj = {
        "field": _field_to_obj(alg.field),
        "group": {
            "names": list(names),
            "table": [list(row) for row in alg.group.table],
        },
        "components": {names[g]: alg.comp_dims[g] for g in range(alg.group.order)},
        "structure": [
            [g, i, h, j, vector_to_json(alg.field, coeffs)]
            for (g, i, h, j), coeffs in alg.structure_items()
        ],
        "unit": vector_to_json(alg.field, alg.unit_coeffs),
    }
    if alg.meta:
        obj["meta"] = alg.meta
    return obj


def algebra_from_obj(obj) -> GradedAlgebra:
    if not isinstance(obj, dict):
        raise InvalidInput("algebra document must be a JSON object")
    try:
        field = _field_from_obj(obj["field"])
        gobj = obj["group"]
        names = gobj["names"]
        table = gobj["table"]
        comps = obj["components"]
        rows = obj["structure"]
        unit = obj["unit"]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"algebra document is missing a required entry: {exc}") from exc
    group = FiniteGroup(names, table)
    try:
        comp_dims = [comps[name] for name in group.names]
    except (KeyError, TypeError) as exc:
        raise InvalidInput("components must map every group element name to a dimension") from exc
    structure = {}
    for row in rows:
        if not (isinstance(row, list) and len(row) == 5):
            raise InvalidInput(f"structure row must be [g, i, h, j, coeffs], got {row!r}")
        g, i, h, j, coeffs = row
        key = (g, i, h, j)
        if key in structure:
            raise InvalidInput(f"duplicate structure row for {key}")
        structure[key] = vector_from_json(field, coeffs)
    meta = obj.get("meta")
    return GradedAlgebra(
        field,
        group,
        comp_dims,
        structure,
        vector_from_json(field, unit),
        meta=meta,
    )


def algebra_to_json(alg: GradedAlgebra) -> str:
    return json.dumps(algebra_to_obj(alg), indent=2, sort_keys=True) + "\n"


def algebra_from_json(text: str) -> GradedAlgebra:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"not valid JSON: {exc}") from exc
    return algebra_from_obj(obj)


def save_algebra(alg: GradedAlgebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(algebra_to_json(alg))


def load_algebra(path) -> GradedAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    return algebra_from_json(text)
