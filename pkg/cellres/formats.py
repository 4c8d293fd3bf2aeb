# formats.py
"""JSON documents read and written by the command line.

A monomial is an exponent array (monomial strings are accepted on input),
a ring is {"variables": [...], "field": "Q" | "Fp:<p>"}, a complex is
{"ring": ..., "cells": [{"id", "dim", "label", "boundary"}]} and a polyhedron
is {"vertices": [[...]], "rays": [[...]]} with "p/q" rational strings.
"""
import json
import logging
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError

from cellres.complex_core import Cell, CellComplex
from cellres.exceptions import ParseError
from cellres.monomials import (
    CoefficientField,
    Monomial,
    RingDescriptor,
    ideal_from_generators,
    parse_monomial,
)
from cellres.polyhedral import Polyhedron, parse_point_key, render_point, render_rational

logger = logging.getLogger(__name__)

MonomialJson = Union[List[int], str]


class RingModel(BaseModel):
    variables: List[str]
    field: str = "Q"


class IdealModel(BaseModel):
    ring: RingModel
    generators: List[MonomialJson]


class CellModel(BaseModel):
    id: str
    dim: int
    label: Optional[MonomialJson] = None
    boundary: List[Tuple[str, int]] = []


class ComplexModel(BaseModel):
    ring: RingModel
    cells: List[CellModel]


class PolyhedronModel(BaseModel):
    vertices: List[List[Union[int, str]]]
    rays: List[List[Union[int, str]]] = []


class PolyhedraModel(BaseModel):
    ring: Optional[RingModel] = None
    polyhedra: List[PolyhedronModel]


def _validate(model, data, what):
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise ParseError(f"invalid {what} document at {where or 'top level'}: {first['msg']}") from None


def loads(text, what="JSON"):
    """Decode a JSON text, reporting decode errors as ParseError"""
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed {what}: {e}") from None


def dumps(data):
    return json.dumps(data, indent=2)


def ring_from_model(model):
    return RingDescriptor(tuple(model.variables), CoefficientField.parse(model.field))


def ring_from_dict(data):
    return ring_from_model(_validate(RingModel, data, "ring"))


def ring_to_dict(ring):
    return {"variables": list(ring.variables), "field": ring.field.render()}


def monomial_from_json(value, ring):
    """Exponent array or monomial string"""
    if isinstance(value, str):
        return parse_monomial(value, ring)
    if len(value) != ring.nvars:
        raise ParseError(f"exponent array {value} has length {len(value)}, ring has {ring.nvars} variables")
    if any(e < 0 for e in value):
        raise ParseError(f"negative exponent in {value}")
    return Monomial(ring, tuple(value))


def monomial_to_json(m):
    return list(m.exponents)


def ideal_from_dict(data):
    model = _validate(IdealModel, data, "ideal")
    ring = ring_from_model(model.ring)
    if not model.generators:
        raise ParseError("ideal document has no generators")
    return ideal_from_generators(model.generators, lambda g: monomial_from_json(g, ring))


def ideal_to_dict(ideal):
    return {
        "ring": ring_to_dict(ideal.ring),
        "generators": [monomial_to_json(g) for g in ideal.generators],
    }


def complex_from_dict(data, check=True):
    """Decode a complex document; validation errors raise ComplexValidationError when check is set"""
    model = _validate(ComplexModel, data, "complex")
    ring = ring_from_model(model.ring)
    cells = [
        Cell(
            c.id,
            c.dim,
            tuple((target, degree) for target, degree in c.boundary),
            None if c.label is None else monomial_from_json(c.label, ring),
        )
        for c in model.cells
    ]
    return CellComplex.from_records(ring, cells, check=check)


def complex_to_dict(complex_):
    return {
        "ring": ring_to_dict(complex_.ring),
        "cells": [
            {
                "id": c.id,
                "dim": c.dim,
                "label": monomial_to_json(c.label),
                "boundary": [[t, d] for t, d in c.boundary],
            }
            for c in complex_
        ],
    }


def _polyhedron(model):
    return Polyhedron(tuple(tuple(v) for v in model.vertices), tuple(tuple(r) for r in model.rays))


def polyhedra_from_dict(data):
    """Decode a polyhedron, a list of polyhedra, or {"ring", "polyhedra"}

    Returns:
        tuple: (RingDescriptor or None, list of Polyhedron, whether a list was given)
    """
    if isinstance(data, list):
        models = [_validate(PolyhedronModel, item, "polyhedron") for item in data]
        return None, [_polyhedron(m) for m in models], True
    if isinstance(data, dict) and "polyhedra" in data:
        model = _validate(PolyhedraModel, data, "polyhedra")
        ring = ring_from_model(model.ring) if model.ring else None
        return ring, [_polyhedron(m) for m in model.polyhedra], True
    return None, [_polyhedron(_validate(PolyhedronModel, data, "polyhedron"))], False


def polyhedron_to_dict(polyhedron):
    return {
        "vertices": [[render_rational(x) for x in v] for v in polyhedron.vertices],
        "rays": [[render_rational(x) for x in r] for r in polyhedron.rays],
    }


def _string_map(data, what):
    if not isinstance(data, dict) or not all(isinstance(v, str) for v in data.values()):
        raise ParseError(f"{what} must map keys to monomial strings")
    return data


def point_labels_from_dict(data, ring):
    """Labels file for frompoly: {"5,1": "a^5*b", ...}"""
    return {
        parse_point_key(key): parse_monomial(text, ring)
        for key, text in _string_map(data, "labels file").items()
    }


def point_labels_to_dict(labels):
    return {render_point(p): m.render() for p, m in labels.items()}


def vertex_labels_from_dict(data, ring):
    """Labels file for relabel: {"v1": "x^2", ...}"""
    return {
        key: parse_monomial(text, ring)
        for key, text in _string_map(data, "labels file").items()
    }


def poset_to_dict(poset):
    return {"cells": list(poset.cell_ids), "matrix": [list(row) for row in poset.matrix]}


def violations_to_dict(violations):
    return {
        "valid": not violations,
        "violations": [{"rule": v.rule, "cells": list(v.cells), "message": v.message} for v in violations],
    }
