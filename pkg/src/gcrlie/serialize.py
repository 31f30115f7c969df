"""Conversion of results into JSON-ready structures.

Matrices become arrays of arrays of element strings, subspaces their echelon
bases, flags their steps, cocharacters ``{"frame", "weights"}``.
"""

from __future__ import annotations

import dataclasses

from .fields import FieldElement
from .groups import Cocharacter
from .linalg import Flag, Matrix, Subspace
from .liealg import LieSubalgebra, MatrixAlgebra
from .oracle import BuildingSubcomplex
from .polynomials import Polynomial
from .verdict import Verdict


def _vector(F, v):
    return [F.format(x) for x in v]


def to_jsonable(obj, field=None):
    """Recursively convert package objects to JSON-ready values."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Verdict):
        return {"verdict": obj.value, "status": obj.status, "provenance": obj.provenance,
                "certificate": to_jsonable(obj.certificate, field)}
    if isinstance(obj, Matrix):
        return obj.to_strings()
    if isinstance(obj, FieldElement):
        return str(obj)
    if isinstance(obj, Polynomial):
        return obj.format("X")
    if isinstance(obj, Subspace):
        return {"dim": obj.dim, "basis": [_vector(obj.field, v) for v in obj.basis]}
    if isinstance(obj, Flag):
        return {"dims": obj.dims(), "steps": [to_jsonable(V) for V in obj.steps]}
    if isinstance(obj, Cocharacter):
        return {"frame": obj.frame.to_strings(), "weights": list(obj.weights)}
    if isinstance(obj, LieSubalgebra):
        return {"dim": obj.dim, "basis": [b.to_strings() for b in obj.basis]}
    if isinstance(obj, MatrixAlgebra):
        return {"dim": obj.dim, "basis": [b.to_strings() for b in obj.basis]}
    if isinstance(obj, BuildingSubcomplex):
        return obj.as_dict()
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name), field) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v, field) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x, field) for x in obj]
    return str(obj)
