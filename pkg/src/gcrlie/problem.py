"""Problem files: one JSON schema shared by every command.

    {"field": <descriptor>, "group": {"kind": "GL|SL|PGL", "n": int},
     "generators": [<matrix>], "tuple": [<matrix>],
     "options": {"seed": int, "budget": int}}

Matrices are arrays of arrays of element strings.  Errors are reported as
``SchemaError`` with a JSON pointer to the offending member.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .context import GroupContext
from .errors import FieldError, GcrError, ParseError
from .fields import field_from_descriptor
from .linalg import Matrix

KNOWN_KEYS = {"field", "group", "generators", "tuple", "options"}
KNOWN_OPTIONS = {"seed", "budget"}


class SchemaError(GcrError):
    def __init__(self, message, pointer):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer


@dataclass
class Problem:
    context: GroupContext
    generators: list
    tuple: list = None
    seed: int = 0
    budget: int = 256
    warnings: list = field(default_factory=list)

    @property
    def field(self):
        return self.context.field


def _matrix(F, n, data, pointer):
    if not isinstance(data, list) or len(data) != n:
        raise SchemaError(f"expected {n} rows", pointer)
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(f"expected {n} entries", f"{pointer}/{i}")
        out = []
        for j, entry in enumerate(row):
            if isinstance(entry, int) and not isinstance(entry, bool):
                entry = str(entry)
            try:
                out.append(F.parse(entry).value)
            except (ParseError, FieldError) as exc:
                raise SchemaError(str(exc), f"{pointer}/{i}/{j}") from exc
        rows.append(out)
    return Matrix.from_payload(F, rows)


def _int_option(opts, key, default, warnings):
    if key not in opts:
        return default
    v = opts[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise SchemaError("must be a non-negative integer", f"/options/{key}")
    return v


def load_problem(data):
    """Validate a decoded problem document and build its objects."""
    if not isinstance(data, dict):
        raise SchemaError("problem must be a JSON object", "")
    warnings = [f"ignoring unknown member /{k}" for k in sorted(data) if k not in KNOWN_KEYS]
    if "field" not in data:
        raise SchemaError("missing field descriptor", "/field")
    try:
        F = field_from_descriptor(data["field"])
    except FieldError as exc:
        raise SchemaError(str(exc), "/field" + exc.pointer) from exc
    group = data.get("group")
    if not isinstance(group, dict):
        raise SchemaError("missing group object", "/group")
    try:
        ctx = GroupContext(group.get("kind"), group.get("n"), F)
    except FieldError as exc:
        raise SchemaError(str(exc), "/group" + exc.pointer) from exc
    n = ctx.n
    gens_data = data.get("generators", [])
    if not isinstance(gens_data, list):
        raise SchemaError("generators must be a list of matrices", "/generators")
    gens = [_matrix(F, n, m, f"/generators/{k}") for k, m in enumerate(gens_data)]
    for k, g in enumerate(gens):
        if not ctx.contains(g):
            raise SchemaError("generator is not in Lie(G)", f"/generators/{k}")
    tup = None
    if "tuple" in data:
        if not isinstance(data["tuple"], list):
            raise SchemaError("tuple must be a list of matrices", "/tuple")
        tup = [_matrix(F, n, m, f"/tuple/{k}") for k, m in enumerate(data["tuple"])]
    opts = data.get("options", {})
    if not isinstance(opts, dict):
        raise SchemaError("options must be an object", "/options")
    warnings += [f"ignoring unknown option /options/{k}" for k in sorted(opts) if k not in KNOWN_OPTIONS]
    seed = _int_option(opts, "seed", 0, warnings)
    budget = _int_option(opts, "budget", 256, warnings)
    return Problem(ctx, gens, tup, seed, budget, warnings)
