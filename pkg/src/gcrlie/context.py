"""The ambient group: GL_n, SL_n or PGL_n over an exact field.

Lie algebra elements are square matrices.  For ``SL`` they are trace-zero
matrices.  For ``PGL`` an element of pgl_n = gl_n / scalars is represented by
its canonical coset representative, the one whose bottom-right entry is 0.
Coordinates of an element are the row-major entries with the bottom-right
one dropped (for GL nothing is dropped).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapabilityError, DimensionError, FieldError
from .linalg import Matrix

GROUP_KINDS = ("GL", "SL", "PGL")


@dataclass(frozen=True)
class CapabilityProfile:
    """Which optional algorithms apply to a (group, field) pair.

    * ``radical_algorithm``: 'dickson', 'finite_field' or 'none'
    * ``char0_criteria``: the characteristic-zero three-way criterion
    * ``ideal_claims``: complete reducibility passes to ideals and to images
      of ideals under a semisimplifying cocharacter
    * ``jordan``: Jordan decompositions exist for all elements
    """

    radical_algorithm: str
    char0_criteria: bool
    ideal_claims: bool
    jordan: bool

    def as_dict(self):
        return {"radical_algorithm": self.radical_algorithm,
                "char0_criteria": self.char0_criteria,
                "ideal_claims": self.ideal_claims,
                "jordan": self.jordan}


class GroupContext:
    """Ambient group together with its Lie algebra conventions."""

    def __init__(self, kind, n, field):
        if kind not in GROUP_KINDS:
            raise FieldError(f"unknown group kind {kind!r}", pointer="/kind")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise FieldError("n must be a positive integer", pointer="/n")
        if kind in ("SL", "PGL") and n < 2:
            raise FieldError(f"{kind}_1 is trivial; use n >= 2", pointer="/n")
        self.kind = kind
        self.n = n
        self.field = field
        self.dim = n * n if kind == "GL" else n * n - 1
        self.identity = Matrix.identity(field, n)

    def __eq__(self, other):
        return (isinstance(other, GroupContext) and self.kind == other.kind
                and self.n == other.n and self.field == other.field)

    def __hash__(self):
        return hash((self.kind, self.n, self.field.key))

    def __repr__(self):
        return f"{self.kind}_{self.n}({self.field.name()})"

    def descriptor(self):
        return {"kind": self.kind, "n": self.n}

    def gl(self):
        """The GL context on the same space."""
        return self if self.kind == "GL" else GroupContext("GL", self.n, self.field)

    # -- elements -------------------------------------------------------
    def check_shape(self, x):
        if not isinstance(x, Matrix) or x.shape != (self.n, self.n):
            raise DimensionError(f"expected a {self.n}x{self.n} matrix")
        if x.field != self.field:
            raise DimensionError("matrix lives over a different field")

    def contains(self, x):
        self.check_shape(x)
        if self.kind == "SL":
            return x.trace_payload() == self.field.zero
        return True

    def normalize(self, x):
        """Canonical representative; raises for non-trace-zero input in SL."""
        self.check_shape(x)
        if self.kind == "GL":
            return x
        if self.kind == "SL":
            if x.trace_payload() != self.field.zero:
                raise DimensionError("sl_n elements must have trace 0")
            return x
        c = x.rows[-1][-1]
        if c == self.field.zero:
            return x
        return x - self.identity.scale(c)

    def coords(self, x):
        v = self.normalize(x).vec()
        return v if self.kind == "GL" else v[:-1]

    def from_coords(self, c):
        F = self.field
        n = self.n
        if self.kind == "GL":
            return Matrix.from_vec(F, n, c)
        if self.kind == "PGL":
            return Matrix.from_vec(F, n, tuple(c) + (F.zero,))
        acc = F.zero
        for i in range(n - 1):
            acc = F.add(acc, c[i * n + i])
        return Matrix.from_vec(F, n, tuple(c) + (F.neg(acc),))

    def bracket(self, x, y):
        return self.normalize(x @ y - y @ x)

    def basis(self):
        F = self.field
        out = []
        for k in range(self.dim):
            c = [F.zero] * self.dim
            c[k] = F.one
            out.append(self.from_coords(c))
        return out

    def lift_matrices(self, mats):
        """Matrices in gl_n acting on the natural module (adds I for PGL)."""
        mats = list(mats)
        if self.kind == "PGL":
            mats.append(self.identity)
        return mats

    def is_zero(self, x):
        return self.normalize(x).is_zero()

    # -- capabilities -----------------------------------------------------
    def capability_profile(self):
        F = self.field
        p = F.characteristic
        rad = F.radical_algorithm()
        char0 = p == 0
        if char0:
            ideals = True
        elif F.is_finite:
            # small characteristic breaks passage to ideals (already for GL_p);
            # we only claim it for p > n
            ideals = p > self.n
        else:
            ideals = False
        return CapabilityProfile(radical_algorithm=rad, char0_criteria=char0,
                                 ideal_claims=ideals, jordan=F.is_perfect())

    def require(self, capability):
        prof = self.capability_profile()
        if not getattr(prof, capability):
            raise CapabilityError(f"{capability} is not available for {self!r}")
        return prof
