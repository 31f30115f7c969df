"""Lie subalgebras of gl_n, sl_n and pgl_n and associative matrix algebras."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .context import GroupContext
from .errors import CapabilityError, DimensionError, VerificationError
from .linalg import Flag, Matrix, SpanBuilder, Subspace, kernel_payload, vec_combo


class LieSubalgebra:
    """A subalgebra of Lie(G), stored as a subspace of coordinate vectors.

    ``generators`` records the tuple the algebra was built from (defaults to
    the echelon basis).
    """

    def __init__(self, context, mats, generators=None, check=True):
        self.context = context
        self.field = context.field
        self.n = context.n
        mats = [context.normalize(m) for m in mats]
        self.span = Subspace(self.field, context.dim, [context.coords(m) for m in mats])
        self.basis = [context.from_coords(v) for v in self.span.basis]
        self.generators = ([context.normalize(g) for g in generators]
                           if generators is not None else list(self.basis))
        if check and not self._closed():
            raise VerificationError("span is not closed under the bracket")

    @classmethod
    def _from_span(cls, context, span, generators=None):
        obj = cls.__new__(cls)
        obj.context = context
        obj.field = context.field
        obj.n = context.n
        obj.span = span
        obj.basis = [context.from_coords(v) for v in span.basis]
        obj.generators = list(generators) if generators is not None else list(obj.basis)
        return obj

    def _closed(self):
        b = self.basis
        for i in range(len(b)):
            for j in range(i + 1, len(b)):
                if not self.contains(self.context.bracket(b[i], b[j])):
                    return False
        return True

    @property
    def dim(self):
        return self.span.dim

    def __len__(self):
        return self.span.dim

    def contains(self, x):
        return self.span.contains(self.context.coords(x))

    def __contains__(self, x):
        return self.contains(x)

    def coefficients(self, x):
        """Coordinates of x with respect to ``self.basis``."""
        return self.span.coordinates(self.context.coords(x))

    def combine(self, coeffs):
        return self.context.from_coords(self.span.combine(coeffs))

    def __eq__(self, other):
        return (isinstance(other, LieSubalgebra) and self.context == other.context
                and self.span == other.span)

    def __hash__(self):
        return hash((self.context, self.span))

    def is_subalgebra_of(self, other):
        return self.span.is_subspace_of(other.span)

    __le__ = is_subalgebra_of

    def __repr__(self):
        return f"LieSubalgebra(dim={self.dim}, in {self.context!r})"

    def random_element(self, rng):
        F = self.field
        return self.combine([F.random(rng) for _ in range(self.dim)])

    def action_matrices(self):
        """Matrices on the natural module spanning the associative action (with I for PGL)."""
        return self.context.lift_matrices(self.basis)

    def is_abelian(self):
        b = self.basis
        return all(self.context.is_zero(self.context.bracket(b[i], b[j]))
                   for i in range(len(b)) for j in range(i + 1, len(b)))


def subalgebra_from_span(context, mats, generators=None):
    """Wrap a span already known to be bracket-closed (closure is still verified)."""
    return LieSubalgebra(context, mats, generators=generators, check=True)


def bracket_closure(context, gens):
    """Smallest subalgebra containing ``gens``."""
    gens = [context.normalize(g) for g in gens]
    F = context.field
    sb = SpanBuilder(F, context.dim)
    basis = []
    for g in gens:
        if sb.add(context.coords(g)):
            basis.append(g)
    i = 0
    # every new element is bracketed with every element found so far
    while i < len(basis):
        x = basis[i]
        for j in range(i):
            z = context.bracket(basis[j], x)
            if sb.add(context.coords(z)):
                basis.append(z)
        i += 1
    return LieSubalgebra._from_span(context, sb.subspace(), generators=gens)


def bracket_span(context, A, B):
    """Span of [a, b] for a in A, b in B (given as LieSubalgebras or matrix lists)."""
    a_list = A.basis if isinstance(A, LieSubalgebra) else list(A)
    b_list = B.basis if isinstance(B, LieSubalgebra) else list(B)
    vecs = [context.coords(context.bracket(a, b)) for a in a_list for b in b_list]
    return Subspace(context.field, context.dim, vecs)


def ideal_generated(h, elements):
    """Smallest ideal of h containing ``elements``."""
    ctx = h.context
    sb = SpanBuilder(ctx.field, ctx.dim)
    queue = []
    for e in elements:
        e = ctx.normalize(e)
        if not h.contains(e):
            raise DimensionError("element is not in the algebra")
        if sb.add(ctx.coords(e)):
            queue.append(e)
    found = list(queue)
    while queue:
        x = queue.pop()
        for b in h.basis:
            z = ctx.bracket(b, x)
            if sb.add(ctx.coords(z)):
                queue.append(z)
                found.append(z)
    return LieSubalgebra._from_span(ctx, sb.subspace(), generators=[ctx.normalize(e) for e in elements])


def derived_subalgebra(h):
    return LieSubalgebra._from_span(h.context, bracket_span(h.context, h, h))


def centre(h):
    """Centre of h."""
    ctx = h.context
    F = ctx.field
    # x = sum c_i b_i with [x, b_j] = 0 for all j
    cols = []
    for bi in h.basis:
        col = []
        for bj in h.basis:
            col.extend(ctx.coords(ctx.bracket(bi, bj)))
        cols.append(col)
    if not cols:
        return h
    rows = list(zip(*cols))
    ker = kernel_payload(F, rows, len(h.basis)) if rows else []
    mats = [ctx.from_coords(vec_combo(F, k, h.span.basis, ctx.dim)) for k in ker]
    return LieSubalgebra(ctx, mats, check=False)


@dataclass
class StructuralSeries:
    derived: list = dc_field(default_factory=list)
    lower_central: list = dc_field(default_factory=list)
    centre: object = None
    solvable: bool = False
    nilpotent: bool = False


def structural_series(h):
    """Derived and lower central series (each ending when it stabilises) plus the centre."""
    ctx = h.context
    derived = [h]
    while True:
        nxt = LieSubalgebra._from_span(ctx, bracket_span(ctx, derived[-1], derived[-1]))
        if nxt.dim == derived[-1].dim:
            break
        derived.append(nxt)
    lower = [h]
    while True:
        nxt = LieSubalgebra._from_span(ctx, bracket_span(ctx, h, lower[-1]))
        if nxt.dim == lower[-1].dim:
            break
        lower.append(nxt)
    return StructuralSeries(derived=derived, lower_central=lower, centre=centre(h),
                            solvable=derived[-1].dim == 0, nilpotent=lower[-1].dim == 0)


def is_solvable(h):
    return structural_series(h).solvable


def is_nilpotent_algebra(h):
    return structural_series(h).nilpotent


def _linear_conditions_on_g(ctx, condition_vectors):
    """Elements x of Lie(G) with sum of linear images zero.

    ``condition_vectors(B)`` returns a tuple for each basis element B of Lie(G).
    """
    F = ctx.field
    gb = ctx.basis()
    cols = [condition_vectors(B) for B in gb]
    rows = list(zip(*cols)) if cols and cols[0] else []
    if not rows:
        return gb
    ker = kernel_payload(F, rows, len(gb))
    return [ctx.from_coords(k) for k in ker]


def centralizer_in_g(h):
    """{x in Lie(G) : [x, h] = 0}."""
    ctx = h.context

    def cond(B):
        out = []
        for y in h.basis:
            out.extend(ctx.coords(ctx.bracket(B, y)))
        return tuple(out)

    return LieSubalgebra(ctx, _linear_conditions_on_g(ctx, cond), check=False)


def normalizer_in_g(h):
    """{x in Lie(G) : [x, h] in h}."""
    ctx = h.context

    def cond(B):
        out = []
        for y in h.basis:
            out.extend(h.span.reduce(ctx.coords(ctx.bracket(B, y))))
        return tuple(out)

    return LieSubalgebra(ctx, _linear_conditions_on_g(ctx, cond), check=False)


def centralizer_in(h, s):
    """{x in h : [x, s] = 0}."""
    ctx = h.context
    F = ctx.field
    cols = []
    for b in h.basis:
        col = []
        for y in s.basis:
            col.extend(ctx.coords(ctx.bracket(b, y)))
        cols.append(tuple(col))
    if not cols or not cols[0]:
        return h
    ker = kernel_payload(F, list(zip(*cols)), len(cols))
    return LieSubalgebra(ctx, [h.combine(k) for k in ker], check=False)


# ---------------------------------------------------------------------------
# Killing form
# ---------------------------------------------------------------------------

def adjoint_matrix(h, x):
    """Matrix of ad(x) on h in the echelon basis of h."""
    ctx = h.context
    cols = [h.coefficients(ctx.bracket(x, b)) for b in h.basis]
    return Matrix.from_columns(h.field, cols) if cols else Matrix.zeros(h.field, 0)


def killing_form_matrix(h):
    ads = [adjoint_matrix(h, b) for b in h.basis]
    F = h.field
    d = h.dim
    return Matrix.from_payload(F, [[(ads[i] @ ads[j]).trace_payload() for j in range(d)]
                                   for i in range(d)]) if d else Matrix.zeros(F, 0)


def killing_radical(h):
    """Orthogonal of [h, h] under the Killing form; the solvable radical in characteristic 0."""
    ctx = h.context
    F = h.field
    if h.dim == 0:
        return h
    D = derived_subalgebra(h)
    ads = [adjoint_matrix(h, b) for b in h.basis]
    dads = [adjoint_matrix(h, d) for d in D.basis]
    rows = [tuple((a @ d).trace_payload() for a in ads) for d in dads]
    if not rows:
        return h
    ker = kernel_payload(F, rows, h.dim)
    return LieSubalgebra(ctx, [h.combine(k) for k in ker], check=False)


def solvable_radical_char0(h):
    """rad(h) in characteristic 0 (Killing-orthogonal of [h, h])."""
    if h.field.characteristic != 0:
        raise CapabilityError("the Killing-form radical needs characteristic 0")
    rad = killing_radical(h)
    if not structural_series(rad).solvable:
        raise VerificationError("Killing-form radical is not solvable")
    return rad


# ---------------------------------------------------------------------------
# associative hulls
# ---------------------------------------------------------------------------

class MatrixAlgebra:
    """Subspace of n x n matrices closed under multiplication."""

    def __init__(self, field, n, mats, span=None):
        self.field = field
        self.n = n
        self.span = span if span is not None else Subspace(field, n * n, [m.vec() for m in mats])
        self.basis = [Matrix.from_vec(field, n, v) for v in self.span.basis]

    @property
    def dim(self):
        return self.span.dim

    def contains(self, x):
        return self.span.contains(x.vec())

    def __contains__(self, x):
        return self.contains(x)

    def coefficients(self, x):
        return self.span.coordinates(x.vec())

    def combine(self, coeffs):
        return Matrix.from_vec(self.field, self.n, self.span.combine(coeffs))

    def random_element(self, rng):
        return self.combine([self.field.random(rng) for _ in range(self.dim)])

    def is_closed(self):
        return all(self.contains(a @ b) for a in self.basis for b in self.basis)

    def is_unital(self):
        return self.contains(Matrix.identity(self.field, self.n))

    def __repr__(self):
        return f"MatrixAlgebra(dim={self.dim}, n={self.n})"


def associative_hull(mats, field=None, n=None, unital=True):
    """Associative algebra generated by ``mats`` (with the identity when ``unital``)."""
    mats = list(mats)
    if field is None:
        field = mats[0].field
        n = mats[0].nrows
    sb = SpanBuilder(field, n * n)
    found = []
    queue = []
    seeds = list(mats)
    if unital:
        seeds = [Matrix.identity(field, n)] + seeds
    gens = [m for m in mats if not m.is_zero()]
    for m in seeds:
        if sb.add(m.vec()):
            queue.append(m)
            found.append(m)
    while queue:
        a = queue.pop()
        for g in gens:
            b = a @ g
            if sb.add(b.vec()):
                queue.append(b)
                found.append(b)
    return MatrixAlgebra(field, n, found, span=sb.subspace())


def hull_of(h, unital=True):
    """Associative hull of a Lie subalgebra acting on the natural module."""
    return associative_hull(h.action_matrices(), h.field, h.n, unital=unital)


def engel_flag(mats, field, n):
    """If the matrices generate a nilpotent associative algebra, the chain
    0 < W_1 < ... < W_k = F^n with W_i = {v : x v in W_{i-1}}; otherwise None."""
    zero_space = Subspace.zero(field, n)
    chain = []
    W = zero_space
    while not W.is_full():
        cols = []
        for j in range(n):
            e = tuple(field.one if i == j else field.zero for i in range(n))
            col = []
            for x in mats:
                col.extend(W.reduce(x.apply(e)))
            cols.append(tuple(col))
        rows = list(zip(*cols)) if cols and cols[0] else []
        nxt = Subspace(field, n, kernel_payload(field, rows, n)) if rows else Subspace.full(field, n)
        if nxt.dim == W.dim:
            return None
        chain.append(nxt)
        W = nxt
    return chain


def engel_triangularize(h):
    """Complete flag with h strictly upper triangular in an adapted basis, or None.

    The chain from ``engel_flag`` is refined to a complete flag; each refinement
    step stays inside the next chain member, so strictness is preserved.
    """
    F, n = h.field, h.n
    chain = engel_flag(h.action_matrices(), F, n)
    if chain is None:
        return None
    steps = []
    prev = Subspace.zero(F, n)
    for W in chain:
        for v in prev.complement_basis(within=W):
            prev = prev.sum(Subspace(F, n, [v]))
            steps.append(prev)
    flag = Flag(F, n, steps[:-1])
    for x in h.action_matrices():
        lower = Subspace.zero(F, n)
        for V in list(flag.steps) + [Subspace.full(F, n)]:
            if not all(lower.contains(x.apply(v)) for v in V.basis):
                raise VerificationError("Engel flag is not strictly stable")
            lower = V
    return flag
