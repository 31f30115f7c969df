"""Dense exact linear algebra: matrices, echelon forms, subspaces and flags.

Matrices and vectors hold field payloads (see ``fields``).  Vectors are plain
tuples of payloads.  Everything is exact; pivots are chosen as the first
nonzero entry in a column.
"""

from __future__ import annotations

import itertools

from .errors import DimensionError, FieldError
from .fields import FieldElement


# ---------------------------------------------------------------------------
# payload-level routines
# ---------------------------------------------------------------------------

def rref_payload(F, rows, ncols):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    zero, mul, sub, inv = F.zero, F.mul, F.sub, F.inv
    M = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(M)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if M[i][c] != zero:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        row = M[r]
        lead = row[c]
        if lead != F.one:
            il = inv(lead)
            row = [mul(il, x) if x != zero else zero for x in row]
            M[r] = row
        for i in range(nrows):
            if i != r:
                f = M[i][c]
                if f != zero:
                    other = M[i]
                    M[i] = [sub(other[j], mul(f, row[j])) if row[j] != zero else other[j]
                            for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(M[i]) for i in range(r)], pivots


def kernel_payload(F, rows, ncols):
    """Basis of {x : A x = 0} for A given by ``rows``."""
    R, pivots = rref_payload(F, rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [F.zero] * ncols
        v[fcol] = F.one
        for row, pc in zip(R, pivots):
            if row[fcol] != F.zero:
                v[pc] = F.neg(row[fcol])
        basis.append(tuple(v))
    return basis


def solve_payload(F, rows, rhs, ncols):
    """One solution x of A x = rhs, or None."""
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    R, pivots = rref_payload(F, aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [F.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def solve_linear(A, b):
    """Solutions of A x = b as (particular solution, kernel basis), or None
    when the system is inconsistent."""
    if len(b) != A.nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {A.nrows}")
    F = A.field
    rhs = [F.coerce(x) for x in b]
    x = solve_payload(F, A.rows, rhs, A.ncols)
    if x is None:
        return None
    return x, kernel_payload(F, A.rows, A.ncols)


def vec_combo(F, coeffs, vectors, length):
    """sum_i coeffs[i] * vectors[i]."""
    out = [F.zero] * length
    add, mul, zero = F.add, F.mul, F.zero
    for c, v in zip(coeffs, vectors):
        if c == zero:
            continue
        for j, x in enumerate(v):
            if x != zero:
                out[j] = add(out[j], mul(c, x))
    return tuple(out)


def mat_mul_payload(F, A, B):
    add, mul, zero = F.add, F.mul, F.zero
    m = len(B[0]) if B else 0
    Bt = list(zip(*B)) if B else []
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a != zero]
        new = []
        for j in range(m):
            col = Bt[j]
            acc = zero
            for k, a in nz:
                b = col[k]
                if b != zero:
                    acc = add(acc, mul(a, b))
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


class SpanBuilder:
    """Incrementally grown span, kept in (non-reduced) echelon form."""

    def __init__(self, F, length, vectors=()):
        self.F = F
        self.length = length
        self.rows = []  # list of (pivot, row), row[pivot] == 1
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        F = self.F
        zero, sub, mul = F.zero, F.sub, F.mul
        v = list(v)
        for p, row in self.rows:
            c = v[p]
            if c != zero:
                for j in range(p, self.length):
                    r = row[j]
                    if r != zero:
                        v[j] = sub(v[j], mul(c, r))
        return v

    def add(self, v):
        """Insert ``v``; return True when it enlarged the span."""
        if len(v) != self.length:
            raise DimensionError("vector length mismatch")
        w = self.reduce(v)
        zero = self.F.zero
        for p, x in enumerate(w):
            if x != zero:
                break
        else:
            return False
        if x != self.F.one:
            ix = self.F.inv(x)
            w = [self.F.mul(ix, y) if y != zero else zero for y in w]
        row = tuple(w)
        # keep rows sorted by pivot so reduction is a single pass
        idx = 0
        while idx < len(self.rows) and self.rows[idx][0] < p:
            idx += 1
        self.rows.insert(idx, (p, row))
        return True

    def contains(self, v):
        zero = self.F.zero
        return all(x == zero for x in self.reduce(v))

    def subspace(self):
        return Subspace(self.F, self.length, [r for _, r in self.rows])


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "nrows", "ncols", "_hash")

    def __init__(self, field, rows):
        rows = [tuple(field.coerce(x) for x in r) for r in rows]
        self._set(field, rows)

    def _set(self, field, rows):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionError("ragged matrix")
        self._hash = None

    @classmethod
    def from_payload(cls, field, rows):
        obj = cls.__new__(cls)
        obj._set(field, rows)
        return obj

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls.from_payload(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, r, c=None):
        c = r if c is None else c
        return cls.from_payload(field, [[field.zero] * c for _ in range(r)])

    @classmethod
    def unit(cls, field, n, i, j):
        """Elementary matrix E_ij."""
        rows = [[field.zero] * n for _ in range(n)]
        rows[i][j] = field.one
        return cls.from_payload(field, rows)

    @classmethod
    def from_columns(cls, field, cols):
        return cls.from_payload(field, list(zip(*cols)))

    @classmethod
    def from_vec(cls, field, n, vec, ncols=None):
        ncols = n if ncols is None else ncols
        return cls.from_payload(field, [vec[i * ncols:(i + 1) * ncols] for i in range(n)])

    @classmethod
    def diagonal(cls, field, entries):
        n = len(entries)
        rows = [[field.zero] * n for _ in range(n)]
        for i, e in enumerate(entries):
            rows[i][i] = field.coerce(e)
        return cls.from_payload(field, rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return FieldElement(self.field, self.rows[i][j])

    def entry(self, i, j):
        return self.rows[i][j]

    def columns(self):
        return [tuple(c) for c in zip(*self.rows)]

    def vec(self):
        """Row-major flattening."""
        return tuple(x for r in self.rows for x in r)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.key, self.rows))
        return self._hash

    def _check_same(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        add = self.field.add
        return Matrix.from_payload(self.field, [tuple(add(a, b) for a, b in zip(r, s))
                                                for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check_same(other)
        sub = self.field.sub
        return Matrix.from_payload(self.field, [tuple(sub(a, b) for a, b in zip(r, s))
                                                for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        neg = self.field.neg
        return Matrix.from_payload(self.field, [tuple(neg(a) for a in r) for r in self.rows])

    def scale(self, c):
        """Multiply by a scalar payload."""
        mul, zero = self.field.mul, self.field.zero
        if c == zero:
            return Matrix.zeros(self.field, self.nrows, self.ncols)
        return Matrix.from_payload(self.field, [tuple(mul(c, a) for a in r) for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.__matmul__(other)
        if isinstance(other, (int, FieldElement)):
            return self.scale(self.field.coerce(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(self.field.coerce(other))
        return NotImplemented

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix.from_payload(self.field, mat_mul_payload(self.field, self.rows, other.rows))

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def apply(self, v):
        """Matrix times column vector (payload tuple)."""
        F = self.field
        add, mul, zero = F.add, F.mul, F.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                if a != zero and b != zero:
                    acc = add(acc, mul(a, b))
            out.append(acc)
        return tuple(out)

    def transpose(self):
        return Matrix.from_payload(self.field, list(zip(*self.rows)))

    @property
    def T(self):
        return self.transpose()

    def trace_payload(self):
        F = self.field
        acc = F.zero
        for i in range(min(self.nrows, self.ncols)):
            acc = F.add(acc, self.rows[i][i])
        return acc

    def trace(self):
        return FieldElement(self.field, self.trace_payload())

    def is_zero(self):
        zero = self.field.zero
        return all(x == zero for r in self.rows for x in r)

    def is_scalar(self):
        if not self.is_square():
            return False
        zero = self.field.zero
        d = self.rows[0][0] if self.nrows else zero
        return all((x == d) if i == j else (x == zero)
                   for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def bracket(self, other):
        """Commutator xy - yx."""
        return self @ other - other @ self

    def rref(self):
        rows, pivots = rref_payload(self.field, self.rows, self.ncols)
        return Matrix.from_payload(self.field, rows) if rows else None, pivots

    def rank(self):
        return len(rref_payload(self.field, self.rows, self.ncols)[1])

    def kernel(self):
        """Basis of the right null space as payload tuples."""
        return kernel_payload(self.field, self.rows, self.ncols)

    def kernel_space(self):
        return Subspace(self.field, self.ncols, self.kernel())

    def image_space(self):
        return Subspace(self.field, self.nrows, self.columns())

    def inverse(self):
        if not self.is_square():
            raise DimensionError("only square matrices are invertible")
        n = self.nrows
        F = self.field
        aug = [tuple(r) + tuple(F.one if i == j else F.zero for j in range(n))
               for i, r in enumerate(self.rows)]
        R, pivots = rref_payload(F, aug, 2 * n)
        if len(pivots) < n or pivots[n - 1] >= n:
            raise FieldError("matrix is singular")
        return Matrix.from_payload(F, [r[n:] for r in R])

    def is_invertible(self):
        return self.is_square() and self.rank() == self.nrows

    def det_payload(self):
        F = self.field
        n = self.nrows
        M = [list(r) for r in self.rows]
        det = F.one
        for c in range(n):
            piv = next((i for i in range(c, n) if M[i][c] != F.zero), None)
            if piv is None:
                return F.zero
            if piv != c:
                M[c], M[piv] = M[piv], M[c]
                det = F.neg(det)
            det = F.mul(det, M[c][c])
            inv = F.inv(M[c][c])
            for i in range(c + 1, n):
                f = F.mul(M[i][c], inv)
                if f != F.zero:
                    M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[c])]
        return det

    def det(self):
        return FieldElement(self.field, self.det_payload())

    def conjugate(self, g, g_inv=None):
        """g^{-1} x g."""
        g_inv = g.inverse() if g_inv is None else g_inv
        return g_inv @ self @ g

    def to_strings(self):
        fmt = self.field.format
        return [[fmt(x) for x in r] for r in self.rows]

    def __str__(self):
        cells = self.to_strings()
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __repr__(self):
        return f"Matrix({self.field.name()}, {self.to_strings()})"


def poly_eval_matrix(f, M):
    """Evaluate a Polynomial at a square matrix by Horner's rule."""
    F = M.field
    n = M.nrows
    acc = Matrix.zeros(F, n)
    for c in reversed(f.coeffs):
        acc = acc @ M
        if c != F.zero:
            rows = [list(r) for r in acc.rows]
            for i in range(n):
                rows[i][i] = F.add(rows[i][i], c)
            acc = Matrix.from_payload(F, rows)
    return acc


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """Subspace of F^m stored by its reduced row echelon basis."""

    __slots__ = ("field", "ambient", "basis", "pivots", "_hash")

    def __init__(self, field, ambient, vectors=()):
        self.field = field
        self.ambient = ambient
        coerce = field.coerce
        vectors = [tuple(coerce(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise DimensionError("vector length does not match the ambient dimension")
        rows, pivots = rref_payload(field, vectors, ambient) if vectors else ([], [])
        self.basis = tuple(rows)
        self.pivots = tuple(pivots)
        self._hash = None

    @classmethod
    def full(cls, field, m):
        return cls(field, m, [tuple(field.one if i == j else field.zero for j in range(m))
                              for i in range(m)])

    @classmethod
    def zero(cls, field, m):
        return cls(field, m, [])

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return len(self.basis) == self.ambient

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, self.basis))
        return self._hash

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def reduce(self, v):
        """Remainder of v against the basis (zero iff v lies in the span)."""
        F = self.field
        zero, sub, mul = F.zero, F.sub, F.mul
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c != zero:
                for j in range(p, self.ambient):
                    r = row[j]
                    if r != zero:
                        v[j] = sub(v[j], mul(c, r))
        return tuple(v)

    def contains(self, v):
        zero = self.field.zero
        return all(x == zero for x in self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v):
        """Coefficients of v in the echelon basis; raises if v is outside."""
        if not self.contains(v):
            raise DimensionError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def combine(self, coeffs):
        return vec_combo(self.field, coeffs, self.basis, self.ambient)

    def is_subspace_of(self, other):
        return all(other.contains(v) for v in self.basis)

    def __le__(self, other):
        return self.is_subspace_of(other)

    def __lt__(self, other):
        return self.is_subspace_of(other) and self.dim < other.dim

    def sum(self, other):
        return Subspace(self.field, self.ambient, list(self.basis) + list(other.basis))

    __add__ = sum

    def intersect(self, other):
        """Zassenhaus intersection."""
        F = self.field
        m = self.ambient
        if self.is_zero() or other.is_zero():
            return Subspace.zero(F, m)
        zeros = (F.zero,) * m
        rows = [v + v for v in self.basis] + [w + zeros for w in other.basis]
        R, pivots = rref_payload(F, rows, 2 * m)
        inter = [r[m:] for r, p in zip(R, pivots) if p >= m]
        return Subspace(F, m, inter)

    __and__ = intersect

    def complement_basis(self, within=None):
        """Vectors completing a basis of ``self`` to one of ``within`` (default: everything)."""
        F = self.field
        m = self.ambient
        if within is None:
            candidates = [tuple(F.one if i == j else F.zero for j in range(m)) for i in range(m)]
        else:
            candidates = list(within.basis)
        sb = SpanBuilder(F, m, self.basis)
        out = []
        for c in candidates:
            if sb.add(c):
                out.append(c)
        return out

    def complement(self, within=None):
        return Subspace(self.field, self.ambient, self.complement_basis(within))

    def elements(self):
        """All vectors of the subspace (finite fields only)."""
        F = self.field
        elems = list(F.elements())
        for coeffs in itertools.product(elems, repeat=self.dim):
            yield self.combine(coeffs)

    def complements(self, within=None):
        """Enumerate every complement of ``self`` inside ``within`` (finite fields)."""
        F = self.field
        if not F.is_finite:
            raise FieldError("complement enumeration needs a finite field")
        if within is not None and not self.is_subspace_of(within):
            raise DimensionError("subspace is not contained in the enclosing space")
        base = self.complement_basis(within)
        if not base:
            yield Subspace.zero(F, self.ambient)
            return
        members = list(self.elements())
        for shifts in itertools.product(members, repeat=len(base)):
            vecs = [tuple(F.add(a, b) for a, b in zip(c, s)) for c, s in zip(base, shifts)]
            yield Subspace(F, self.ambient, vecs)

    def image(self, M):
        return Subspace(self.field, M.nrows, [M.apply(v) for v in self.basis])

    def is_invariant(self, M):
        return all(self.contains(M.apply(v)) for v in self.basis)


def spin(mats, vectors, field, n):
    """Smallest subspace containing ``vectors`` and stable under every matrix in ``mats``."""
    sb = SpanBuilder(field, n)
    queue = []
    for v in vectors:
        if sb.add(v):
            queue.append(tuple(v))
    while queue:
        v = queue.pop()
        for M in mats:
            w = M.apply(v)
            if sb.add(w):
                queue.append(w)
    return sb.subspace()


def matrices_span(mats, field):
    """Subspace of flattened matrices."""
    if not mats:
        raise DimensionError("empty matrix list")
    return Subspace(field, len(mats[0].vec()), [m.vec() for m in mats])


def solve_matrix_equations(field, nrows, ncols, equations):
    """Basis of the matrices X (nrows x ncols) satisfying the given linear equations.

    ``equations`` is a list of functions taking the (i, j) unit matrix and
    returning a tuple of payloads: the image of E_ij under a linear map whose
    kernel is sought.  All maps are evaluated on every E_ij.
    """
    cols = []
    for i in range(nrows):
        for j in range(ncols):
            E = Matrix.unit_rect(field, nrows, ncols, i, j)
            image = []
            for eq in equations:
                image.extend(eq(E))
            cols.append(tuple(image))
    if not cols or not cols[0]:
        return [Matrix.from_vec(field, nrows, v, ncols) for v in Subspace.full(field, nrows * ncols).basis]
    rows = list(zip(*cols))
    return [Matrix.from_vec(field, nrows, v, ncols) for v in kernel_payload(field, rows, nrows * ncols)]


def _unit_rect(cls, field, r, c, i, j):
    rows = [[field.zero] * c for _ in range(r)]
    rows[i][j] = field.one
    return cls.from_payload(field, rows)


Matrix.unit_rect = classmethod(_unit_rect)


def hom_space(source, target):
    """Basis of {g : g X_i = Y_i g} for source matrices X_i and target matrices Y_i.

    ``g`` has shape (dim target, dim source).
    """
    if len(source) != len(target):
        raise DimensionError("source and target tuples differ in length")
    if not source:
        raise DimensionError("empty tuples")
    F = source[0].field
    n = source[0].nrows
    m = target[0].nrows
    eqs = [(lambda g, X=X, Y=Y: (g @ X - Y @ g).vec()) for X, Y in zip(source, target)]
    return solve_matrix_equations(F, m, n, eqs)


# ---------------------------------------------------------------------------
# flags
# ---------------------------------------------------------------------------

class Flag:
    """Strictly increasing chain of proper nonzero subspaces of F^n.

    The empty chain is allowed and corresponds to the whole group.
    """

    __slots__ = ("field", "n", "steps")

    def __init__(self, field, n, steps=()):
        steps = tuple(steps)
        for V in steps:
            if V.ambient != n or V.field != field:
                raise DimensionError("flag step lives in a different space")
            if V.is_zero() or V.is_full():
                raise DimensionError("flag steps must be proper and nonzero")
        for a, b in zip(steps, steps[1:]):
            if not (a.dim < b.dim and a.is_subspace_of(b)):
                raise DimensionError("flag steps must be strictly increasing")
        self.field = field
        self.n = n
        self.steps = steps

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __eq__(self, other):
        return isinstance(other, Flag) and self.n == other.n and self.steps == other.steps

    def __hash__(self):
        return hash((self.n, self.steps))

    def __repr__(self):
        return f"Flag(dims={self.dims()})"

    def dims(self):
        return [V.dim for V in self.steps]

    def block_sizes(self):
        d = [0] + self.dims() + [self.n]
        return [b - a for a, b in zip(d, d[1:])]

    def adapted_basis(self):
        """Basis vectors v_1..v_n with the first dim V_i spanning V_i."""
        F = self.field
        sb = SpanBuilder(F, self.n)
        out = []
        full = Subspace.full(F, self.n)
        for V in list(self.steps) + [full]:
            for v in V.basis:
                if sb.add(v):
                    out.append(v)
        return out

    def frame(self):
        """Invertible matrix whose columns form an adapted basis."""
        return Matrix.from_columns(self.field, self.adapted_basis())

    def is_stable_under(self, M):
        return all(V.is_invariant(M) for V in self.steps)

    def refines(self, other):
        return set(other.steps) <= set(self.steps)
