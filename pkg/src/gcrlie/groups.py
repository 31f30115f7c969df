"""Cocharacters, their limits, parabolic and Levi subalgebras, opposite flags.

A cocharacter is described by a frame ``g`` (an invertible matrix whose
columns are a basis) and non-increasing integer weights: it acts on the
i-th basis vector by a^{w_i}.  Conjugating x into the frame, x' = g^{-1} x g,
entry (i, j) has weight w_i - w_j, so the limit of Ad(lambda(a)) x as a -> 0
exists exactly when the negative-weight entries vanish, and then equals the
weight-zero (block diagonal) part.  The first frame block carries the highest
weight and spans the innermost subspace of the associated flag.
"""

from __future__ import annotations

from .context import GroupContext
from .errors import DimensionError
from .linalg import Flag, Matrix, Subspace, kernel_payload, vec_combo
from .liealg import LieSubalgebra


class Cocharacter:
    """lambda(a) = g diag(a^{w_1}, ..., a^{w_n}) g^{-1} with w non-increasing."""

    def __init__(self, context, frame, weights):
        n = context.n
        if frame.shape != (n, n) or not frame.is_invertible():
            raise DimensionError("frame must be an invertible n x n matrix")
        weights = [int(w) for w in weights]
        if len(weights) != n:
            raise DimensionError("need one weight per basis vector")
        if any(a < b for a, b in zip(weights, weights[1:])):
            raise DimensionError("weights must be non-increasing")
        total = sum(weights)
        if context.kind == "SL" and total:
            weights = [n * w - total for w in weights]
        self.context = context
        self.frame = frame
        self.frame_inv = frame.inverse()
        self.weights = weights

    def __repr__(self):
        return f"Cocharacter(weights={self.weights})"

    def is_central(self):
        return len(set(self.weights)) <= 1

    def blocks(self):
        """Index ranges of equal weights, highest weight first."""
        out = []
        start = 0
        for i in range(1, self.context.n + 1):
            if i == self.context.n or self.weights[i] != self.weights[start]:
                out.append(range(start, i))
                start = i
        return out

    def block_sizes(self):
        return [len(b) for b in self.blocks()]

    def flag(self):
        """The flag stabilised by P_lambda."""
        F = self.context.field
        n = self.context.n
        cols = self.frame.columns()
        steps = []
        acc = 0
        for b in self.blocks()[:-1]:
            acc += len(b)
            steps.append(Subspace(F, n, cols[:acc]))
        return Flag(F, n, steps)

    def in_frame(self, x):
        return self.frame_inv @ x @ self.frame

    def from_frame(self, y):
        return self.frame @ y @ self.frame_inv

    def weight_components(self, x):
        """{weight: component} with components expressed in the standard basis."""
        F = self.context.field
        n = self.context.n
        y = self.in_frame(x)
        parts = {}
        for i in range(n):
            for j in range(n):
                c = y.rows[i][j]
                if c == F.zero:
                    continue
                w = self.weights[i] - self.weights[j]
                parts.setdefault(w, [[F.zero] * n for _ in range(n)])[i][j] = c
        return {w: self.from_frame(Matrix.from_payload(F, rows)) for w, rows in parts.items()}

    def limit_exists(self, x):
        """x lies in Lie(P_lambda)."""
        F = self.context.field
        y = self.in_frame(x)
        w = self.weights
        n = self.context.n
        return all(y.rows[i][j] == F.zero for i in range(n) for j in range(n) if w[i] < w[j])

    def limit(self, x, normalize=True):
        """c_lambda(x): the weight-zero part; raises if the limit does not exist."""
        if not self.limit_exists(x):
            raise DimensionError("limit does not exist: element is outside the parabolic")
        F = self.context.field
        y = self.in_frame(x)
        w = self.weights
        n = self.context.n
        rows = [[y.rows[i][j] if w[i] == w[j] else F.zero for j in range(n)] for i in range(n)]
        out = self.from_frame(Matrix.from_payload(F, rows))
        return self.context.normalize(out) if normalize else out

    def positive_part(self, x):
        F = self.context.field
        y = self.in_frame(x)
        w = self.weights
        n = self.context.n
        rows = [[y.rows[i][j] if w[i] > w[j] else F.zero for j in range(n)] for i in range(n)]
        return self.from_frame(Matrix.from_payload(F, rows))

    def image_of(self, h):
        """c_lambda(h) as a subalgebra; generators are the images of h's generators."""
        ctx = self.context
        for b in h.basis:
            if not self.limit_exists(b):
                raise DimensionError("algebra is not contained in the parabolic")
        mats = [self.limit(b) for b in h.basis]
        gens = [self.limit(g) for g in h.generators]
        return LieSubalgebra(ctx, mats, generators=gens, check=True)

    def contains_algebra(self, h):
        return all(self.limit_exists(b) for b in h.basis)

    def with_frame(self, frame):
        """Same weights, another frame (for SL the weights are already balanced)."""
        obj = Cocharacter.__new__(Cocharacter)
        obj.context = self.context
        obj.frame = frame
        obj.frame_inv = frame.inverse()
        obj.weights = list(self.weights)
        return obj

    def parabolic(self):
        return lie_parabolic(self.context, self.flag())

    def levi(self):
        return _frame_algebra(self.context, self.frame, self.weights, lambda a, b: a == b)

    def unipotent_radical(self):
        return _frame_algebra(self.context, self.frame, self.weights, lambda a, b: a > b,
                              restrict=False)


def central_cocharacter(context):
    return Cocharacter(context, Matrix.identity(context.field, context.n), [0] * context.n)


def cocharacter_from_flag(context, flag, weights=None, frame=None):
    """Cocharacter whose parabolic stabilises ``flag``; default weights r, r-1, ..., 0
    on the blocks, innermost block highest."""
    n = context.n
    frame = flag.frame() if frame is None else frame
    sizes = flag.block_sizes()
    r = len(sizes) - 1
    if weights is None:
        block_weights = [r - i for i in range(len(sizes))]
    else:
        block_weights = list(weights)
        if len(block_weights) != len(sizes):
            raise DimensionError("need one weight per block")
    ws = []
    for s, w in zip(sizes, block_weights):
        ws.extend([w] * s)
    return Cocharacter(context, frame, ws)


def restrict_to_context(context, gl_mats):
    """Intersect the span of gl_n matrices with Lie(G) (SL) or project it (PGL)."""
    F = context.field
    if context.kind == "GL":
        return LieSubalgebra(context, gl_mats, check=False)
    if context.kind == "PGL":
        return LieSubalgebra(context, [context.normalize(m) for m in gl_mats], check=False)
    span = Subspace(F, context.n ** 2, [m.vec() for m in gl_mats])
    basis = [Matrix.from_vec(F, context.n, v) for v in span.basis]
    traces = [tuple(b.trace_payload() for b in basis)]
    ker = kernel_payload(F, traces, len(basis))
    mats = [Matrix.from_vec(F, context.n, vec_combo(F, k, span.basis, context.n ** 2)) for k in ker]
    return LieSubalgebra(context, mats, check=False)


def _frame_algebra(context, frame, weights, keep, restrict=True):
    F = context.field
    n = context.n
    frame_inv = frame.inverse()
    mats = []
    for i in range(n):
        for j in range(n):
            if keep(weights[i], weights[j]):
                mats.append(frame @ Matrix.unit(F, n, i, j) @ frame_inv)
    if not mats:
        return LieSubalgebra(context, [], check=False)
    if not restrict and context.kind != "PGL":
        return LieSubalgebra(context, mats, check=False)
    return restrict_to_context(context, mats)


def _flag_weights(flag):
    sizes = flag.block_sizes()
    ws = []
    for k, s in enumerate(sizes):
        ws.extend([len(sizes) - 1 - k] * s)
    return ws


def lie_parabolic(context, flag):
    """Lie(P_F): elements stabilising every step of the flag."""
    return _frame_algebra(context, flag.frame(), _flag_weights(flag), lambda a, b: a >= b)


def lie_levi(context, frame, block_sizes):
    """Block-diagonal algebra with respect to a frame and block sizes."""
    ws = []
    for k, s in enumerate(block_sizes):
        ws.extend([len(block_sizes) - 1 - k] * s)
    return _frame_algebra(context, frame, ws, lambda a, b: a == b)


def levi_dimension(context, block_sizes):
    d = sum(b * b for b in block_sizes)
    return d if context.kind == "GL" else d - 1


def opposite_flags(flag_a, flag_b):
    """Two flags are opposite when their dimensions are complementary and the
    intersection of their parabolic subalgebras is a common Levi subalgebra."""
    n = flag_a.n
    da, db = flag_a.dims(), flag_b.dims()
    if sorted(n - d for d in da) != sorted(db):
        return False
    ctx = GroupContext("GL", n, flag_a.field)
    pa = lie_parabolic(ctx, flag_a)
    pb = lie_parabolic(ctx, flag_b)
    inter = pa.span.intersect(pb.span)
    return inter.dim == sum(b * b for b in flag_a.block_sizes())


def flags_transversal(flag_a, flag_b):
    """Direct check: V_i + W_{r-i} = whole space with complementary dimensions."""
    n = flag_a.n
    A, B = list(flag_a.steps), list(flag_b.steps)
    if len(A) != len(B):
        return False
    r = len(A)
    for i in range(r):
        U, W = A[i], B[r - 1 - i]
        if U.dim + W.dim != n or not U.intersect(W).is_zero():
            return False
    return True


def c_lambda(lam, h):
    """c_lambda(h): raises DimensionError naming a basis element outside P_lambda."""
    for k, b in enumerate(h.basis):
        if not lam.limit_exists(b):
            raise DimensionError(f"basis element {k} of h is outside the parabolic: {b.to_strings()}")
    return lam.image_of(h)


def pgl_lift(h):
    """Full preimage in gl_n of a pgl_n subalgebra: representatives plus I."""
    ctx = h.context
    if ctx.kind != "PGL":
        raise DimensionError("pgl_lift expects a PGL context")
    gl = ctx.gl()
    return LieSubalgebra(gl, list(h.basis) + [gl.identity], check=True)
