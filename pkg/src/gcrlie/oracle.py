"""Brute-force ground truth over small finite fields.

Everything here enumerates: subspaces, flags, splittings, group elements.
The only structure used is the definition itself, so these routines serve as
an independent check on the radical-based verdicts in ``gcr``.  Subalgebras
of sl_n and pgl_n are handled through their gl_n avatars (the module of
representatives plus the identity), since the parabolic sets coincide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .context import GroupContext
from .errors import CapabilityError, VerificationError
from .fields import GF
from .groups import lie_levi, lie_parabolic, opposite_flags
from .linalg import Flag, Matrix, Subspace
from .liealg import LieSubalgebra, structural_series

SIZE_GUARD = 1 << 20


def _check_size(q, n):
    if q ** n > SIZE_GUARD:
        raise CapabilityError(f"q^n = {q}^{n} exceeds the enumeration guard 2^20")


def _as_field(q_or_field):
    return GF(q_or_field) if isinstance(q_or_field, int) else q_or_field


def enumerate_subspaces(F, n, d):
    """All d-dimensional subspaces of F^n, each once, via reduced echelon forms."""
    elems = list(F.elements())
    out = []
    for pivots in itertools.combinations(range(n), d):
        free = [(r, c) for r in range(d) for c in range(pivots[r] + 1, n) if c not in pivots]
        for values in itertools.product(elems, repeat=len(free)):
            rows = [[F.zero] * n for _ in range(d)]
            for r, c in enumerate(pivots):
                rows[r][c] = F.one
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            out.append(Subspace(F, n, [tuple(r) for r in rows]))
    return out


def enumerate_flags(n, q, dims=None):
    """All flags of F_q^n with dimension sequence ``dims``.

    ``dims`` may be a sequence, ``"complete"`` or None (every nonempty
    dimension sequence).
    """
    F = _as_field(q)
    _check_size(F.order(), n)
    if dims == "complete":
        seqs = [tuple(range(1, n))]
    elif dims is None:
        seqs = [c for r in range(1, n) for c in itertools.combinations(range(1, n), r)]
    else:
        seqs = [tuple(dims)]
    by_dim = {}
    out = []
    for seq in seqs:
        for d in seq:
            if d not in by_dim:
                by_dim[d] = enumerate_subspaces(F, n, d)
        chains = [[V] for V in by_dim[seq[0]]]
        for d in seq[1:]:
            chains = [c + [W] for c in chains for W in by_dim[d] if c[-1].is_subspace_of(W)]
        out.extend(Flag(F, n, c) for c in chains)
    return out


def avatar_matrices(h):
    """gl_n matrices acting on the natural module (representatives plus I)."""
    return list(h.action_matrices()) + [h.context.identity]


def _gl(h):
    return GroupContext("GL", h.n, h.field)


def _contained(mats, alg):
    return all(alg.contains(m) for m in mats)


@dataclass
class OracleVerdict:
    value: bool
    witness: object = None
    flags_checked: int = 0


def def_based_gcr(h):
    """Definition executed literally: for every flag whose parabolic contains h,
    look for a splitting refining it whose Levi subalgebra contains h.

    Splittings are built step by step from complements, keeping only
    complements that h preserves (an h-stable complement at every step is
    what containment in the Levi subalgebra means).
    """
    F = h.field
    if not F.is_finite:
        raise CapabilityError("the oracle needs a finite field")
    n = h.n
    ctx = _gl(h)
    mats = avatar_matrices(h)
    checked = 0
    for flag in enumerate_flags(n, F):
        if not _contained(mats, lie_parabolic(ctx, flag)):
            continue
        checked += 1
        steps = [Subspace.zero(F, n)] + list(flag.steps) + [Subspace.full(F, n)]
        pieces = []
        ok = True
        for lower, upper in zip(steps, steps[1:]):
            choice = None
            for C in lower.complements(upper):
                if all(C.is_invariant(m) for m in mats):
                    choice = C
                    break
            if choice is None:
                ok = False
                break
            pieces.append(choice)
        if not ok:
            return OracleVerdict(False, flag, checked)
        frame = Matrix.from_columns(F, [v for P in pieces for v in P.basis])
        levi = lie_levi(ctx, frame, [P.dim for P in pieces])
        if not _contained(mats, levi):
            raise VerificationError("stable splitting does not give a containing Levi subalgebra")
    return OracleVerdict(True, None, checked)


@dataclass
class BuildingSubcomplex:
    """Flags whose parabolic subalgebra contains h, with their opposition pairs."""

    n: int
    q: int
    kind: str
    simplices: list
    opposite_pairs: list = field(default_factory=list)

    def has_opposite(self, i):
        return any(i in pair for pair in self.opposite_pairs)

    def as_dict(self):
        return {"n": self.n, "q": self.q, "kind": self.kind,
                "simplices": len(self.simplices), "opposite_pairs": len(self.opposite_pairs)}


def subcomplex(h):
    """Sigma = {flags F : h in Lie(P_F)} together with opposite pairs inside Sigma."""
    F = h.field
    if not F.is_finite:
        raise CapabilityError("the oracle needs a finite field")
    n = h.n
    ctx = _gl(h)
    mats = avatar_matrices(h)
    members = []
    for flag in enumerate_flags(n, F):
        if _contained(mats, lie_parabolic(ctx, flag)):
            members.append(flag)
    pairs = []
    for i, a in enumerate(members):
        for j in range(i, len(members)):
            b = members[j]
            if len(a) != len(b):
                continue
            if opposite_flags(a, b):
                pairs.append((i, j))
    return BuildingSubcomplex(n, F.order(), h.context.kind, members, pairs)


def is_delta_cr(sigma):
    """Every simplex of Sigma has an opposite simplex in Sigma."""
    return all(sigma.has_opposite(i) for i in range(len(sigma.simplices)))


def enumerate_gl(F, n, budget=None):
    """All invertible n x n matrices over a finite field."""
    q = F.order()
    count = 1
    for i in range(n):
        count *= q ** n - q ** i
    if budget is not None and count > budget:
        raise CapabilityError(f"|GL_{n}({q})| = {count} exceeds the budget {budget}")
    elems = list(F.elements())
    for entries in itertools.product(elems, repeat=n * n):
        g = Matrix.from_vec(F, n, entries)
        if g.is_invertible():
            yield g


def _move_flag(g, flag):
    return Flag(flag.field, flag.n, [V.image(g) for V in flag.steps])


def stabiliser(h, budget=200000):
    """{g in GL_n(q) : g h g^{-1} = h}, tested on the gl_n avatar."""
    F = h.field
    mats = avatar_matrices(h)
    span = Subspace(F, h.n * h.n, [m.vec() for m in mats])
    out = []
    for g in enumerate_gl(F, h.n, budget):
        gi = g.inverse()
        if all(span.contains((g @ m @ gi).vec()) for m in mats):
            out.append(g)
    return out


def centre_search(h, budget=200000):
    """A simplex of Sigma fixed by the stabiliser of h, when Sigma is not Delta-cr.

    Returns None for Delta-cr input (no search).  Absence of a fixed simplex
    in the non-Delta-cr case would contradict the centre theorem and raises.
    """
    sigma = subcomplex(h)
    if is_delta_cr(sigma):
        return None
    N = stabiliser(h, budget)
    for flag in sigma.simplices:
        if all(_move_flag(g, flag) == flag for g in N):
            return flag
    raise VerificationError("no stabiliser-fixed simplex in a non-completely-reducible subcomplex")


def brute_solvable_radical(h):
    """Largest solvable ideal of h by enumerating all subspaces of h."""
    F = h.field
    if not F.is_finite:
        raise CapabilityError("the oracle needs a finite field")
    ctx = h.context
    _check_size(F.order(), h.dim)
    found = Subspace.zero(F, ctx.dim)
    for d in range(1, h.dim + 1):
        for W in enumerate_subspaces(F, h.dim, d):
            mats = [h.combine(c) for c in W.basis]
            I = LieSubalgebra(ctx, mats, check=False)
            if not all(I.contains(ctx.bracket(b, x)) for b in h.basis for x in mats):
                continue
            if structural_series(I).solvable:
                found = found.sum(I.span)
    return LieSubalgebra._from_span(ctx, found)
