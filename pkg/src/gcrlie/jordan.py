"""Minimal polynomials, Jordan decompositions and Jordan closures."""

from __future__ import annotations

from .errors import CapabilityError, VerificationError
from .fields import p_deriv, p_mul, p_scale, p_sub
from .linalg import Matrix, SpanBuilder, kernel_payload, poly_eval_matrix
from .liealg import LieSubalgebra, associative_hull, bracket_closure
from .polynomials import Polynomial, radical_payload
from .verdict import Verdict


def minimal_polynomial(x):
    """Monic minimal polynomial of a square matrix (Krylov dependency on powers)."""
    F = x.field
    n = x.nrows
    powers = [Matrix.identity(F, n)]
    sb = SpanBuilder(F, n * n, [powers[0].vec()])
    while True:
        nxt = powers[-1] @ x
        if not sb.add(nxt.vec()):
            break
        powers.append(nxt)
    k = len(powers)
    cols = [p.vec() for p in powers] + [nxt.vec()]
    rows = list(zip(*cols))
    ker = kernel_payload(F, rows, k + 1)
    v = ker[0]
    lead = v[-1]
    inv = F.inv(lead)
    return Polynomial.from_payload(F, [F.mul(inv, c) for c in v])


def characteristic_polynomial(x):
    """det(X I - x), via reduction to Hessenberg form."""
    F = x.field
    n = x.nrows
    A = [list(r) for r in x.rows]
    zero = F.zero
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if A[i][m - 1] != zero), None)
        if piv is None:
            continue
        if piv != m:
            A[m], A[piv] = A[piv], A[m]
            for r in A:
                r[m], r[piv] = r[piv], r[m]
        inv = F.inv(A[m][m - 1])
        for i in range(m + 1, n):
            u = F.mul(A[i][m - 1], inv)
            if u == zero:
                continue
            A[i] = [F.sub(a, F.mul(u, b)) for a, b in zip(A[i], A[m])]
            for r in A:
                r[m] = F.add(r[m], F.mul(u, r[i]))
    # recurrence for characteristic polynomials of leading principal blocks
    polys = [(F.one,)]
    for k in range(1, n + 1):
        # p_k = (X - a_kk) p_{k-1} - sum_{i<k} a_ik * prod h * p_{i-1}
        pk = p_mul(F, (F.neg(A[k - 1][k - 1]), F.one), polys[k - 1])
        prod = F.one
        for i in range(k - 1, 0, -1):
            prod = F.mul(prod, A[i][i - 1])
            coeff = F.mul(prod, A[i - 1][k - 1])
            if coeff != zero:
                pk = p_sub(F, pk, p_scale(F, coeff, polys[i - 1]))
        polys.append(pk)
    return Polynomial.from_payload(F, polys[n])


def is_semisimple_element(x):
    """Diagonalisable over an algebraic closure: separable minimal polynomial."""
    return minimal_polynomial(x).is_separable()


def is_nilpotent_element(x):
    return (x ** x.nrows).is_zero()


def jordan_decompose(x):
    """Return (x_s, x_n) with x = x_s + x_n, x_s semisimple, x_n nilpotent, commuting.

    Needs a perfect field.  x_s is obtained by Newton iteration on the
    squarefree part of the minimal polynomial and is a polynomial in x.
    """
    F = x.field
    if not F.is_perfect():
        raise CapabilityError(f"Jordan decomposition needs a perfect field, not {F.name()}")
    n = x.nrows
    f = minimal_polynomial(x)
    g = radical_payload(F, f.coeffs)
    dg = p_deriv(F, g)
    gpoly = Polynomial.from_payload(F, g)
    dgpoly = Polynomial.from_payload(F, dg)
    s = x
    for _ in range(max(1, f.degree()) + 1):
        gs = poly_eval_matrix(gpoly, s)
        if gs.is_zero():
            break
        s = s - gs @ poly_eval_matrix(dgpoly, s).inverse()
    else:
        raise VerificationError("Newton iteration for the semisimple part did not converge")
    nil = x - s
    if not (s @ nil - nil @ s).is_zero():
        raise VerificationError("Jordan parts do not commute")
    if not (nil ** n).is_zero():
        raise VerificationError("nilpotent part is not nilpotent")
    if not is_semisimple_element(s):
        raise VerificationError("semisimple part is not semisimple")
    return s, nil


def jordan_decompose_in(context, x):
    """Jordan parts of a Lie(G) element, as canonical representatives."""
    s, nil = jordan_decompose(x)
    return context.normalize(s), context.normalize(nil)


def verify_polynomial_in(x, s):
    """Whether s lies in the unital algebra generated by x."""
    return associative_hull([x]).contains(s)


def jordan_closure(h, max_rounds=64):
    """Smallest subalgebra containing h and the Jordan parts of its basis elements,
    iterated to a fixpoint on bases.

    Returns (closure, method) with method 'basis-fixpoint'.
    """
    ctx = h.context
    cur = h
    for _ in range(max_rounds):
        extra = []
        for b in cur.basis:
            s, nil = jordan_decompose_in(ctx, b)
            extra.extend([s, nil])
        nxt = bracket_closure(ctx, cur.basis + extra)
        if nxt.dim == cur.dim:
            return LieSubalgebra._from_span(ctx, nxt.span, generators=h.generators), "basis-fixpoint"
        cur = nxt
    raise VerificationError("Jordan closure did not stabilise")  # pragma: no cover


def is_jordan_closed(h, rng=None, samples=8):
    """Whether the Jordan parts of the basis elements and of ``samples`` random
    elements lie in h.  False comes with a witness element and is certain;
    True is a check on the basis plus the sampled elements."""
    ctx = h.context
    elems = list(h.basis)
    if rng is not None:
        elems += [h.random_element(rng) for _ in range(samples)]
    for x in elems:
        s, nil = jordan_decompose_in(ctx, x)
        if not (h.contains(s) and h.contains(nil)):
            return Verdict(False, {"witness": x, "semisimple_part": s}, "jordan-parts")
    return Verdict(True, {"checked": len(elems)}, "basis-and-samples")
