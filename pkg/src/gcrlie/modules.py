"""The natural module of a matrix algebra: radicals, semisimplicity,
irreducibility, indecomposability and isomorphism witnesses.

Functions accept either a ``LieSubalgebra`` (acting on the natural module;
for pgl_n the coset representatives together with the identity) or a list of
square matrices.
"""

from __future__ import annotations

import itertools
import random as _random

from .errors import CapabilityError, DimensionError, VerificationError
from .fields import PrimeField, p_divmod, p_mul, p_pow, p_xgcd
from .jordan import minimal_polynomial
from .linalg import (Matrix, SpanBuilder, Subspace, hom_space, kernel_payload,
                     poly_eval_matrix, spin)
from .liealg import LieSubalgebra, MatrixAlgebra, associative_hull
from .polynomials import (Polynomial, factor_payload, find_roots_payload,
                          irreducible_payload, nth_root, root_multiplicity_payload)
from .verdict import Verdict, unknown

EXHAUSTIVE_LIMIT = 1 << 12


def action_of(obj):
    """(field, n, matrices) for a LieSubalgebra or a list of matrices."""
    if isinstance(obj, LieSubalgebra):
        return obj.field, obj.n, obj.action_matrices()
    mats = list(obj)
    if not mats:
        raise DimensionError("need at least one matrix")
    return mats[0].field, mats[0].nrows, mats


def hull(obj):
    F, n, mats = action_of(obj)
    return associative_hull(mats, F, n, unital=True)


# ---------------------------------------------------------------------------
# radicals
# ---------------------------------------------------------------------------

def _zero_algebra(F, n):
    return MatrixAlgebra(F, n, [], span=Subspace.zero(F, n * n))


def dickson_radical(A):
    """{x in A : tr(xy) = 0 for all y in A}; the radical in characteristic 0."""
    F = A.field
    B = A.basis
    if not B:
        return _zero_algebra(F, A.n)
    add, mul, zero = F.add, F.mul, F.zero
    n = A.n
    flat = [[a.rows[i][j] for i in range(n) for j in range(n)] for a in B]
    flat_t = [[a.rows[j][i] for i in range(n) for j in range(n)] for a in B]
    gram = []
    for u in flat_t:
        row = []
        for v in flat:
            acc = zero
            for x, y in zip(v, u):
                if x != zero and y != zero:
                    acc = add(acc, mul(x, y))
            row.append(acc)
        gram.append(tuple(row))
    ker = kernel_payload(F, gram, len(B))
    return MatrixAlgebra(F, A.n, [A.combine(k) for k in ker])


def _int_matpow_trace(M, e, mod):
    n = len(M)
    R = [[int(i == j) for j in range(n)] for i in range(n)]
    B = [row[:] for row in M]
    while e:
        if e & 1:
            R = [[sum(R[i][k] * B[k][j] for k in range(n)) % mod for j in range(n)] for i in range(n)]
        e >>= 1
        if e:
            B = [[sum(B[i][k] * B[k][j] for k in range(n)) % mod for j in range(n)] for i in range(n)]
    return sum(R[i][i] for i in range(n)) % mod


def _int_matmul_mod(A, B, p):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) % p for j in range(n)] for i in range(n)]


def _prime_field_radical(p, N, mats):
    """Radical of the GF(p)-algebra spanned by the integer matrices ``mats``
    (entries in range(p)), as coefficient vectors over that spanning set.

    I_{-1} = A and I_i = {a in I_{i-1} : g_i(ab) = 0 for all b in A}, where
    g_i(a) = (Tr(lift(a)^(p^i)) mod p^(i+1)) / p^i.  The last I_i with
    p^i <= N is the radical.
    """
    Fp = PrimeField(p)
    m = len(mats)
    current = [tuple(int(i == j) for j in range(m)) for i in range(m)]
    cur_mats = [M for M in mats]
    i = 0
    while p ** i <= N and current:
        mod = p ** (i + 1)
        cols = []
        for C in cur_mats:
            row = []
            for Bm in mats:
                P = _int_matmul_mod(C, Bm, p)
                t = _int_matpow_trace(P, p ** i, mod)
                if t % (p ** i):
                    raise VerificationError("trace functional not divisible as expected")
                row.append((t // p ** i) % p)
            cols.append(tuple(row))
        # x in kernel of x -> sum_k x_k cols[k]
        rows = list(zip(*cols)) if cols and cols[0] else []
        ker = kernel_payload(Fp, rows, len(current)) if rows else [
            tuple(int(a == b) for b in range(len(current))) for a in range(len(current))]
        new_current = []
        new_mats = []
        for x in ker:
            vec = tuple(sum(x[k] * current[k][j] for k in range(len(current))) % p for j in range(m))
            Mx = [[sum(x[k] * cur_mats[k][r][c] for k in range(len(current))) % p
                   for c in range(N)] for r in range(N)]
            new_current.append(vec)
            new_mats.append(Mx)
        current, cur_mats = new_current, new_mats
        i += 1
    return current


def _mult_matrix(F, c):
    """Matrix over GF(p) of multiplication by c on F = GF(p)^K."""
    K = F.prime_degree
    cols = []
    for l in range(K):
        e = F.from_prime_coords([int(i == l) for i in range(K)])
        cols.append(F.prime_coords(F.mul(c, e)))
    return [[cols[j][i] % F.characteristic for j in range(K)] for i in range(K)]


def finite_field_radical(A):
    """Radical over a finite field via restriction of scalars to GF(p)."""
    F = A.field
    n = A.n
    p = F.characteristic
    K = F.prime_degree
    if not A.basis:
        return _zero_algebra(F, n)
    units = [F.from_prime_coords([int(i == l) for i in range(K)]) for l in range(K)]
    big = []
    origin = []
    for a in A.basis:
        for l, u in enumerate(units):
            b = a.scale(u)
            M = [[0] * (n * K) for _ in range(n * K)]
            for r in range(n):
                for c in range(n):
                    blk = _mult_matrix(F, b.rows[r][c]) if b.rows[r][c] != F.zero else None
                    if blk is None:
                        continue
                    for x in range(K):
                        for y in range(K):
                            M[r * K + x][c * K + y] = blk[x][y]
            big.append(M)
            origin.append(b)
    coeffs = _prime_field_radical(p, n * K, big)
    mats = []
    for vec in coeffs:
        acc = Matrix.zeros(F, n)
        for c, b in zip(vec, origin):
            if c:
                acc = acc + b.scale(F.from_int(c))
        mats.append(acc)
    return MatrixAlgebra(F, n, mats)


def _power_spaces(J, limit):
    """Spans of J, J^2, ... until zero (or ``limit`` steps)."""
    F = J.field
    n = J.n
    cur = J.basis
    powers = [J.span]
    for _ in range(limit):
        if not cur:
            return powers
        prods = [a @ b for a in cur for b in J.basis]
        sp = Subspace(F, n * n, [m.vec() for m in prods])
        powers.append(sp)
        cur = [Matrix.from_vec(F, n, v) for v in sp.basis]
    return powers


def is_nilpotent_space(J):
    powers = _power_spaces(J, J.n + 1)
    return powers[-1].is_zero()


def radical_layers(J, n):
    """V = L_0 > L_1 = JV > L_2 = J^2 V > ... > 0."""
    F = J.field
    layers = [Subspace.full(F, n)]
    while not layers[-1].is_zero():
        cur = layers[-1]
        nxt = Subspace(F, n, [j.apply(v) for j in J.basis for v in cur.basis])
        if nxt.dim == cur.dim:
            raise VerificationError("radical does not act nilpotently")
        layers.append(nxt)
    return layers


def layer_image(A, layers):
    """Block-diagonal image of A acting on the successive quotients of ``layers``."""
    F = A.field
    n = A.n
    # adapted basis, deepest layer first
    sb = SpanBuilder(F, n)
    basis = []
    bounds = []
    for L in reversed(layers):
        for v in L.basis:
            if sb.add(v):
                basis.append(v)
        bounds.append(len(basis))
    g = Matrix.from_columns(F, basis)
    gi = g.inverse()
    bounds = [0] + [b for b in bounds if b > 0]
    bounds = sorted(set(bounds))
    block = {}
    for k in range(len(bounds) - 1):
        for i in range(bounds[k], bounds[k + 1]):
            block[i] = k
    out = []
    for a in A.basis:
        y = gi @ a @ g
        rows = [[y.rows[i][j] if block[i] == block[j] else F.zero for j in range(n)] for i in range(n)]
        out.append(Matrix.from_payload(F, rows))
    return MatrixAlgebra(F, n, out)


def jacobson_radical(A, verify=True):
    """Jacobson radical of a unital matrix algebra.

    Characteristic 0 uses the trace form; finite fields use the p-power trace
    functionals over the prime field.  Other fields raise ``CapabilityError``.
    With ``verify`` the result is checked to be a nilpotent ideal whose
    quotient, realised on the radical layers, has zero radical.
    """
    F = A.field
    kind = F.radical_algorithm()
    if kind == "dickson":
        J = dickson_radical(A)
    elif kind == "finite_field":
        J = finite_field_radical(A)
    else:
        raise CapabilityError(f"radical unavailable over {F.name()}")
    if verify:
        verify_radical(A, J)
    return J


def verify_radical(A, J):
    for j in J.basis:
        if not A.contains(j):
            raise VerificationError("radical element outside the algebra")
        for a in A.basis:
            if not (J.contains(a @ j) and J.contains(j @ a)):
                raise VerificationError("radical is not an ideal")
    if not is_nilpotent_space(J):
        raise VerificationError("radical is not nilpotent")
    layers = radical_layers(J, A.n)
    img = layer_image(A, layers)
    if img.dim != A.dim - J.dim:
        raise VerificationError("quotient by the radical has the wrong dimension")
    if jacobson_radical(img, verify=False).dim != 0:
        raise VerificationError("quotient by the radical is not semisimple")


def socle_series(J, n):
    """S_1 = {v : Jv = 0}, S_{i+1} = {v : Jv in S_i}, up to the whole space."""
    F = J.field
    series = []
    S = Subspace.zero(F, n)
    while not S.is_full():
        cols = []
        for c in range(n):
            e = tuple(F.one if i == c else F.zero for i in range(n))
            col = []
            for j in J.basis:
                col.extend(S.reduce(j.apply(e)))
            cols.append(tuple(col))
        if cols and cols[0]:
            nxt = Subspace(F, n, kernel_payload(F, list(zip(*cols)), n))
        else:
            nxt = Subspace.full(F, n)
        if nxt.dim == S.dim:
            raise VerificationError("socle series stalled")
        series.append(nxt)
        S = nxt
    return series


# ---------------------------------------------------------------------------
# searching endomorphism algebras
# ---------------------------------------------------------------------------

def commutant(obj):
    """End_A(V) as a matrix algebra."""
    F, n, mats = action_of(obj)
    basis = hom_space(mats, mats)
    return MatrixAlgebra(F, n, basis)


def _elements_to_try(E, rng, budget):
    """Basis elements, then all elements when few, else random ones.

    Yields (matrix, exhaustive_flag_at_end)."""
    F = E.field
    if F.is_finite and F.order() ** E.dim <= EXHAUSTIVE_LIMIT:
        elems = list(F.elements())
        for coeffs in itertools.product(elems, repeat=E.dim):
            yield E.combine(coeffs)
        return
    for b in E.basis:
        yield b
    for _ in range(budget):
        yield E.random_element(rng)


def _exhaustive(E):
    F = E.field
    return F.is_finite and F.order() ** E.dim <= EXHAUSTIVE_LIMIT


def _proper_factor(F, f):
    """A nonconstant proper factor of f, or None if none is known."""
    roots, _ = find_roots_payload(F, f)
    if roots and len(f) > 2:
        return (F.neg(roots[0]), F.one)
    fac = factor_payload(F, f)
    if fac:
        g, e = fac[0]
        if len(g) < len(f):
            return g
    return None


def _coprime_split(F, f):
    """(g, h) monic coprime, both nonconstant with g*h = f, or None."""
    fac = factor_payload(F, f)
    if fac is None:
        roots, _ = find_roots_payload(F, f)
        for r in roots:
            m = root_multiplicity_payload(F, f, r)
            g = p_pow(F, (F.neg(r), F.one), m)
            if len(g) < len(f):
                return g, p_divmod(F, f, g)[0]
        return None
    if len(fac) < 2:
        return None
    g = p_pow(F, fac[0][0], fac[0][1])
    return g, p_divmod(F, f, g)[0]


def _power_of_irreducible(F, f):
    """The irreducible p with f = p^m when that can be certified, else None."""
    roots, _ = find_roots_payload(F, f)
    for r in roots:
        if root_multiplicity_payload(F, f, r) == len(f) - 1:
            return (F.neg(r), F.one)
        return None
    fac = factor_payload(F, f)
    if fac is not None and len(fac) == 1:
        return fac[0][0]
    if irreducible_payload(F, f) is True:
        return f
    return None


def idempotent_from_split(x, g, h):
    """Idempotent u(x) with u = 1 mod g and u = 0 mod h."""
    F = x.field
    _, s, t = p_xgcd(F, g, h)  # s g + t h = 1
    u = Polynomial.from_payload(F, p_mul(F, t, h))
    e = poly_eval_matrix(u, x)
    if not (e @ e - e).is_zero():
        raise VerificationError("CRT idempotent is not idempotent")
    return e


# ---------------------------------------------------------------------------
# module predicates
# ---------------------------------------------------------------------------

def is_absolutely_irreducible(obj):
    """Burnside: the hull is all of M_n."""
    F, n, mats = action_of(obj)
    return associative_hull(mats, F, n).dim == n * n


def _spin_witness(mats, F, n, A):
    """A proper nonzero invariant subspace found by spinning simple vectors."""
    candidates = [tuple(F.one if i == j else F.zero for i in range(n)) for j in range(n)]
    for a in A.basis:
        if a.is_scalar():
            continue
        f = minimal_polynomial(a)
        roots, _ = find_roots_payload(F, f.coeffs)
        for r in roots:
            shifted = a - Matrix.identity(F, n).scale(r)
            candidates.extend(shifted.kernel()[:2])
    for v in candidates:
        W = spin(mats, [v], F, n)
        if 0 < W.dim < n:
            return W
    return None


def is_irreducible(obj, rng=None, budget=64):
    """Decide irreducibility of the natural module.

    Certificates: an invariant subspace, a nonzero radical, a dimension count
    against the commutant, a zero divisor in the commutant, or a field
    generator of the commutant.
    """
    F, n, mats = action_of(obj)
    rng = rng or _random.Random(0)
    A = associative_hull(mats, F, n)
    if A.dim == n * n:
        return Verdict(True, {"hull_dim": A.dim, "absolute": True}, "burnside")
    W = _spin_witness(mats, F, n, A)
    if W is not None:
        return Verdict(False, {"invariant_subspace": W}, "spin")
    if F.radical_algorithm() != "none":
        J = jacobson_radical(A)
        if J.dim:
            return Verdict(False, {"invariant_subspace": radical_layers(J, n)[1],
                                   "radical_dim": J.dim}, "radical")
    E = commutant(mats)
    e = E.dim
    if A.dim * e != n * n:
        return Verdict(False, {"hull_dim": A.dim, "commutant_dim": e}, "dimension-count")
    if e == 1:
        return Verdict(True, {"hull_dim": A.dim, "commutant_dim": 1}, "commutant")
    exhaustive = _exhaustive(E)
    for x in _elements_to_try(E, rng, budget):
        if x.is_scalar():
            continue
        f = minimal_polynomial(x)
        irr = irreducible_payload(F, f.coeffs)
        if irr is True and f.degree() == e:
            return Verdict(True, {"hull_dim": A.dim, "commutant_dim": e,
                                  "field_generator": x, "minimal_polynomial": f}, "commutant")
        if irr is False:
            g = _proper_factor(F, f.coeffs)
            if g is not None:
                K = poly_eval_matrix(Polynomial.from_payload(F, g), x).kernel_space()
                if 0 < K.dim < n:
                    return Verdict(False, {"invariant_subspace": K}, "commutant-zero-divisor")
    if exhaustive:
        # every nonzero commutant element is invertible: a division algebra
        return Verdict(True, {"hull_dim": A.dim, "commutant_dim": e}, "commutant-exhaustive")
    return unknown("commutant structure undecided", hull_dim=A.dim, commutant_dim=e)


def find_nilpotent_ideal(A, rng=None, budget=16):
    """A nonzero nilpotent two-sided ideal of A, or None if none was found."""
    F = A.field
    n = A.n
    rng = rng or _random.Random(0)
    pool = list(A.basis) + [A.random_element(rng) for _ in range(budget)]
    for a in pool:
        if a.is_scalar():
            continue
        f = minimal_polynomial(a)
        roots, _ = find_roots_payload(F, f.coeffs)
        for r in roots:
            m = root_multiplicity_payload(F, f.coeffs, r)
            if m < 2:
                continue
            rest = p_divmod(F, f.coeffs, p_pow(F, (F.neg(r), F.one), m))[0]
            lin = a - Matrix.identity(F, n).scale(r)
            cand = lin @ poly_eval_matrix(Polynomial.from_payload(F, rest), a)
            if cand.is_zero():
                continue
            ideal = MatrixAlgebra(F, n, [b @ cand @ c for b in A.basis for c in A.basis])
            if ideal.dim and is_nilpotent_space(ideal):
                return ideal
    return None


def is_semisimple_module(obj, rng=None, budget=64):
    """Semisimplicity of the natural module."""
    F, n, mats = action_of(obj)
    A = associative_hull(mats, F, n)
    kind = F.radical_algorithm()
    if kind != "none":
        J = jacobson_radical(A)
        if J.dim == 0:
            return Verdict(True, {"radical_dim": 0}, f"radical:{kind}")
        return Verdict(False, {"radical_dim": J.dim,
                               "invariant_subspace": radical_layers(J, n)[1]}, f"radical:{kind}")
    irr = is_irreducible(mats, rng, budget)
    if irr.value is True:
        return Verdict(True, dict(irr.certificate), "irreducible")
    ideal = find_nilpotent_ideal(A, rng)
    if ideal is not None:
        return Verdict(False, {"nilpotent_ideal": ideal.basis,
                               "invariant_subspace": radical_layers(ideal, n)[1]},
                       "nilpotent-ideal")
    split = decompose(mats, rng, budget)
    if split is not None:
        parts = []
        for W in split:
            sub = restrict_to(mats, W)
            parts.append(is_semisimple_module(sub, rng, budget))
        if all(p.value is True for p in parts):
            return Verdict(True, {"summands": split}, "decomposition")
        if any(p.value is False for p in parts):
            return Verdict(False, {"summands": split}, "decomposition")
    return unknown("no radical algorithm over an imperfect field")


def restrict_to(mats, W):
    """Matrices of the action on an invariant subspace W in its echelon basis."""
    F = W.field
    B = W.basis
    out = []
    for m in mats:
        cols = [W.coordinates(m.apply(v)) for v in B]
        out.append(Matrix.from_columns(F, cols))
    return out


def decompose(obj, rng=None, budget=64):
    """A pair (U, W) of nonzero invariant subspaces with V = U + W direct, or None."""
    F, n, mats = action_of(obj)
    rng = rng or _random.Random(0)
    E = commutant(mats)
    if E.dim == 1:
        return None
    I = Matrix.identity(F, n)
    for x in _elements_to_try(E, rng, budget):
        if x.is_scalar():
            continue
        if _exhaustive(E):
            if (x @ x - x).is_zero():
                return (x.image_space(), (I - x).image_space())
            continue
        f = minimal_polynomial(x)
        split = _coprime_split(F, f.coeffs)
        if split is not None:
            e = idempotent_from_split(x, *split)
            return (e.image_space(), (I - e).image_space())
    return None


def is_indecomposable(obj, rng=None, budget=64):
    """Indecomposability of the natural module (locality of its commutant)."""
    F, n, mats = action_of(obj)
    rng = rng or _random.Random(0)
    E = commutant(mats)
    if E.dim == 1:
        return Verdict(True, {"commutant_dim": 1}, "commutant")
    I = Matrix.identity(F, n)
    if _exhaustive(E):
        for x in _elements_to_try(E, rng, budget):
            if not x.is_scalar() and not x.is_zero() and (x @ x - x).is_zero():
                return Verdict(False, {"idempotent": x,
                                       "summands": [x.image_space(), (I - x).image_space()]},
                               "idempotent-exhaustive")
        return Verdict(True, {"commutant_dim": E.dim}, "idempotent-exhaustive")
    JE = None
    if F.radical_algorithm() != "none":
        JE = jacobson_radical(E)
        if E.dim - JE.dim == 1:
            return Verdict(True, {"commutant_dim": E.dim, "commutant_radical_dim": JE.dim},
                           "local-commutant")
    top = E.dim - JE.dim if JE is not None else None
    for x in _elements_to_try(E, rng, budget):
        if x.is_scalar():
            continue
        f = minimal_polynomial(x)
        split = _coprime_split(F, f.coeffs)
        if split is not None:
            e = idempotent_from_split(x, *split)
            return Verdict(False, {"idempotent": e,
                                   "summands": [e.image_space(), (I - e).image_space()]},
                           "idempotent")
        prime = _power_of_irreducible(F, f.coeffs)
        if prime is None:
            continue
        if top is not None and len(prime) - 1 == top:
            return Verdict(True, {"commutant_dim": E.dim, "generator": x,
                                  "minimal_polynomial": f}, "local-commutant")
        if top is None and f.degree() == E.dim:
            # E = k[x] with minimal polynomial a prime power: a local ring
            return Verdict(True, {"commutant_dim": E.dim, "generator": x,
                                  "minimal_polynomial": f}, "local-commutant")
    return unknown("commutant locality undecided", commutant_dim=E.dim)


# ---------------------------------------------------------------------------
# isomorphism witnesses
# ---------------------------------------------------------------------------

def module_iso_witness(source, target, rng=None, budget=256, special=False):
    """An invertible g with g X_i g^{-1} = Y_i, or None if none was found.

    Exhaustive over the homomorphism space for small finite fields, random
    otherwise.  With ``special`` the witness also has determinant 1.
    """
    X, Y = list(source), list(target)
    if len(X) != len(Y):
        raise DimensionError("source and target tuples differ in length")
    if not X:
        raise DimensionError("empty tuples carry no dimension")
    F = X[0].field
    n = X[0].nrows
    H = hom_space(X, Y)
    if not H:
        return None
    rng = rng or _random.Random(0)
    space = MatrixAlgebra(F, n, H)

    def accept(g):
        if not g.is_invertible():
            return None
        if not special:
            return g
        d = g.det_payload()
        if d == F.one:
            return g
        c = nth_root(F, F.inv(d), n)
        if c is None:
            return None
        return g.scale(c)

    if F.is_finite and F.order() ** space.dim <= (1 << 16):
        elems = list(F.elements())
        for coeffs in itertools.product(elems, repeat=space.dim):
            g = accept(space.combine(coeffs))
            if g is not None:
                return g
        return None
    for b in space.basis:
        g = accept(b)
        if g is not None:
            return g
    for _ in range(budget):
        g = accept(space.random_element(rng))
        if g is not None:
            return g
    return None


def is_conjugation_witness(g, source, target):
    gi = g.inverse()
    return all((g @ x @ gi) == y for x, y in zip(source, target))
