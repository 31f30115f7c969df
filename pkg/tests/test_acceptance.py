"""Acceptance criteria 1-7.

Each test prints one ``criterion N: PASS/FAIL`` line (also repeated in the
pytest terminal summary) and must finish within TIME_LIMIT seconds.  All
comparisons are exact: the tolerance on every agreement rate is zero.
Independent checks are computed here from first principles rather than
through the routine under test wherever that is practical.
"""

import itertools
import random
import time

import pytest

from gcrlie import gcr, oracle
from gcrlie.context import GroupContext
from gcrlie.fields import PrimeField, Rationals
from gcrlie.jordan import is_jordan_closed, jordan_closure, jordan_decompose
from gcrlie.liealg import bracket_closure, solvable_radical_char0, structural_series
from gcrlie.linalg import Matrix, Subspace, solve_linear
from gcrlie.papercheck import papercheck, report
from gcrlie.polynomials import Polynomial
from gcrlie.sampling import (random_matrix, random_parabolic_element, random_subalgebra,
                             random_unipotent, small_element)

TIME_LIMIT = 60.0          # seconds per criterion
MISMATCH_TOLERANCE = 0     # exact agreement everywhere

C2_PER_CONTEXT = 100       # 3 contexts -> 300 instances
C3_INSTANCES = 200
C4_INSTANCES = 200
C5_JORDAN_MATRICES = 500   # per field
C5_PROPERTY_INSTANCES = 100
C5_IMPLICATION_INSTANCES = 200
C5_DECOMPOSITIONS = 100
C6_PER_FIELD = 100         # 2 fields -> 200 nilpotent tuples, and as many mixed tuples
C7_PER_CONTEXT = 50


class Clock:
    def __init__(self):
        self.start = time.perf_counter()

    @property
    def elapsed(self):
        return time.perf_counter() - self.start


# ---------------------------------------------------------------------------
# independent helpers
# ---------------------------------------------------------------------------

def minpoly_by_powers(x):
    """Minimal polynomial from the first linear dependence among I, x, x^2, ..."""
    F = x.field
    powers = [Matrix.identity(F, x.nrows).vec()]
    p = Matrix.identity(F, x.nrows)
    while True:
        p = p @ x
        v = p.vec()
        sol = solve_linear(Matrix.from_columns(F, powers), v)
        if sol is not None:
            coeffs = [F.sub(F.zero, c) for c in sol[0]] + [F.one]
            return Polynomial.from_payload(F, coeffs)
        powers.append(v)


def semisimple_by_powers(x):
    return minpoly_by_powers(x).is_separable()


def in_polynomial_span(x, s):
    F = x.field
    n = x.nrows
    vecs, p = [], Matrix.identity(F, n)
    for _ in range(n):
        vecs.append(p.vec())
        p = p @ x
    return Subspace(F, n * n, vecs).contains(s.vec())


def strictly_triangular_words_vanish(tup, n):
    """All products of n members of the tuple are zero."""
    for word in itertools.product(tup, repeat=n):
        p = word[0]
        for w in word[1:]:
            p = p @ w
        if not p.is_zero():
            return False
    return True


def common_strict_flag_exists(tup, q, n):
    """Brute force over complete flags of GF(q)^n."""
    F = PrimeField(q)
    for flag in oracle.enumerate_flags(n, q, "complete"):
        steps = [Subspace.zero(F, n)] + list(flag.steps) + [Subspace.full(F, n)]
        if all(lower.contains(x.apply(v)) for x in tup
               for lower, upper in zip(steps, steps[1:]) for v in upper.basis):
            return True
    return False


def limit_is_zero(lam, x):
    """lambda(a) x lambda(a)^{-1} -> 0: in the frame, entry (i, j) scales by a^(w_i - w_j)."""
    y = lam.frame_inv @ x @ lam.frame
    w = lam.weights
    n = x.nrows
    return all(y[i, j] == x.field(0) or w[i] > w[j] for i in range(n) for j in range(n))


def random_invertible(F, n, rng):
    while True:
        g = random_matrix(F, n, rng, density=0.8, height=2)
        if g.is_invertible():
            return g


def conjugate_algebra(h, g):
    gi = g.inverse()
    return bracket_closure(h.context, [g @ x @ gi for x in h.generators])


def random_toral(ctx, rng):
    """Polynomials in one semisimple matrix (diagonal or with a quadratic block), conjugated."""
    F = ctx.field
    n = ctx.n
    if n >= 2 and rng.random() < 0.5:
        a = rng.choice([-1, 2, 3, 5])            # X^2 - a irreducible over Q
        blocks = [[0, a], [1, 0]]
        rows = [[F.zero] * n for _ in range(n)]
        rows[0][1], rows[1][0] = F.from_int(blocks[0][1]), F.one
        for i in range(2, n):
            rows[i][i] = small_element(F, rng)
        S = Matrix.from_payload(F, rows)
    else:
        S = Matrix.diagonal(F, [small_element(F, rng) for _ in range(n)])
    g = random_unipotent(F, n, rng)
    S = g @ S @ g.inverse()
    gens = []
    for _ in range(rng.randint(1, 2)):
        p = Matrix.zeros(F, n)
        power = Matrix.identity(F, n)
        for _ in range(3):
            p = p + power.scale(small_element(F, rng))
            power = power @ S
        gens.append(p)
    return bracket_closure(ctx, gens)


def random_borel_subalgebra(ctx, rng):
    F = ctx.field
    n = ctx.n
    gens = [random_parabolic_element(F, [1] * n, rng, density=0.7) for _ in range(rng.randint(1, 2))]
    g = random_unipotent(F, n, rng)
    gi = g.inverse()
    return bracket_closure(ctx, [g @ x @ gi for x in gens])


def random_nilpotent_tuple(F, n, rng):
    """Conjugates of strictly upper triangular matrices; a shared conjugator keeps a common flag."""
    size = rng.randint(1, 3)
    shared = rng.random() < 0.5
    g0 = random_invertible(F, n, rng)
    out = []
    for _ in range(size):
        u = Matrix.from_payload(F, [[small_element(F, rng) if j > i else F.zero for j in range(n)]
                                    for i in range(n)])
        g = g0 if shared else random_invertible(F, n, rng)
        out.append(g @ u @ g.inverse())
    return out


def random_nonzero_semisimple(F, n, rng):
    while True:
        d = Matrix.diagonal(F, [small_element(F, rng) for _ in range(n)])
        if not d.is_zero():
            g = random_invertible(F, n, rng)
            return g @ d @ g.inverse()


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------

def test_criterion_1_paper_fixtures(acceptance_line):
    clock = Clock()
    rep = report(papercheck())
    failed = [f["id"] for f in rep["fixtures"] if not f["passed"]]
    checks = sum(f["checks"] for f in rep["fixtures"])
    ok = rep["passed"] and clock.elapsed < TIME_LIMIT
    acceptance_line(1, ok, f"{len(rep['fixtures'])} fixtures, {checks} checks, "
                           f"failed={failed}, {clock.elapsed:.1f}s")
    assert not failed
    assert clock.elapsed < TIME_LIMIT


def test_criterion_2_oracle_equivalence(acceptance_line):
    clock = Clock()
    mismatches = []
    verdicts = {True: 0, False: 0}
    total = 0
    for n, q in [(2, 2), (2, 3), (3, 2)]:
        ctx = GroupContext("GL", n, PrimeField(q))
        for seed in range(C2_PER_CONTEXT):
            h = random_subalgebra(ctx, random.Random(seed))
            radical = gcr.is_gcr(h).value
            definition = oracle.def_based_gcr(h).value
            building = oracle.is_delta_cr(oracle.subcomplex(h))
            total += 1
            verdicts[definition] += 1
            if not radical == definition == building:
                mismatches.append((n, q, seed, radical, definition, building))
    ok = len(mismatches) <= MISMATCH_TOLERANCE and total >= 300 and clock.elapsed < TIME_LIMIT
    acceptance_line(2, ok, f"{total} instances, {len(mismatches)} mismatches, "
                           f"cr/non-cr={verdicts[True]}/{verdicts[False]}, {clock.elapsed:.1f}s")
    assert mismatches == []
    assert total >= 300 and verdicts[True] and verdicts[False]
    assert clock.elapsed < TIME_LIMIT


def test_criterion_3_uniqueness(acceptance_line):
    clock = Clock()
    fields = [PrimeField(2), PrimeField(3), Rationals()]
    instances, failures, seed = 0, [], 0
    nontrivial = 0
    while instances < C3_INSTANCES and seed < 20 * C3_INSTANCES:
        rng = random.Random(seed)
        F = fields[seed % 3]
        seed += 1
        ctx = GroupContext("GL", rng.choice([2, 3]), F)
        h = random_subalgebra(ctx, rng)
        flags = gcr.admissible_flags(h, rng)
        if len(flags) < 2:
            continue
        instances += 1
        r1 = gcr.semisimplify(h, flag=flags[0], rng=rng)
        r2 = gcr.semisimplify(h, flag=flags[1], rng=rng)
        w = gcr.ssimp_uniqueness_check(h, r1, r2, rng)
        X = [r1.lam.limit(x) for x in h.generators]
        Y = [r2.lam.limit(x) for x in h.generators]
        if X != Y:
            nontrivial += 1
        verified = (w.found and w.matrix.is_invertible()
                    and all(w.matrix @ x == y @ w.matrix for x, y in zip(X, Y))
                    and gcr.is_gcr(r1.image).value and gcr.is_gcr(r2.image).value)
        if not verified:
            failures.append((F.name(), seed - 1))
    ok = (not failures and instances >= C3_INSTANCES and clock.elapsed < TIME_LIMIT)
    acceptance_line(3, ok, f"{instances} instances with two flags ({nontrivial} with distinct images), "
                           f"{len(failures)} without a verified witness, {clock.elapsed:.1f}s")
    assert failures == []
    assert instances >= C3_INSTANCES
    assert clock.elapsed < TIME_LIMIT


def test_criterion_4_char0_routes(acceptance_line):
    clock = Clock()
    Q = Rationals()
    mismatches = []
    tally = {}
    for seed in range(C4_INSTANCES):
        rng = random.Random(seed)
        h = random_subalgebra(GroupContext("GL", rng.choice([2, 3]), Q), rng)
        routes = (gcr.adjoint_module_semisimple(h).value,
                  gcr.is_gcr(h).value,
                  gcr.is_toral(solvable_radical_char0(h)).value)
        tally[routes] = tally.get(routes, 0) + 1
        if len(set(routes)) != 1:
            mismatches.append((seed, routes))
    ok = len(mismatches) <= MISMATCH_TOLERANCE and clock.elapsed < TIME_LIMIT
    acceptance_line(4, ok, f"{C4_INSTANCES} instances, {len(mismatches)} disagreements, "
                           f"true/false={tally.get((True,) * 3, 0)}/{tally.get((False,) * 3, 0)}, "
                           f"{clock.elapsed:.1f}s")
    assert mismatches == []
    assert tally.get((True,) * 3) and tally.get((False,) * 3)
    assert clock.elapsed < TIME_LIMIT


def test_criterion_5_structural_invariants(acceptance_line):
    clock = Clock()
    Q, F5 = Rationals(), PrimeField(5)
    failures = {}

    def fail(key, info):
        failures.setdefault(key, []).append(info)

    # Jordan decomposition
    for F in (Q, F5):
        rng = random.Random(5)
        for i in range(C5_JORDAN_MATRICES):
            n = rng.choice([2, 3, 4])
            x = random_matrix(F, n, rng, density=0.7)
            s, nil = jordan_decompose(x)
            if not (s + nil == x and (s @ nil - nil @ s).is_zero() and (nil ** n).is_zero()
                    and semisimple_by_powers(s) and in_polynomial_span(x, s)):
                fail("jordan", (F.name(), i))

    # closure idempotence, conjugation and closure invariance of is_gcr
    for seed in range(C5_PROPERTY_INSTANCES):
        rng = random.Random(seed)
        F = Q if seed % 2 else PrimeField(3)
        ctx = GroupContext("GL", rng.choice([2, 3]), F)
        h = random_subalgebra(ctx, rng)
        hj, _ = jordan_closure(h)
        if jordan_closure(hj)[0] != hj or not h.is_subalgebra_of(hj):
            fail("idempotence", seed)
        v = gcr.is_gcr(h).value
        if gcr.is_gcr(conjugate_algebra(h, random_invertible(F, ctx.n, rng))).value != v:
            fail("conjugation", seed)
        if gcr.is_gcr(hj).value != v:
            fail("closure", seed)

    # implications over Q
    hyp = {"gcr=>jordan-closed": 0, "toral=>gcr": 0, "solvable+gcr=>toral": 0}
    for seed in range(C5_IMPLICATION_INSTANCES):
        rng = random.Random(10_000 + seed)
        ctx = GroupContext("GL", rng.choice([2, 3]), Q)
        h = random_subalgebra(ctx, rng)
        if gcr.is_gcr(h).value:
            hyp["gcr=>jordan-closed"] += 1
            if not is_jordan_closed(h, rng).value:
                fail("gcr=>jordan-closed", seed)

        t = random_toral(ctx, rng)
        if gcr.is_toral(t).value:
            hyp["toral=>gcr"] += 1
            if not gcr.is_gcr(t).value:
                fail("toral=>gcr", seed)
        else:
            fail("toral sampler", seed)

        s = [random_subalgebra, random_toral, random_borel_subalgebra][seed % 3](ctx, rng)
        if structural_series(s).solvable and gcr.is_gcr(s).value:
            hyp["solvable+gcr=>toral"] += 1
            if not gcr.is_toral(s).value:
                fail("solvable+gcr=>toral", seed)

    # solvable decompositions
    decomps = 0
    seed = 0
    while decomps < C5_DECOMPOSITIONS:
        rng = random.Random(20_000 + seed)
        seed += 1
        ctx = GroupContext("GL", rng.choice([2, 3]), Q)
        h, _ = jordan_closure(random_borel_subalgebra(ctx, rng))
        decomps += 1
        dec = gcr.solvable_decomposition(h, rng=rng)
        s, nil = dec.s, dec.n
        n = ctx.n
        ok = (s.dim + nil.dim == h.dim
              and s.span.sum(nil.span) == h.span
              and s.span.intersect(nil.span).is_zero()
              and all((x @ y - y @ x).is_zero() for x in s.basis for y in s.basis)
              and all(semisimple_by_powers(x) for x in s.basis)
              and all((x ** n).is_zero() for x in nil.basis)
              and all(nil.contains(ctx.bracket(a, b)) for a in h.basis for b in nil.basis)
              and all(nil.contains(ctx.bracket(a, b)) for a in h.basis for b in h.basis))
        if not ok:
            fail("decomposition", seed - 1)

    ok = not failures and all(hyp.values()) and clock.elapsed < TIME_LIMIT
    acceptance_line(5, ok, f"{2 * C5_JORDAN_MATRICES} Jordan decompositions, "
                           f"{C5_PROPERTY_INSTANCES} closure/conjugation instances, "
                           f"implications on {C5_IMPLICATION_INSTANCES} each (hypothesis met: {hyp}), "
                           f"{decomps} decompositions, failures={sorted(failures)}, {clock.elapsed:.1f}s")
    assert failures == {}
    assert all(hyp.values())
    assert clock.elapsed < TIME_LIMIT


def test_criterion_6_instability(acceptance_line):
    clock = Clock()
    n = 3
    mismatches = []
    unstable = stable = mixed = 0
    for F, q in [(PrimeField(2), 2), (Rationals(), None)]:
        ctx = GroupContext("GL", n, F)
        for seed in range(C6_PER_FIELD):
            rng = random.Random(seed)
            tup = random_nilpotent_tuple(F, n, rng)
            v = gcr.instability_test(ctx, tup, rng)
            words = strictly_triangular_words_vanish(tup, n)
            agree = v.value == words
            if q is not None:
                agree = agree and (common_strict_flag_exists(tup, q, n) == v.value)
            if v.value:
                unstable += 1
                agree = agree and all(limit_is_zero(v.certificate["lambda"], x) for x in tup)
            else:
                stable += 1
            if not agree:
                mismatches.append((F.name(), "nilpotent", seed))

            mix = random_nilpotent_tuple(F, n, rng)
            mix.insert(rng.randrange(len(mix) + 1), random_nonzero_semisimple(F, n, rng))
            mixed += 1
            if gcr.instability_test(ctx, mix, rng).value is not False:
                mismatches.append((F.name(), "mixed", seed))
    ok = not mismatches and unstable and stable and clock.elapsed < TIME_LIMIT
    acceptance_line(6, ok, f"{unstable + stable} nilpotent tuples (unstable/stable={unstable}/{stable}), "
                           f"{mixed} mixed tuples, {len(mismatches)} mismatches, {clock.elapsed:.1f}s")
    assert mismatches == []
    assert unstable and stable
    assert clock.elapsed < TIME_LIMIT


def test_criterion_7_centre_search(acceptance_line):
    clock = Clock()
    F = PrimeField(2)
    found = tried = 0
    failures = []
    for n in (2, 3):
        ctx = GroupContext("GL", n, F)
        seed = 0
        kept = 0
        while kept < C7_PER_CONTEXT and seed < 50 * C7_PER_CONTEXT:
            rng = random.Random(1000 + seed)
            seed += 1
            # mostly one generator inside a Borel: the non-completely-reducible case
            h = random_subalgebra(ctx, rng)
            if oracle.is_delta_cr(oracle.subcomplex(h)):
                continue
            kept += 1
            tried += 1
            centre = oracle.centre_search(h)
            if centre is None:
                failures.append((n, seed - 1))
                continue
            mats = oracle.avatar_matrices(h)
            in_sigma = all(centre.is_stable_under(m) for m in mats)
            fixed = all(V.image(g) == V for g in oracle.stabiliser(h) for V in centre.steps)
            if in_sigma and fixed:
                found += 1
            else:
                failures.append((n, seed - 1))
    ok = not failures and tried >= C7_PER_CONTEXT * 2 and clock.elapsed < TIME_LIMIT
    acceptance_line(7, ok, f"{tried} non-Delta-cr instances, centre found in {found}, {clock.elapsed:.1f}s")
    assert failures == []
    assert tried >= 2 * C7_PER_CONTEXT
    assert clock.elapsed < TIME_LIMIT


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
