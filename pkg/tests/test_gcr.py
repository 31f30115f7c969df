import random

import pytest
from hypothesis import given, settings, strategies as st

from gcrlie import gcr
from gcrlie.context import GroupContext
from gcrlie.errors import CapabilityError, PreconditionError
from gcrlie.fields import PrimeField, RationalFunctionField, Rationals, SimpleExtension
from gcrlie.jordan import is_jordan_closed, jordan_closure
from gcrlie.liealg import bracket_closure, structural_series
from gcrlie.linalg import Flag, Matrix, Subspace
from gcrlie.modules import is_conjugation_witness, is_semisimple_module, restrict_to
from gcrlie.sampling import random_subalgebra, random_unipotent

from conftest import mat, unit

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture
def pgl2():
    F = PrimeField(2)
    ctx = GroupContext("PGL", 2, F)
    h = bracket_closure(ctx, [unit(F, 2, 0, 1), unit(F, 2, 1, 0)])
    m = bracket_closure(ctx, [unit(F, 2, 0, 1)])
    return ctx, h, m


def _mixed(Q):
    return Matrix.diagonal(Q, [1, 1, 0]) + unit(Q, 3, 0, 1)


def _borel(Q):
    return bracket_closure(GroupContext("SL", 2, Q), [mat(Q, [[1, 0], [0, -1]]), unit(Q, 2, 0, 1)])


def _e(F, n, i):
    return tuple(F.one if j == i else F.zero for j in range(n))


class TestVerdicts:
    def test_pgl2_pair(self, pgl2):
        _, h, _ = pgl2
        assert gcr.is_gcr(h).value is True
        assert gcr.is_gir(h).value is True

    def test_pgl2_ideal(self, pgl2):
        _, _, m = pgl2
        assert gcr.is_gcr(m).value is False

    def test_zero(self):
        Q = Rationals()
        assert gcr.is_gcr(bracket_closure(GroupContext("GL", 3, Q), [])).value is True

    def test_weil(self):
        K = RationalFunctionField(PrimeField(2), "u")
        h = bracket_closure(GroupContext("GL", 2, K), [mat(K, [[0, "u"], [1, 0]])])
        assert gcr.is_gcr(h).value is True and gcr.is_gir(h).value is True
        E = SimpleExtension(K, "w^2+u")
        hE = bracket_closure(GroupContext("GL", 2, E), [mat(E, [[0, "u"], [1, 0]])])
        assert gcr.is_gir(hE).value is False
        assert gcr.is_gind(hE).value is True
        assert gcr.is_gcr(hE).value is False

    def test_distinct_characters(self):
        Q = Rationals()
        h = bracket_closure(GroupContext("GL", 2, Q), [Matrix.diagonal(Q, [1, 2])])
        assert gcr.is_gir(h).value is False and gcr.is_gind(h).value is False


class TestToral:
    def test_diagonal(self):
        Q = Rationals()
        h = bracket_closure(GroupContext("GL", 3, Q), [Matrix.diagonal(Q, [1, 2, 3]), Matrix.diagonal(Q, [0, 1, 0])])
        v = gcr.is_toral(h)
        assert v.value is True and v.provenance == "toral-over-closure"

    def test_nilpotent(self):
        Q = Rationals()
        assert gcr.is_toral(bracket_closure(GroupContext("GL", 2, Q), [unit(Q, 2, 0, 1)])).value is False

    def test_inseparable_companion(self):
        F = RationalFunctionField(PrimeField(2), "t")
        h = bracket_closure(GroupContext("GL", 2, F), [mat(F, [[0, "t"], [1, 0]])])
        assert gcr.is_toral(h).value is False

    def test_pgl_lift_must_commute(self, pgl2):
        _, h, _ = pgl2
        assert gcr.is_toral(h).value is False


class TestInstability:
    def test_strict_upper(self):
        Q = Rationals()
        ctx = GroupContext("GL", 3, Q)
        v = gcr.instability_test(ctx, [unit(Q, 3, 0, 1), unit(Q, 3, 0, 2)])
        lam = v.certificate["lambda"]
        assert v.value is True and lam.weights == [2, 0, -2]
        assert all(lam.limit(x).is_zero() for x in [unit(Q, 3, 0, 1), unit(Q, 3, 0, 2)])

    def test_embedded_pgl2_tuple_char2(self):
        F = PrimeField(2)
        ctx = GroupContext("SL", 3, F)
        assert gcr.instability_test(ctx, [unit(F, 3, 0, 2), unit(F, 3, 0, 1)]).value is True

    def test_semisimple_element(self):
        Q = Rationals()
        v = gcr.instability_test(GroupContext("GL", 2, Q), [mat(Q, [[1, 0], [0, -1]])])
        assert v.value is False and "non_nilpotent_element" in v.certificate

    def test_pgl_refused(self, pgl2):
        ctx, _, _ = pgl2
        F = ctx.field
        with pytest.raises(CapabilityError):
            gcr.instability_test(ctx, [unit(F, 2, 0, 1)])


class TestPlongeable:
    def test_sqrt_t(self):
        F = RationalFunctionField(PrimeField(2), "t")
        h = bracket_closure(GroupContext("PGL", 2, F), [mat(F, [[0, 1], ["t", 0]])])
        assert gcr.is_plongeable_pgl2(h).value is False

    def test_e(self, pgl2):
        _, _, m = pgl2
        assert gcr.is_plongeable_pgl2(m).value is True

    def test_t_squared(self):
        F = RationalFunctionField(PrimeField(2), "t")
        h = bracket_closure(GroupContext("PGL", 2, F), [mat(F, [[0, 1], ["t^2", 0]])])
        v = gcr.is_plongeable_pgl2(h)
        assert v.value is True
        assert v.certificate["eigenline"] == Subspace(F, 2, [(F.one, F.parse("t").value)])

    def test_wrong_context(self):
        Q = Rationals()
        with pytest.raises(CapabilityError):
            gcr.is_plongeable_pgl2(bracket_closure(GroupContext("GL", 2, Q), [unit(Q, 2, 0, 1)]))

    def test_not_ad_nilpotent(self):
        Q = Rationals()
        h = bracket_closure(GroupContext("PGL", 2, Q), [mat(Q, [[1, 0], [0, 0]])])
        with pytest.raises(PreconditionError):
            gcr.is_plongeable_pgl2(h)


class TestSemisimplify:
    def test_mixed(self):
        Q = Rationals()
        ctx = GroupContext("GL", 3, Q)
        r = gcr.semisimplify(bracket_closure(ctx, [_mixed(Q)]))
        assert r.image == bracket_closure(ctx, [Matrix.diagonal(Q, [1, 1, 0])])
        assert r.certificate.value is True

    def test_borel(self):
        Q = Rationals()
        r = gcr.semisimplify(_borel(Q))
        assert r.image == bracket_closure(GroupContext("SL", 2, Q), [mat(Q, [[1, 0], [0, -1]])])

    def test_gir_input(self, pgl2):
        _, h, _ = pgl2
        r = gcr.semisimplify(h)
        assert r.image == h and r.lam.is_central() and r.route == "already-gcr"

    def test_unstable_flag_rejected(self):
        Q = Rationals()
        ctx = GroupContext("GL", 3, Q)
        h = bracket_closure(ctx, [_mixed(Q)])
        bad = Flag(Q, 3, [Subspace(Q, 3, [_e(Q, 3, 1)])])
        with pytest.raises(PreconditionError):
            gcr.semisimplify(h, flag=bad)

    def test_two_flags_give_conjugate_images(self):
        Q = Rationals()
        ctx = GroupContext("GL", 3, Q)
        h = bracket_closure(ctx, [_mixed(Q)])
        f1 = Flag(Q, 3, [Subspace(Q, 3, [_e(Q, 3, 0)]), Subspace(Q, 3, [_e(Q, 3, 0), _e(Q, 3, 1)])])
        f2 = Flag(Q, 3, [Subspace(Q, 3, [_e(Q, 3, 2)]), Subspace(Q, 3, [_e(Q, 3, 0), _e(Q, 3, 2)])])
        r1, r2 = gcr.semisimplify(h, flag=f1), gcr.semisimplify(h, flag=f2)
        w = gcr.ssimp_uniqueness_check(h, r1, r2)
        assert w.found
        X = [r1.lam.limit(x, normalize=False) for x in h.generators]
        Y = [r2.lam.limit(x, normalize=False) for x in h.generators]
        assert is_conjugation_witness(w.matrix, X, Y)

    def test_equal_results_give_identity(self):
        Q = Rationals()
        h = _borel(Q)
        r = gcr.semisimplify(h)
        w = gcr.ssimp_uniqueness_check(h, r, r)
        assert w.found and w.matrix == Matrix.identity(Q, 2)

    def test_foreign_result_rejected(self):
        Q = Rationals()
        h = _borel(Q)
        other = gcr.semisimplify(bracket_closure(GroupContext("SL", 2, Q), [unit(Q, 2, 0, 1)]))
        with pytest.raises(PreconditionError):
            gcr.ssimp_uniqueness_check(h, gcr.semisimplify(h), other)

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds)
    def test_image_generated_and_fixed(self, seed):
        r = random.Random(seed)
        F = r.choice([Rationals(), PrimeField(2), PrimeField(3)])
        h = random_subalgebra(GroupContext(r.choice(["GL", "SL"]), r.choice([2, 3]), F), r)
        res = gcr.semisimplify(h, rng=r)
        ctx = h.context
        assert bracket_closure(ctx, res.generating_tuple_image) == res.image
        assert all(res.lam.limit(b) == b for b in res.image.basis)
        assert gcr.is_gcr(res.image).value is True
        again = gcr.semisimplify(res.image, rng=r)
        w = gcr.ssimp_uniqueness_check(res.image, gcr.semisimplify(res.image, rng=r), again, r)
        assert again.image == res.image and w.found


class TestIdeals:
    def test_sl2_plus_scalars(self):
        Q = Rationals()
        ctx = GroupContext("GL", 2, Q)
        h = bracket_closure(ctx, [unit(Q, 2, 0, 1), unit(Q, 2, 1, 0), Matrix.identity(Q, 2)])
        rep = gcr.ideals_gcr(h)
        assert rep.consistent and all(e.gcr.value is True for e in rep.entries)
        assert any(e.ideal.dim == 3 and all(b.trace() == Q(0) for b in e.ideal.basis) for e in rep.entries)

    def test_borel(self):
        Q = Rationals()
        rep = gcr.ideals_gcr(_borel(Q))
        assert rep.consistent
        e12 = [e for e in rep.entries if e.ideal.dim == 1]
        assert e12 and e12[0].image.dim == 0 and e12[0].image_gcr.value is True

    def test_pgl2_gf2_refused(self, pgl2):
        _, h, _ = pgl2
        with pytest.raises(CapabilityError):
            gcr.ideals_gcr(h)


class TestSolvableDecomposition:
    def test_upper_triangular(self):
        Q = Rationals()
        ctx = GroupContext("GL", 2, Q)
        h = bracket_closure(ctx, [unit(Q, 2, 0, 0), unit(Q, 2, 1, 1), unit(Q, 2, 0, 1)])
        d = gcr.solvable_decomposition(h)
        assert d.s == bracket_closure(ctx, [unit(Q, 2, 0, 0), unit(Q, 2, 1, 1)])
        assert d.n == bracket_closure(ctx, [unit(Q, 2, 0, 1)])

    def test_diagonal(self):
        Q = Rationals()
        h = bracket_closure(GroupContext("GL", 3, Q), [Matrix.diagonal(Q, [1, 2, 0])])
        d = gcr.solvable_decomposition(h)
        assert d.s == h and d.n.dim == 0

    def test_jordan_closure_of_mixed(self):
        Q = Rationals()
        ctx = GroupContext("GL", 3, Q)
        hj, _ = jordan_closure(bracket_closure(ctx, [_mixed(Q)]))
        d = gcr.solvable_decomposition(hj)
        assert d.s == bracket_closure(ctx, [Matrix.diagonal(Q, [1, 1, 0])])
        assert d.n == bracket_closure(ctx, [unit(Q, 3, 0, 1)])

    def test_not_jordan_closed(self):
        Q = Rationals()
        with pytest.raises(PreconditionError):
            gcr.solvable_decomposition(bracket_closure(GroupContext("GL", 3, Q), [_mixed(Q)]))

    def test_not_solvable(self):
        Q = Rationals()
        with pytest.raises(PreconditionError):
            gcr.solvable_decomposition(bracket_closure(GroupContext("SL", 2, Q), [unit(Q, 2, 0, 1), unit(Q, 2, 1, 0)]))


class TestChar0:
    def test_sl2(self):
        Q = Rationals()
        h = bracket_closure(GroupContext("GL", 2, Q), [unit(Q, 2, 0, 1), unit(Q, 2, 1, 0)])
        rep = gcr.char0_criterion(h)
        assert rep.values == (True, True, True) and rep.radical.dim == 0

    def test_borel(self):
        assert gcr.char0_criterion(_borel(Rationals())).values == (False, False, False)

    def test_sl2_plus_scalars(self):
        Q = Rationals()
        h = bracket_closure(GroupContext("GL", 2, Q), [unit(Q, 2, 0, 1), unit(Q, 2, 1, 0), Matrix.identity(Q, 2)])
        assert gcr.char0_criterion(h).values == (True, True, True)

    def test_positive_characteristic(self, pgl2):
        _, h, _ = pgl2
        with pytest.raises(CapabilityError):
            gcr.char0_criterion(h)

    def test_explicit_block_example(self):
        Q = Rationals()
        ctx = GroupContext("GL", 4, Q)
        H = Matrix.diagonal(Q, [1, -1, 0, 0])
        h = bracket_closure(ctx, [H, unit(Q, 4, 0, 1), unit(Q, 4, 2, 3), unit(Q, 4, 3, 2)])
        r = gcr.char0_explicit_ssimp(h)
        expected = bracket_closure(ctx, [H, unit(Q, 4, 2, 3), unit(Q, 4, 3, 2)])
        assert r.image == expected
        assert r.certificate.certificate["conjugate_to_radical_route"].found

    def test_explicit_semisimple(self):
        Q = Rationals()
        h = bracket_closure(GroupContext("GL", 2, Q), [unit(Q, 2, 0, 1), unit(Q, 2, 1, 0)])
        assert gcr.char0_explicit_ssimp(h).image == h

    def test_explicit_mixed(self):
        Q = Rationals()
        ctx = GroupContext("GL", 3, Q)
        r = gcr.char0_explicit_ssimp(bracket_closure(ctx, [_mixed(Q)]))
        assert r.image == bracket_closure(ctx, [Matrix.diagonal(Q, [1, 1, 0])])


class TestProperties:
    @settings(max_examples=40, deadline=None)
    @given(seed=seeds)
    def test_conjugation_invariance(self, seed):
        r = random.Random(seed)
        F = r.choice([Rationals(), PrimeField(2), PrimeField(3)])
        ctx = GroupContext("GL", r.choice([2, 3]), F)
        h = random_subalgebra(ctx, r)
        g = random_unipotent(F, ctx.n, r)
        gh = bracket_closure(ctx, [g @ x @ g.inverse() for x in h.basis])
        assert gcr.is_gcr(h).value == gcr.is_gcr(gh).value

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds)
    def test_jordan_closure_invariance(self, seed):
        r = random.Random(seed)
        F = r.choice([Rationals(), PrimeField(2), PrimeField(3)])
        h = random_subalgebra(GroupContext("GL", r.choice([2, 3]), F), r)
        assert gcr.is_gcr(h).value == gcr.is_gcr(jordan_closure(h)[0]).value

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds)
    def test_gir_implies_gcr_and_gind(self, seed):
        r = random.Random(seed)
        F = r.choice([Rationals(), PrimeField(2), PrimeField(3)])
        h = random_subalgebra(GroupContext("GL", r.choice([2, 3]), F), r, conjugate=False)
        if gcr.is_gir(h).value is True:
            assert gcr.is_gcr(h).value is True and gcr.is_gind(h).value is True

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds)
    def test_block_diagonal_restriction(self, seed):
        r = random.Random(seed)
        F = r.choice([Rationals(), PrimeField(2), PrimeField(3)])
        ctx = GroupContext("GL", 3, F)
        from gcrlie.sampling import random_matrix
        gens = []
        for _ in range(r.randint(1, 2)):
            a = random_matrix(F, 1, r)
            b = random_matrix(F, 2, r)
            gens.append(Matrix.from_payload(F, [[a.rows[0][0], F.zero, F.zero],
                                                [F.zero] + list(b.rows[0]),
                                                [F.zero] + list(b.rows[1])]))
        h = bracket_closure(ctx, gens)
        mats = gcr.module_matrices(h)
        U = Subspace(F, 3, [_e(F, 3, 0)])
        W = Subspace(F, 3, [_e(F, 3, 1), _e(F, 3, 2)])
        blocks = all(is_semisimple_module(restrict_to(mats, S)).value for S in (U, W))
        assert gcr.is_gcr(h).value == blocks

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds)
    def test_char0_implications(self, seed):
        r = random.Random(seed)
        Q = Rationals()
        h = random_subalgebra(GroupContext("GL", r.choice([2, 3]), Q), r)
        g = gcr.is_gcr(h).value
        if g:
            assert is_jordan_closed(h, r).value is True
            if structural_series(h).solvable:
                assert gcr.is_toral(h).value is True
        if gcr.is_toral(h).value:
            assert g is True
