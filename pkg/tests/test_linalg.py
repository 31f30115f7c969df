import random

import pytest
from hypothesis import given, settings, strategies as st

from gcrlie.errors import DimensionError, FieldError
from gcrlie.fields import PrimeField, Rationals
from gcrlie.linalg import Flag, Matrix, Subspace, hom_space, solve_linear
from gcrlie.sampling import random_matrix

from conftest import mat

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _rank_mod_p(rows, p):
    """Second, independent elimination on plain integers."""
    M = [[x % p for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(M[0]) if M else 0
    while rank < len(M) and col < ncols:
        piv = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], -1, p)
        for i in range(len(M)):
            if i != rank and M[i][col]:
                f = M[i][col] * inv
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
        col += 1
    return rank


class TestRref:
    def test_identity(self):
        Q = Rationals()
        R, piv = Matrix.identity(Q, 3).rref()
        assert R == Matrix.identity(Q, 3) and piv == [0, 1, 2]

    def test_nilpotent_gf2(self):
        F = PrimeField(2)
        R, piv = mat(F, [[0, 1], [0, 0]]).rref()
        assert R.to_strings() == [["0", "1"]] and piv == [1]

    def test_rank_against_independent_elimination(self):
        F = PrimeField(3)
        r = random.Random(11)
        for _ in range(100):
            rows = [[r.randrange(3) for _ in range(4)] for _ in range(4)]
            assert mat(F, rows).rank() == _rank_mod_p(rows, 3)

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds)
    def test_idempotent_and_rowspace(self, seed):
        Q = Rationals()
        A = random_matrix(Q, 4, random.Random(seed))
        R, piv = A.rref()
        if R is None:
            assert A.is_zero()
            return
        R2, piv2 = R.rref()
        assert R2 == R and piv2 == piv
        assert Subspace(Q, 4, A.rows) == Subspace(Q, 4, R.rows)


class TestSolve:
    def test_identity(self):
        Q = Rationals()
        x, ker = solve_linear(Matrix.identity(Q, 2), [1, 0])
        assert list(x) == [Q.one, Q.zero] and ker == []

    def test_zero_system(self):
        Q = Rationals()
        x, ker = solve_linear(Matrix.zeros(Q, 2), [0, 0])
        assert all(v == Q.zero for v in x) and len(ker) == 2

    def test_inconsistent(self):
        Q = Rationals()
        assert solve_linear(Matrix.zeros(Q, 2), [1, 0]) is None

    def test_dimension_mismatch(self):
        Q = Rationals()
        with pytest.raises(DimensionError):
            solve_linear(Matrix.identity(Q, 2), [1, 0, 0])

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds)
    def test_residual_is_zero(self, seed):
        Q = Rationals()
        r = random.Random(seed)
        A = random_matrix(Q, 4, r)
        x0 = tuple(Q.from_int(r.randint(-3, 3)) for _ in range(4))
        b = A.apply(x0)
        x, ker = solve_linear(A, b)
        assert A.apply(x) == b
        assert all(all(c == Q.zero for c in A.apply(k)) for k in ker)
        assert len(ker) == 4 - A.rank()


class TestSubspaces:
    def test_intersection_of_axes(self):
        Q = Rationals()
        U = Subspace(Q, 2, [(Q.one, Q.zero)])
        W = Subspace(Q, 2, [(Q.zero, Q.one)])
        assert U.intersect(W).is_zero()

    def test_complements_of_a_line_in_gf2(self):
        F = PrimeField(2)
        U = Subspace(F, 2, [(F.one, F.zero)])
        comps = list(U.complements())
        expected = {Subspace(F, 2, [(F.zero, F.one)]), Subspace(F, 2, [(F.one, F.one)])}
        assert set(comps) == expected and len(comps) == 2

    def test_complements_need_finite_field(self):
        Q = Rationals()
        with pytest.raises(FieldError):
            list(Subspace(Q, 2, [(Q.one, Q.zero)]).complements())

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds)
    def test_grassmann_identity(self, seed):
        F = PrimeField(3)
        r = random.Random(seed)
        U = Subspace(F, 4, [tuple(F.from_int(r.randrange(3)) for _ in range(4)) for _ in range(r.randint(0, 3))])
        W = Subspace(F, 4, [tuple(F.from_int(r.randrange(3)) for _ in range(4)) for _ in range(r.randint(0, 3))])
        assert U.sum(W).dim + U.intersect(W).dim == U.dim + W.dim
        assert U.is_subspace_of(U.sum(W)) and U.intersect(W).is_subspace_of(W)


class TestFlags:
    def _chain(self, F):
        e = [tuple(F.one if i == j else F.zero for j in range(3)) for i in range(3)]
        return [Subspace(F, 3, e[:1]), Subspace(F, 3, e[:2])]

    def test_valid(self):
        F = PrimeField(2)
        assert Flag(F, 3, self._chain(F)).dims() == [1, 2]

    def test_shuffled_chain_rejected(self):
        F = PrimeField(2)
        with pytest.raises(DimensionError):
            Flag(F, 3, list(reversed(self._chain(F))))

    def test_non_nested_rejected(self):
        F = PrimeField(2)
        a = Subspace(F, 3, [(F.one, F.zero, F.zero)])
        b = Subspace(F, 3, [(F.zero, F.one, F.zero), (F.zero, F.zero, F.one)])
        with pytest.raises(DimensionError):
            Flag(F, 3, [a, b])


def test_hom_space_of_equal_nilpotents_contains_identity():
    Q = Rationals()
    X = [Matrix.unit(Q, 2, 0, 1)]
    H = hom_space(X, X)
    assert all(x @ h == h @ x for h in H for x in X)
    assert len(H) == 2
