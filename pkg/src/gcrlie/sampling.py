"""Seeded random matrices and subalgebras for experiments and tests."""

from __future__ import annotations

from .liealg import bracket_closure
from .linalg import Matrix


def small_element(F, rng, height=2):
    """A random element with small entries (integers in [-height, height] over Q)."""
    if F.is_finite:
        return F.random(rng)
    return F.from_int(rng.randint(-height, height))


def random_matrix(F, n, rng, density=0.5, height=2):
    rows = [[small_element(F, rng, height) if rng.random() < density else F.zero
             for _ in range(n)] for _ in range(n)]
    return Matrix.from_payload(F, rows)


def random_composition(n, rng):
    """Random block sizes summing to n."""
    sizes = []
    left = n
    while left:
        s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    return sizes


def random_parabolic_element(F, sizes, rng, density=0.6, height=2):
    """Random block upper-triangular matrix for the given block sizes."""
    n = sum(sizes)
    block = []
    for k, s in enumerate(sizes):
        block.extend([k] * s)
    rows = [[small_element(F, rng, height) if block[i] <= block[j] and rng.random() < density
             else F.zero for j in range(n)] for i in range(n)]
    return Matrix.from_payload(F, rows)


def random_unipotent(F, n, rng, height=1):
    """Product of a few elementary matrices (entries stay small over Q)."""
    g = Matrix.identity(F, n)
    for _ in range(rng.randint(0, n)):
        i, j = rng.sample(range(n), 2)
        e = Matrix.unit(F, n, i, j).scale(small_element(F, rng, height))
        g = g @ (Matrix.identity(F, n) + e)
    return g


def random_generators(ctx, rng, count=None, conjugate=True):
    """Generators inside a random parabolic, moved by a random unipotent-product.

    Mixing block shapes gives a healthy share of reducible, decomposable and
    non-completely-reducible examples.
    """
    F = ctx.field
    n = ctx.n
    count = count if count is not None else rng.randint(1, 2)
    sizes = random_composition(n, rng)
    gens = [random_parabolic_element(F, sizes, rng) for _ in range(count)]
    if conjugate:
        g = random_unipotent(F, n, rng)
        gi = g.inverse()
        gens = [g @ x @ gi for x in gens]
    if ctx.kind == "SL":
        out = []
        for x in gens:
            t = x.trace_payload()
            if t != F.zero:
                if F.characteristic and n % F.characteristic == 0:
                    x = x - Matrix.unit(F, n, 0, 0).scale(t)
                else:
                    x = x - Matrix.identity(F, n).scale(F.div(t, F.from_int(n)))
            out.append(x)
        gens = out
    return [ctx.normalize(x) for x in gens]


def random_subalgebra(ctx, rng, count=None, conjugate=True):
    return bracket_closure(ctx, random_generators(ctx, rng, count, conjugate))
