"""Semisimplifying a non-completely-reducible subalgebra of gl_3 over Q,
along two different flags, and comparing the results.
"""
import random

from gcrlie import gcr
from gcrlie.context import GroupContext
from gcrlie.fields import Rationals
from gcrlie.liealg import bracket_closure
from gcrlie.linalg import Matrix
from gcrlie.serialize import to_jsonable

Q = Rationals()
gl3 = GroupContext("GL", 3, Q)
x = Matrix.diagonal(Q, [1, 1, 0]) + Matrix.unit(Q, 3, 0, 1)
h = bracket_closure(gl3, [x])
rng = random.Random(0)

print("h = <x>, x =", to_jsonable(x))
print("G-cr:", gcr.is_gcr(h, rng).value)

flags = gcr.admissible_flags(h, rng)
print(len(flags), "admissible flags")
r1 = gcr.semisimplify(h, flag=flags[0], rng=rng)
r2 = gcr.semisimplify(h, flag=flags[1], rng=rng)
for r in (r1, r2):
    print("flag dims", r.flag.dims(), "weights", r.lam.weights, "-> image", [to_jsonable(b) for b in r.image.basis])

w = gcr.ssimp_uniqueness_check(h, r1, r2, rng)
print("conjugacy witness found:", w.found, "(", w.message, ")")

# Characteristic 0: three routes to the same answer.
rep = gcr.char0_criterion(h)
print("adjoint semisimple / natural G-cr / radical toral:", rep.values)
