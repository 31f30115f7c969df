"""pgl_2 in characteristic 2: an irreducible subalgebra with a non-G-cr ideal.

Run with ``python3 demos/pgl2_char2.py``.
"""
from gcrlie import gcr, oracle
from gcrlie.context import GroupContext
from gcrlie.fields import PrimeField
from gcrlie.liealg import bracket_closure, centralizer_in_g, hull_of, normalizer_in_g
from gcrlie.linalg import Matrix

F = PrimeField(2)
pgl2 = GroupContext("PGL", 2, F)
e = Matrix.unit(F, 2, 0, 1)
f = Matrix.unit(F, 2, 1, 0)

# In pgl_2 over GF(2) the classes of e and f commute: [e, f] = h = I = 0.
h = bracket_closure(pgl2, [e, f])
print("dim h =", h.dim, " abelian:", h.is_abelian())
print("hull of the lift:", hull_of(h).dim, "(all of M_2, so the lift acts irreducibly)")
print("h is G-ir:", gcr.is_gir(h).value, " G-cr:", gcr.is_gcr(h).value)

# The line through e is an ideal of h, yet it sits in a single Borel.
m = bracket_closure(pgl2, [e])
print("m = <e> is G-cr:", gcr.is_gcr(m).value)
print("c_g(m) has dim", centralizer_in_g(m).dim, "and n_g(m) has dim", normalizer_in_g(m).dim)

# Brute force agrees: the only flag whose parabolic contains m has no Levi containing it.
verdict = oracle.def_based_gcr(m)
print("oracle:", verdict.value, "witness flag:", verdict.witness)
print("fixed simplex of the stabiliser:", oracle.centre_search(m))
