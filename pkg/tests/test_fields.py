import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from gcrlie.errors import FieldError, ParseError
from gcrlie.fields import (FieldElement, GF, PrimeField, RationalFunctionField, Rationals,
                           SimpleExtension, field_from_descriptor)
from gcrlie.polynomials import Polynomial, is_nth_power_ratfunc, is_separable, poly_gcd

from conftest import FIELD_FACTORIES

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _triple(F, seed):
    r = random.Random(seed)
    return [F(F.random(r)) for _ in range(3)]


@pytest.mark.parametrize("name", sorted(FIELD_FACTORIES))
@settings(max_examples=200, deadline=None)
@given(seed=seeds)
def test_field_axioms(name, seed):
    F = FIELD_FACTORIES[name]()
    a, b, c = _triple(F, seed)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == F(0)
    if not a.is_zero():
        assert a * a.inverse() == F(1)


@pytest.mark.parametrize("name", sorted(FIELD_FACTORIES))
@settings(max_examples=200, deadline=None)
@given(seed=seeds)
def test_parse_format_roundtrip(name, seed):
    F = FIELD_FACTORIES[name]()
    x = F(F.random(random.Random(seed)))
    assert F.parse(str(x)) == x


def test_inverse_of_zero_is_an_error():
    for make in FIELD_FACTORIES.values():
        F = make()
        with pytest.raises(FieldError):
            F(0).inverse()


class TestParsing:
    def test_rational_literal(self):
        Q = Rationals()
        assert Q.parse("-3/4") == Q(-3) / Q(4)

    def test_rational_function_reduces(self):
        F = RationalFunctionField(PrimeField(2), "t")
        x = F.parse("(t^2+1)/(t+1)")
        assert x == F.parse("t+1")
        assert str(x) == "t+1"

    def test_extension_residue(self):
        F = SimpleExtension(PrimeField(2), "w^2+w+1")
        x = F.parse("w+1")
        assert x * x == F.parse("w")

    def test_syntax_error_has_position(self):
        with pytest.raises(ParseError) as info:
            Rationals().parse("1 + * 2")
        assert info.value.position is not None

    def test_division_by_zero_literal(self):
        with pytest.raises((ParseError, FieldError)):
            Rationals().parse("1/0")

    def test_unknown_variable(self):
        with pytest.raises(ParseError):
            PrimeField(2).parse("t")


class TestDescriptors:
    def test_nonprime_p(self):
        with pytest.raises(FieldError) as info:
            field_from_descriptor({"kind": "GFp", "p": 4})
        assert info.value.pointer == "/p"

    def test_tower(self):
        F = field_from_descriptor({"kind": "Ext", "base": {"kind": "RatFunc", "base": {"kind": "GFp", "p": 2},
                                                          "var": "u"}, "modulus": "w^2+u"})
        w = F.parse("w")
        assert w * w == F.parse("u")

    def test_reducible_modulus_rejected(self):
        with pytest.raises(FieldError):
            SimpleExtension(PrimeField(2), "w^2+1")

    def test_gf4_has_four_elements(self):
        assert len(list(GF(4).elements())) == 4


def _euclid_mod_p(f, g, p):
    """Independent monic gcd over GF(p) on integer coefficient lists (low degree first)."""
    def trim(a):
        a = [x % p for x in a]
        while a and a[-1] == 0:
            a.pop()
        return a
    f, g = trim(f), trim(g)
    while g:
        while len(f) >= len(g):
            c = f[-1] * pow(g[-1], -1, p) % p
            shift = len(f) - len(g)
            f = trim([x - c * (g[i - shift] if 0 <= i - shift < len(g) else 0) for i, x in enumerate(f)])
            if not f:
                break
        f, g = g, f
    inv = pow(f[-1], -1, p)
    return [x * inv % p for x in f]


class TestPolynomials:
    def test_gcd_over_q(self):
        Q = Rationals()
        assert poly_gcd(Polynomial.parse(Q, "X^2-1"), Polynomial.parse(Q, "X-1")) == Polynomial.parse(Q, "X-1")

    def test_gcd_inseparable(self):
        F = RationalFunctionField(PrimeField(2), "t")
        f = Polynomial.parse(F, "X^2+t")
        assert f.derivative().is_zero()
        assert poly_gcd(f, f.derivative()) == f

    def test_gcd_against_independent_euclid(self):
        F = PrimeField(3)
        r = random.Random(5)
        for _ in range(200):
            a = [r.randrange(3) for _ in range(r.randint(1, 6))]
            b = [r.randrange(3) for _ in range(r.randint(1, 6))]
            if not any(a) or not any(b):
                continue
            got = poly_gcd(Polynomial.from_payload(F, a), Polynomial.from_payload(F, b))
            assert [int(x) for x in got.coeffs] == _euclid_mod_p(a, b, 3)

    def test_gcd_field_mismatch(self):
        with pytest.raises(FieldError):
            poly_gcd(Polynomial.parse(Rationals(), "X"), Polynomial.parse(PrimeField(2), "X"))

    @pytest.mark.parametrize("field, text, expected", [
        (Rationals(), "X^2-2", True),
        (RationalFunctionField(PrimeField(2), "t"), "X^2+t", False),
        (PrimeField(2), "X^2+X+1", True),
    ])
    def test_is_separable(self, field, text, expected):
        assert is_separable(Polynomial.parse(field, text)) is expected

    def test_constant_separability_is_an_error(self):
        with pytest.raises(FieldError):
            is_separable(Polynomial.parse(Rationals(), "3"))

    def test_separable_matches_splitting_extension(self):
        """Monic quadratics over GF(2)(t): separability equals distinct roots in a
        splitting field built explicitly (the base field or a quadratic extension)."""
        K = RationalFunctionField(PrimeField(2), "t")
        polys = [p for d in range(3) for p in itertools.product((0, 1), repeat=d + 1) if p[-1] == 1]
        elems = {K.make(tuple(K.base.from_int(c) for c in num), tuple(K.base.from_int(c) for c in den))
                 for num in [(0,)] + polys for den in polys}
        elems = sorted(elems, key=lambda e: K.format(e))
        checked = 0
        for a, b in itertools.product(elems, repeat=2):
            f = Polynomial.from_payload(K, (b, a, K.one))
            roots, complete = f.roots()
            assert complete
            if roots:
                r = roots[0]
                s = K(a) - r  # the other root: r + s = a in characteristic 2
                distinct = r != s
            else:
                E = SimpleExtension(K, f.format("w"))
                w = E.generator()
                other = E.coerce(K(a)) if a != K.zero else E.zero
                other = E.sub(other, w)
                distinct = other != w
            assert f.is_separable() is distinct
            checked += 1
        assert checked == len(elems) ** 2

    @pytest.mark.parametrize("text, n, expected", [("t^2", 2, True), ("t", 2, False)])
    def test_nth_power_gf2t(self, text, n, expected):
        F = RationalFunctionField(PrimeField(2), "t")
        assert is_nth_power_ratfunc(F, F.parse(text).value, n) is expected

    def test_nth_power_cube_gf5t(self):
        F = RationalFunctionField(PrimeField(5), "t")
        assert is_nth_power_ratfunc(F, F.parse("(t+1)^3/t^3").value, 3)

    def test_nth_power_zero_exponent(self):
        F = RationalFunctionField(PrimeField(2), "t")
        with pytest.raises(FieldError):
            is_nth_power_ratfunc(F, F.parse("t").value, 0)


def test_field_element_mixed_fields_rejected():
    with pytest.raises(FieldError):
        PrimeField(2)(1) + PrimeField(3)(1)


def test_field_element_is_hashable():
    F = PrimeField(5)
    assert len({F(1), F(6), F(2)}) == 2
    assert isinstance(F(1), FieldElement)
