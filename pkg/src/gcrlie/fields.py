"""Exact fields and their elements.

Four constructors are supported and may be stacked up to depth three:

* ``Rationals()``                       the field Q
* ``PrimeField(p)``                     GF(p)
* ``RationalFunctionField(base, "t")``  base(t)
* ``SimpleExtension(base, modulus)``    base[w]/(modulus)

Every field works on *payloads*, plain hashable Python values in a canonical
form (``mpq`` for Q, ``int`` for GF(p), tuples for the others), so that equal
elements have equal payloads.  ``FieldElement`` is a thin wrapper carrying the
field together with a payload and supplies operator overloading.
"""

from __future__ import annotations

import itertools
import operator
import re

import gmpy2
from gmpy2 import mpq

from .errors import FieldError, ParseError

MAX_TOWER_DEPTH = 3
_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_ATOMIC_RE = re.compile(r"^(-?\d+|[A-Za-z][A-Za-z0-9_]*(\^\d+)?)$")


# ---------------------------------------------------------------------------
# payload polynomials: tuples of payloads, constant term first, no trailing 0s
# ---------------------------------------------------------------------------

def p_trim(F, a):
    zero = F.zero
    n = len(a)
    while n and a[n - 1] == zero:
        n -= 1
    return tuple(a[:n])


def p_add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    add = F.add
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return p_trim(F, out)


def p_neg(F, a):
    neg = F.neg
    return tuple(neg(c) for c in a)


def p_sub(F, a, b):
    return p_add(F, a, p_neg(F, b))


def p_scale(F, c, a):
    if c == F.zero:
        return ()
    mul = F.mul
    return p_trim(F, [mul(c, x) for x in a])


def p_mul(F, a, b):
    if not a or not b:
        return ()
    add, mul, zero = F.add, F.mul, F.zero
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = add(out[i + j], mul(x, y))
    return p_trim(F, out)


def p_divmod(F, a, b):
    if not b:
        raise FieldError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), tuple(a)
    inv_lead = F.inv(b[-1])
    rem = list(a)
    quo = [F.zero] * (len(a) - db)
    sub, mul, zero = F.sub, F.mul, F.zero
    for k in range(len(a) - 1 - db, -1, -1):
        c = rem[k + db]
        if c == zero:
            continue
        c = mul(c, inv_lead)
        quo[k] = c
        for j in range(db + 1):
            rem[k + j] = sub(rem[k + j], mul(c, b[j]))
    return p_trim(F, quo), p_trim(F, rem[:db])


def p_mod(F, a, b):
    return p_divmod(F, a, b)[1]


def p_monic(F, a):
    if not a or a[-1] == F.one:
        return tuple(a)
    return p_scale(F, F.inv(a[-1]), a)


def p_gcd(F, a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = tuple(a), tuple(b)
    while b:
        a, b = b, p_mod(F, a, b)
    return p_monic(F, a)


def p_xgcd(F, a, b):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = tuple(a), tuple(b)
    s0, s1 = (F.one,), ()
    t0, t1 = (), (F.one,)
    while r1:
        q, r = p_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, p_sub(F, s0, p_mul(F, q, s1))
        t0, t1 = t1, p_sub(F, t0, p_mul(F, q, t1))
    if not r0:
        return (), (), ()
    inv = F.inv(r0[-1])
    return p_scale(F, inv, r0), p_scale(F, inv, s0), p_scale(F, inv, t0)


def p_deriv(F, a):
    return p_trim(F, [F.mul(F.from_int(i), c) for i, c in enumerate(a)][1:])


def p_eval(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def p_pow(F, a, e):
    result = (F.one,)
    base = tuple(a)
    while e:
        if e & 1:
            result = p_mul(F, result, base)
        e >>= 1
        if e:
            base = p_mul(F, base, base)
    return result


def p_powmod(F, a, e, m):
    result = p_mod(F, (F.one,), m)
    base = p_mod(F, a, m)
    while e:
        if e & 1:
            result = p_mod(F, p_mul(F, result, base), m)
        e >>= 1
        if e:
            base = p_mod(F, p_mul(F, base, base), m)
    return result


def _format_poly(F, a, var):
    """Render payload polynomial ``a`` over ``F`` in indeterminate ``var``."""
    if not a:
        return "0"
    pieces = []
    one = F.one
    minus_one = F.neg(one)
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if c == F.zero:
            continue
        if e == 0:
            pieces.append(F.format(c))
            continue
        mono = var if e == 1 else f"{var}^{e}"
        if c == one:
            pieces.append(mono)
        elif c == minus_one and F.characteristic != 2:
            pieces.append("-" + mono)
        else:
            s = F.format(c)
            pieces.append(f"{s}*{mono}" if _ATOMIC_RE.match(s) else f"({s})*{mono}")
    out = pieces[0]
    for p in pieces[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class Field:
    """Common interface.  Subclasses set ``characteristic``, ``depth``,
    ``is_finite``, ``zero``, ``one`` and the payload operations."""

    characteristic = 0
    depth = 1
    is_finite = False
    key = ()

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return self.name()

    # payload helpers with generic defaults
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def is_zero(self, a):
        return a == self.zero

    # wrappers
    def element(self, payload):
        return FieldElement(self, payload)

    def __call__(self, value=0):
        return FieldElement(self, self.coerce(value))

    def coerce(self, value):
        """Turn an int, string, FieldElement of a subfield or payload into a payload."""
        if _is_payload(self, value):
            return value
        if isinstance(value, FieldElement):
            if value.field == self:
                return value.value
            return self.embed_from(value.field, value.value)
        if isinstance(value, bool):
            return self.from_int(int(value))
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse(value).value
        raise FieldError(f"cannot coerce {value!r} into {self.name()}")

    def embed_from(self, sub, payload):
        """Map ``payload`` of a subfield in the tower into this field."""
        if sub == self:
            return payload
        base = getattr(self, "base", None)
        if base is None:
            raise FieldError(f"{sub.name()} is not a subfield of {self.name()}")
        return self.from_base(base.embed_from(sub, payload))

    def subfields(self):
        """Fields in the tower, this one first."""
        out = [self]
        base = getattr(self, "base", None)
        while base is not None:
            out.append(base)
            base = getattr(base, "base", None)
        return out

    def prime_subfield(self):
        return self.subfields()[-1]

    def variables(self):
        """Map variable name -> payload of this field, for the parser."""
        return {}

    def parse(self, text):
        from .parsing import parse_element
        return parse_element(self, text)

    def is_perfect(self):
        return self.characteristic == 0 or self.is_finite

    def radical_algorithm(self):
        """Which radical algorithm applies: 'dickson', 'finite_field' or 'none'."""
        if self.characteristic == 0:
            return "dickson"
        if self.is_finite:
            return "finite_field"
        return "none"

    def elements(self):
        raise FieldError(f"{self.name()} is infinite")

    def order(self):
        raise FieldError(f"{self.name()} is infinite")

    def pth_root(self, a):
        if not self.is_finite:
            raise FieldError(f"p-th roots are not available in {self.name()}")
        return self.pow(a, self.order() // self.characteristic)


class Rationals(Field):
    """The field Q with ``gmpy2.mpq`` payloads."""

    characteristic = 0
    depth = 1
    is_finite = False
    key = ("Q",)

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)
        self.add = operator.add
        self.sub = operator.sub
        self.mul = operator.mul
        self.neg = operator.neg

    def inv(self, a):
        if not a:
            raise FieldError("division by zero")
        return mpq(1) / a

    def div(self, a, b):
        if not b:
            raise FieldError("division by zero")
        return a / b

    def from_int(self, n):
        return mpq(n)

    def from_fraction(self, num, den=1):
        if den == 0:
            raise FieldError("division by zero")
        return mpq(num, den)

    def format(self, a):
        return str(a)

    def name(self):
        return "Q"

    def descriptor(self):
        return {"kind": "Q"}

    def random(self, rng, height=5):
        num = rng.randint(-height, height)
        den = rng.choice((1, 1, 1, 2, 3))
        return mpq(num, den)


class PrimeField(Field):
    """GF(p) with ``int`` payloads in ``range(p)``."""

    is_finite = True
    depth = 1

    def __init__(self, p):
        p = int(p)
        if p < 2 or not gmpy2.is_prime(p):
            raise FieldError(f"{p} is not prime", pointer="/p")
        self.p = p
        self.characteristic = p
        self.key = ("GFp", p)
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise FieldError("division by zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_int(self, n):
        return n % self.p

    def format(self, a):
        return str(a)

    def name(self):
        return f"GF({self.p})"

    def descriptor(self):
        return {"kind": "GFp", "p": self.p}

    def order(self):
        return self.p

    def elements(self):
        return iter(range(self.p))

    def random(self, rng, height=None):
        return rng.randrange(self.p)

    def pth_root(self, a):
        return a

    # restriction of scalars to the prime field
    prime_degree = 1

    def prime_coords(self, a):
        return [a]

    def from_prime_coords(self, coords):
        return coords[0] % self.p


class RationalFunctionField(Field):
    """base(var); payload ``(num, den)`` of payload polynomials, reduced, den monic."""

    is_finite = False

    def __init__(self, base, var="t"):
        if not isinstance(base, Field):
            raise FieldError("base must be a field", pointer="/base")
        if not isinstance(var, str) or not _NAME_RE.match(var):
            raise FieldError(f"invalid variable name {var!r}", pointer="/var")
        if var in _all_names(base):
            raise FieldError(f"variable name {var!r} already used in the base", pointer="/var")
        self.depth = base.depth + 1
        if self.depth > MAX_TOWER_DEPTH:
            raise FieldError("tower depth exceeds 3")
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.key = ("RatFunc", base.key, var)
        self.zero = ((), (base.one,))
        self.one = ((base.one,), (base.one,))

    # canonical form
    def _canon(self, num, den):
        B = self.base
        if not den:
            raise FieldError("division by zero")
        if not num:
            return self.zero
        g = p_gcd(B, num, den)
        if len(g) > 1:
            num = p_divmod(B, num, g)[0]
            den = p_divmod(B, den, g)[0]
        lead = den[-1]
        if lead != B.one:
            inv = B.inv(lead)
            num = p_scale(B, inv, num)
            den = p_scale(B, inv, den)
        return (num, den)

    def make(self, num, den=None):
        """Payload from numerator/denominator payload polynomials."""
        B = self.base
        num = p_trim(B, num)
        den = (B.one,) if den is None else p_trim(B, den)
        return self._canon(num, den)

    def add(self, a, b):
        B = self.base
        (n1, d1), (n2, d2) = a, b
        if not n1:
            return b
        if not n2:
            return a
        if d1 == d2:
            return self._canon(p_add(B, n1, n2), d1)
        return self._canon(p_add(B, p_mul(B, n1, d2), p_mul(B, n2, d1)), p_mul(B, d1, d2))

    def neg(self, a):
        return (p_neg(self.base, a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        B = self.base
        (n1, d1), (n2, d2) = a, b
        if not n1 or not n2:
            return self.zero
        return self._canon(p_mul(B, n1, n2), p_mul(B, d1, d2))

    def inv(self, a):
        num, den = a
        if not num:
            raise FieldError("division by zero")
        return self._canon(den, num)

    def from_int(self, n):
        c = self.base.from_int(n)
        if c == self.base.zero:
            return self.zero
        return ((c,), (self.base.one,))

    def from_base(self, c):
        if c == self.base.zero:
            return self.zero
        return ((c,), (self.base.one,))

    def generator(self):
        B = self.base
        return ((B.zero, B.one), (B.one,))

    def variables(self):
        out = {k: self.from_base(v) for k, v in self.base.variables().items()}
        out[self.var] = self.generator()
        return out

    def format(self, a):
        num, den = a
        B = self.base
        n = _format_poly(B, num, self.var)
        if den == (B.one,):
            return n
        d = _format_poly(B, den, self.var)
        if not _ATOMIC_RE.match(n):
            n = f"({n})"
        if not _ATOMIC_RE.match(d):
            d = f"({d})"
        return f"{n}/{d}"

    def name(self):
        return f"{self.base.name()}({self.var})"

    def descriptor(self):
        return {"kind": "RatFunc", "base": self.base.descriptor(), "var": self.var}

    def random(self, rng, height=2):
        B = self.base
        num = p_trim(B, [B.random(rng) for _ in range(rng.randint(0, height) + 1)])
        den = ()
        while not den:
            den = p_trim(B, [B.random(rng) for _ in range(rng.randint(0, height) + 1)])
        if rng.random() < 0.5:
            den = (B.one,)
        return self._canon(num, den)

    def is_polynomial(self, a):
        return a[1] == (self.base.one,)


class SimpleExtension(Field):
    """base[gen]/(modulus) for a monic irreducible modulus of degree >= 2.

    Payloads are residues: tuples of base payloads of length < degree.
    Irreducibility is certified at construction (finite bases by trial
    division; Q and rational function bases for degree 2 and 3 by a root
    test); otherwise construction is refused.
    """

    def __init__(self, base, modulus, gen="w"):
        if not isinstance(base, Field):
            raise FieldError("base must be a field", pointer="/base")
        if not isinstance(gen, str) or not _NAME_RE.match(gen):
            raise FieldError(f"invalid generator name {gen!r}", pointer="/gen")
        if gen in _all_names(base):
            raise FieldError(f"generator name {gen!r} already used in the base", pointer="/gen")
        self.depth = base.depth + 1
        if self.depth > MAX_TOWER_DEPTH:
            raise FieldError("tower depth exceeds 3")
        if isinstance(modulus, str):
            from .parsing import parse_polynomial_payload
            try:
                modulus = parse_polynomial_payload(base, modulus, gen)
            except ParseError as exc:
                raise FieldError(f"bad modulus: {exc}", pointer="/modulus") from exc
        else:
            modulus = p_trim(base, [base.coerce(c) if not _is_payload(base, c) else c
                                    for c in modulus])
        if len(modulus) < 3:
            raise FieldError("modulus must have degree at least 2", pointer="/modulus")
        if modulus[-1] != base.one:
            raise FieldError("modulus must be monic", pointer="/modulus")
        self.base = base
        self.gen = gen
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.characteristic = base.characteristic
        self.is_finite = base.is_finite
        self.key = ("Ext", base.key, modulus, gen)
        self.zero = ()
        self.one = (base.one,)
        verdict = _certify_irreducible(base, modulus)
        if verdict is False:
            raise FieldError("modulus is reducible", pointer="/modulus")
        if verdict is None:
            raise FieldError("cannot certify modulus irreducible", pointer="/modulus")

    def add(self, a, b):
        return p_add(self.base, a, b)

    def sub(self, a, b):
        return p_sub(self.base, a, b)

    def neg(self, a):
        return p_neg(self.base, a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        B = self.base
        prod = p_mul(B, a, b)
        if len(prod) <= self.degree:
            return prod
        return p_mod(B, prod, self.modulus)

    def inv(self, a):
        if not a:
            raise FieldError("division by zero")
        g, s, _ = p_xgcd(self.base, a, self.modulus)
        return p_mod(self.base, s, self.modulus)

    def from_int(self, n):
        return self.from_base(self.base.from_int(n))

    def from_base(self, c):
        if c == self.base.zero:
            return ()
        return (c,)

    def generator(self):
        return (self.base.zero, self.base.one)

    def variables(self):
        out = {k: self.from_base(v) for k, v in self.base.variables().items()}
        out[self.gen] = self.generator()
        return out

    def format(self, a):
        return _format_poly(self.base, a, self.gen)

    def name(self):
        return f"{self.base.name()}[{self.gen}]/({_format_poly(self.base, self.modulus, self.gen)})"

    def descriptor(self):
        return {"kind": "Ext", "base": self.base.descriptor(),
                "modulus": _format_poly(self.base, self.modulus, self.gen), "gen": self.gen}

    def random(self, rng, height=2):
        B = self.base
        return p_trim(B, [B.random(rng) for _ in range(self.degree)])

    def order(self):
        return self.base.order() ** self.degree

    def elements(self):
        B = self.base
        for combo in itertools.product(list(B.elements()), repeat=self.degree):
            yield p_trim(B, combo)

    @property
    def prime_degree(self):
        return self.degree * self.base.prime_degree

    def prime_coords(self, a):
        B = self.base
        out = []
        for i in range(self.degree):
            out.extend(B.prime_coords(a[i] if i < len(a) else B.zero))
        return out

    def from_prime_coords(self, coords):
        B = self.base
        k = B.prime_degree
        return p_trim(B, [B.from_prime_coords(coords[i * k:(i + 1) * k])
                          for i in range(self.degree)])


def _is_payload(F, c):
    if isinstance(F, Rationals):
        return isinstance(c, type(mpq(0)))
    if isinstance(F, PrimeField):
        return False
    return isinstance(c, tuple)


def _all_names(F):
    names = set()
    for sub in F.subfields():
        if isinstance(sub, RationalFunctionField):
            names.add(sub.var)
        elif isinstance(sub, SimpleExtension):
            names.add(sub.gen)
    return names


def _certify_irreducible(base, modulus):
    from .polynomials import irreducible_payload
    return irreducible_payload(base, modulus, for_modulus=True)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class FieldElement:
    """An element of an exact field; supports + - * / ** and equality."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return other.value
            return self.field.embed_from(other.field, other.value)
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.div(o, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, int(e)))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.value == self.field.zero

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return False
        return self.value == o

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field.key, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field.name()}({self.field.format(self.value)!r})"


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------

def field_from_descriptor(desc):
    """Build a field from its JSON descriptor.

    Errors carry a JSON pointer relative to the descriptor in ``FieldError.pointer``.
    """
    if not isinstance(desc, dict):
        raise FieldError("field descriptor must be an object", pointer="")
    kind = desc.get("kind")
    if kind == "Q":
        return Rationals()
    if kind == "GFp":
        p = desc.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise FieldError("p must be an integer", pointer="/p")
        return PrimeField(p)
    if kind in ("RatFunc", "Ext"):
        if "base" not in desc:
            raise FieldError("missing base", pointer="/base")
        try:
            base = field_from_descriptor(desc["base"])
        except FieldError as exc:
            raise FieldError(str(exc), pointer="/base" + exc.pointer) from exc
        if kind == "RatFunc":
            return RationalFunctionField(base, desc.get("var", "t"))
        modulus = desc.get("modulus")
        if not isinstance(modulus, str):
            raise FieldError("modulus must be a string", pointer="/modulus")
        return SimpleExtension(base, modulus, desc.get("gen", "w"))
    raise FieldError(f"unknown field kind {kind!r}", pointer="/kind")


def GF(q, gen="w"):
    """GF(q) for q = p or a small prime power given by a default Conway-style modulus."""
    q = int(q)
    if gmpy2.is_prime(q):
        return PrimeField(q)
    for p in range(2, q + 1):
        if gmpy2.is_prime(p):
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r == 1:
                break
    else:  # pragma: no cover
        raise FieldError(f"{q} is not a prime power")
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    F = PrimeField(p)
    from .polynomials import first_irreducible_payload
    return SimpleExtension(F, first_irreducible_payload(F, k), gen)
