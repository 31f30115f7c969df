"""Univariate polynomials over the exact fields, with root finding,
irreducibility tests, factorisation and squarefree parts.

Routines working on raw payload tuples carry a ``_payload`` suffix; the
``Polynomial`` class wraps them for public use.
"""

from __future__ import annotations

import itertools

import gmpy2
from gmpy2 import mpq

from .errors import FieldError
from .fields import (FieldElement, PrimeField, RationalFunctionField, Rationals,
                     SimpleExtension, _format_poly, p_add, p_deriv, p_divmod, p_eval,
                     p_gcd, p_monic, p_mul, p_neg, p_pow, p_powmod, p_scale, p_sub, p_trim)

ENUMERATION_LIMIT = 1 << 16


class Polynomial:
    """Polynomial over a field, coefficients stored lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        self.field = field
        self.coeffs = p_trim(field, [field.coerce(c) if isinstance(c, (int, str, FieldElement))
                                     else c for c in coeffs])

    @classmethod
    def from_payload(cls, field, coeffs):
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = p_trim(field, coeffs)
        return obj

    @classmethod
    def x(cls, field):
        return cls.from_payload(field, (field.zero, field.one))

    @classmethod
    def parse(cls, field, text, var="X"):
        from .parsing import parse_polynomial_payload
        return cls.from_payload(field, parse_polynomial_payload(field, text, var))

    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            return self.field(0)
        return FieldElement(self.field, self.coeffs[-1])

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return FieldElement(self.field, self.coeffs[i])
        return self.field(0)

    def monic(self):
        return Polynomial.from_payload(self.field, p_monic(self.field, self.coeffs))

    def derivative(self):
        return Polynomial.from_payload(self.field, p_deriv(self.field, self.coeffs))

    def _wrap(self, other):
        if isinstance(other, Polynomial):
            return other.coeffs
        c = self.field.coerce(other)
        return () if c == self.field.zero else (c,)

    def __add__(self, other):
        return Polynomial.from_payload(self.field, p_add(self.field, self.coeffs, self._wrap(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Polynomial.from_payload(self.field, p_sub(self.field, self.coeffs, self._wrap(other)))

    def __rsub__(self, other):
        return Polynomial.from_payload(self.field, p_sub(self.field, self._wrap(other), self.coeffs))

    def __neg__(self):
        return Polynomial.from_payload(self.field, p_neg(self.field, self.coeffs))

    def __mul__(self, other):
        return Polynomial.from_payload(self.field, p_mul(self.field, self.coeffs, self._wrap(other)))

    __rmul__ = __mul__

    def __pow__(self, e):
        return Polynomial.from_payload(self.field, p_pow(self.field, self.coeffs, int(e)))

    def __divmod__(self, other):
        q, r = p_divmod(self.field, self.coeffs, self._wrap(other))
        return Polynomial.from_payload(self.field, q), Polynomial.from_payload(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        try:
            return self.coeffs == self._wrap(other)
        except Exception:
            return False

    def __hash__(self):
        return hash((self.field.key, self.coeffs))

    def __call__(self, x):
        if isinstance(x, FieldElement):
            return FieldElement(self.field, p_eval(self.field, self.coeffs, self.field.coerce(x)))
        if isinstance(x, int):
            return FieldElement(self.field, p_eval(self.field, self.coeffs, self.field.from_int(x)))
        # anything supporting ring operations with an identity, e.g. matrices
        from .linalg import Matrix, poly_eval_matrix
        if isinstance(x, Matrix):
            return poly_eval_matrix(self, x)
        raise TypeError(f"cannot evaluate at {x!r}")

    def gcd(self, other):
        return Polynomial.from_payload(self.field, p_gcd(self.field, self.coeffs, self._wrap(other)))

    def format(self, var="X"):
        return _format_poly(self.field, self.coeffs, var)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.field.name()}, {self.format()!r})"

    # structural predicates
    def is_separable(self):
        """gcd(f, f') = 1."""
        return is_separable_payload(self.field, self.coeffs)

    def is_irreducible(self):
        """True / False, or None when no complete test exists for the field."""
        return irreducible_payload(self.field, self.coeffs)

    def roots(self):
        """(distinct roots as FieldElements, complete flag)."""
        roots, complete = find_roots_payload(self.field, self.coeffs)
        return [FieldElement(self.field, r) for r in roots], complete

    def squarefree_part(self):
        return Polynomial.from_payload(self.field, radical_payload(self.field, self.coeffs))

    def factor(self):
        """List of (monic irreducible factor, multiplicity), or None if unavailable."""
        fac = factor_payload(self.field, self.coeffs)
        if fac is None:
            return None
        return [(Polynomial.from_payload(self.field, g), e) for g, e in fac]


def poly_gcd(f, g):
    """Monic gcd of two polynomials over the same field."""
    if f.field != g.field:
        raise FieldError("polynomials over different fields")
    if f.is_zero() and g.is_zero():
        raise FieldError("gcd(0, 0) is undefined")
    return f.gcd(g)


def is_separable(f):
    """gcd(f, f') = 1 for a nonconstant f."""
    if f.degree() < 1:
        raise FieldError("separability of a constant polynomial")
    return f.is_separable()


# ---------------------------------------------------------------------------
# separability, squarefree parts
# ---------------------------------------------------------------------------

def is_separable_payload(F, f):
    if not f:
        raise FieldError("the zero polynomial has no separability")
    return len(p_gcd(F, f, p_deriv(F, f))) == 1


def pth_root_poly_payload(F, f):
    """g with g^p = f, for f a polynomial in X^p over a perfect field."""
    p = F.characteristic
    if any(c != F.zero for i, c in enumerate(f) if i % p):
        raise FieldError("polynomial is not a p-th power")
    return p_trim(F, [F.pth_root(f[i]) for i in range(0, len(f), p)])


def radical_payload(F, f):
    """Monic squarefree part: product of the distinct irreducible factors.

    Requires a perfect field.
    """
    if not f:
        raise FieldError("the zero polynomial has no squarefree part")
    if not F.is_perfect():
        raise FieldError("squarefree parts need a perfect field")
    f = p_monic(F, f)
    if len(f) == 1:
        return f
    df = p_deriv(F, f)
    if not df:
        return radical_payload(F, pth_root_poly_payload(F, f))
    g = p_gcd(F, f, df)
    a = p_divmod(F, f, g)[0]
    if len(g) == 1:
        return a
    # a carries every factor of multiplicity prime to p; g may hold the rest
    rg = radical_payload(F, g)
    return p_monic(F, p_divmod(F, p_mul(F, a, rg), p_gcd(F, a, rg))[0])


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

def _sympy_poly_q(f):
    import sympy
    x = sympy.Symbol("x")
    coeffs = [sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(f)]
    return sympy.Poly(coeffs, x, domain="QQ")


def _q_factor(f):
    """Monic irreducible factors over Q via sympy, as payload tuples."""
    P = _sympy_poly_q(f)
    _, factors = P.factor_list()
    out = []
    for g, e in factors:
        cs = [mpq(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
        lead = cs[-1]
        out.append((tuple(c / lead for c in cs), e))
    return out


def find_roots_payload(F, f):
    """Distinct roots of ``f`` in ``F`` plus a flag telling whether the list is complete."""
    f = p_trim(F, f)
    if not f:
        raise FieldError("the zero polynomial has every element as a root")
    if len(f) == 1:
        return [], True
    if len(f) == 2:
        return [F.neg(F.div(f[0], f[1]))], True
    if F.is_finite:
        if F.order() > ENUMERATION_LIMIT:
            return _search_roots(F, f), False
        return [x for x in F.elements() if p_eval(F, f, x) == F.zero], True
    if isinstance(F, Rationals):
        roots = []
        for g, _ in _q_factor(f):
            if len(g) == 2:
                roots.append(-g[0])
        return roots, True
    if isinstance(F, RationalFunctionField) and F.base.is_finite:
        return _ratfunc_roots(F, f)
    return _search_roots(F, f), False


def _poly_candidates(B, max_deg):
    elems = list(B.elements())
    for d in range(-1, max_deg + 1):
        if d < 0:
            yield ()
            continue
        for lower in itertools.product(elems, repeat=d):
            for lead in elems:
                if lead != B.zero:
                    yield tuple(lower) + (lead,)


def _integral_form(F, f):
    """Clear denominators of ``f`` over ``B(t)``: coefficient polynomials in B[t]."""
    B = F.base
    den = (B.one,)
    for c in f:
        d = c[1]
        g = p_gcd(B, den, d)
        den = p_divmod(B, p_mul(B, den, d), g)[0]
    out = []
    for c in f:
        out.append(p_divmod(B, p_mul(B, c[0], den), c[1])[0])
    return out


def _ratfunc_roots(F, f):
    B = F.base
    a = _integral_form(F, f)
    d = len(a) - 1
    lead = a[-1]
    # Y = lead * X turns the equation monic with coefficients in B[t]
    b = [p_mul(B, a[i], p_pow(B, lead, d - 1 - i)) for i in range(d)]
    bound = 0
    for i, bi in enumerate(b):
        if bi:
            bound = max(bound, (len(bi) - 1) // (d - i))
    count = sum(B.order() ** (k + 1) for k in range(bound + 1))
    if count > ENUMERATION_LIMIT:
        return _search_roots(F, f), False
    roots = []
    inv_lead = F.inv(F.make(lead))
    for Y in _poly_candidates(B, bound):
        X = F.mul(F.make(Y), inv_lead)
        if p_eval(F, f, X) == F.zero:
            roots.append(X)
    return roots, True


def _search_roots(F, f, limit=4096):
    """Best-effort bounded search; the result may miss roots."""
    found = []
    seen = set()
    for x in _small_elements(F, limit):
        if x in seen:
            continue
        seen.add(x)
        if p_eval(F, f, x) == F.zero:
            found.append(x)
    return found


def _small_elements(F, limit):
    """A deterministic finite supply of 'small' elements of ``F``."""
    if F.is_finite and F.order() <= limit:
        yield from F.elements()
        return
    if isinstance(F, PrimeField):
        for a in range(min(F.p, limit)):
            yield a
        return
    if isinstance(F, Rationals):
        count = 0
        for h in range(0, 50):
            for num in range(-h, h + 1):
                for den in range(1, h + 1):
                    if max(abs(num), den) == h and gmpy2.gcd(num, den) == 1:
                        yield mpq(num, den)
                        count += 1
                        if count >= limit:
                            return
        yield mpq(0)
        return
    if isinstance(F, RationalFunctionField):
        B = F.base
        base_elems = list(itertools.islice(_small_elements(B, 16), 16))
        count = 0
        for d in range(0, 4):
            for coeffs in itertools.product(base_elems, repeat=d + 1):
                yield F.make(coeffs)
                count += 1
                if count >= limit:
                    return
        return
    if isinstance(F, SimpleExtension):
        B = F.base
        per = max(2, int(round(limit ** (1.0 / F.degree))))
        base_elems = list(itertools.islice(_small_elements(B, per), per))
        for coeffs in itertools.product(base_elems, repeat=F.degree):
            yield p_trim(B, coeffs)
        return


def root_multiplicity_payload(F, f, r):
    m = 0
    lin = (F.neg(r), F.one)
    while f:
        q, rem = p_divmod(F, f, lin)
        if rem:
            break
        m += 1
        f = q
    return m


# ---------------------------------------------------------------------------
# irreducibility and factorisation
# ---------------------------------------------------------------------------

def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def rabin_irreducible_payload(F, f):
    """Rabin's test over a finite field."""
    f = p_monic(F, f)
    n = len(f) - 1
    q = F.order()
    X = (F.zero, F.one)

    def frob_power(k):
        h = X
        for _ in range(k):
            h = p_powmod(F, h, q, f)
        return h

    if frob_power(n) != X:
        return False
    for r in _prime_factors(n):
        h = p_sub(F, frob_power(n // r), X)
        if len(p_gcd(F, h, f)) != 1:
            return False
    return True


def monic_polys_of_degree(F, d):
    elems = list(F.elements())
    for lower in itertools.product(elems, repeat=d):
        yield tuple(lower) + (F.one,)


def trial_division_irreducible_payload(F, f):
    """Exhaustive trial division by monic polynomials of degree <= deg/2."""
    f = p_monic(F, f)
    n = len(f) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for g in monic_polys_of_degree(F, d):
            if not p_divmod(F, f, g)[1]:
                return False
    return True


def irreducible_payload(F, f, for_modulus=False):
    """True/False, or None when irreducibility cannot be decided for ``F``."""
    f = p_trim(F, f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if F.is_finite:
        if for_modulus and sum(F.order() ** d for d in range(1, n // 2 + 1)) <= ENUMERATION_LIMIT:
            return trial_division_irreducible_payload(F, f)
        return rabin_irreducible_payload(F, f)
    if isinstance(F, Rationals):
        if n <= 3:
            roots, _ = find_roots_payload(F, f)
            return not roots
        return bool(_sympy_poly_q(f).is_irreducible)
    if n <= 3:
        roots, complete = find_roots_payload(F, f)
        if roots:
            return False
        return True if complete else None
    return None


def factor_payload(F, f):
    """[(monic irreducible, multiplicity)] or None when unavailable for ``F``."""
    f = p_monic(F, p_trim(F, f))
    if not f:
        raise FieldError("cannot factor the zero polynomial")
    if len(f) == 1:
        return []
    if isinstance(F, Rationals):
        return sorted(_q_factor(f), key=lambda ge: (len(ge[0]), ge[0]))
    if F.is_finite:
        out = []
        rem = f
        d = 1
        while len(rem) - 1 >= 2 * d:
            for g in monic_polys_of_degree(F, d):
                e = 0
                while True:
                    q, r = p_divmod(F, rem, g)
                    if r:
                        break
                    rem, e = q, e + 1
                if e:
                    out.append((g, e))
            d += 1
        if len(rem) > 1:
            # the leftover is irreducible, possibly equal to an earlier factor
            for i, (g, e) in enumerate(out):
                if g == rem:
                    out[i] = (g, e + 1)
                    break
            else:
                out.append((rem, 1))
        return sorted(out, key=lambda ge: (len(ge[0]), ge[0]))
    # partial: linear factors from a complete root list, when the rest has degree <= 3
    roots, complete = find_roots_payload(F, f)
    if not complete:
        return None
    out = []
    rem = f
    for r in roots:
        e = root_multiplicity_payload(F, rem, r)
        lin = (F.neg(r), F.one)
        rem = p_divmod(F, rem, p_pow(F, lin, e))[0]
        out.append((lin, e))
    if len(rem) > 1:
        if len(rem) - 1 <= 3:
            out.append((rem, 1))
        else:
            return None
    return out


def first_irreducible_payload(F, d):
    """First monic irreducible of degree d in the enumeration order."""
    for g in monic_polys_of_degree(F, d):
        if irreducible_payload(F, g):
            return g
    raise FieldError(f"no irreducible polynomial of degree {d}")  # pragma: no cover


# ---------------------------------------------------------------------------
# n-th powers and n-th roots
# ---------------------------------------------------------------------------

def _poly_mth_root(F, g, m):
    """Monic h with h^m = g for monic g, m invertible in F; None if none."""
    n = len(g) - 1
    if n % m:
        return None
    D = n // m
    h = [F.zero] * (D + 1)
    h[D] = F.one
    inv_m = F.inv(F.from_int(m))
    for j in range(1, D + 1):
        cur = p_pow(F, p_trim(F, h), m)
        idx = n - j
        have = cur[idx] if idx < len(cur) else F.zero
        h[D - j] = F.mul(F.sub(g[idx], have), inv_m)
    h = p_trim(F, h)
    return h if p_pow(F, h, m) == tuple(g) else None


def nth_root(F, a, n):
    """Some b in F with b^n = a, or None when none was found.

    Complete for finite fields, Q and rational function fields over those.
    """
    if n == 1 or a == F.zero or a == F.one:
        return a
    if isinstance(F, PrimeField) or (F.is_finite and F.order() <= ENUMERATION_LIMIT):
        for b in F.elements():
            if F.pow(b, n) == a:
                return b
        return None
    if isinstance(F, Rationals):
        num, den = int(a.numerator), int(a.denominator)
        if num < 0 and n % 2 == 0:
            return None
        rn, ok1 = gmpy2.iroot(abs(num), n)
        rd, ok2 = gmpy2.iroot(den, n)
        if not (ok1 and ok2):
            return None
        return mpq(int(rn) * (-1 if num < 0 else 1), int(rd))
    if isinstance(F, RationalFunctionField):
        num, den = a
        rn = _poly_nth_root(F.base, num, n)
        rd = _poly_nth_root(F.base, den, n)
        if rn is None or rd is None:
            return None
        return F.make(rn, rd)
    roots, _ = find_roots_payload(F, (F.neg(a),) + (F.zero,) * (n - 1) + (F.one,))
    return roots[0] if roots else None


def _poly_nth_root(B, f, n):
    """Polynomial h with h^n = f over base B, or None."""
    p = B.characteristic
    lead = f[-1]
    c = nth_root(B, lead, n)
    if c is None:
        return None
    g = p_monic(B, f)
    e = 0
    while p and n % p == 0:
        # p-th root via the coefficient test
        if any(x != B.zero for i, x in enumerate(g) if i % p):
            return None
        if not B.is_perfect():
            return None
        g = p_trim(B, [B.pth_root(g[i]) for i in range(0, len(g), p)])
        n //= p
        e += 1
    h = _poly_mth_root(B, g, n) if n > 1 else g
    if h is None:
        return None
    return p_scale(B, c, h)


def is_nth_power_ratfunc(F, a, n):
    """Whether the element payload ``a`` of a rational function field is an n-th power."""
    if not isinstance(F, RationalFunctionField):
        raise FieldError("expected a rational function field")
    if n < 1:
        raise FieldError("the exponent must be positive")
    return nth_root(F, a, n) is not None
