"""Exact univariate polynomial arithmetic over pluggable coefficient fields.

Every coefficient domain exposes the same small protocol (zero, one,
add, mul, inv, ...) so the Poly class and the algorithms written on top
of it (division, gcd, resultants, Taylor expansion, interpolation) work
uniformly over Q, prime fields, rational function fields and quotient
rings of any of those.  Elements are plain hashable Python values:
Fraction for Q, int for GF(p), Poly for quotient rings and
RationalFunction for function fields.
"""

from __future__ import annotations

from fractions import Fraction


class _DomainBase:
    """Shared derived operations; concrete domains fill in the rest."""

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return self.eq(a, self.zero())

    def is_one(self, a):
        return self.eq(a, self.one())

    def __eq__(self, other):
        return isinstance(other, _DomainBase) and self.key() == other.key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key())


class RationalDomain(_DomainBase):
    """The field Q; elements are Fraction."""

    __slots__ = ()

    def key(self):
        return ("Q",)

    def characteristic(self):
        return 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("1/0 in Q")
        return 1 / a

    def eq(self, a, b):
        return a == b

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def element_str(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"


QQ = RationalDomain()


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField(_DomainBase):
    """GF(p) for a prime p; elements are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("%r is not prime" % (p,))
        object.__setattr__(self, "p", p)

    def key(self):
        return ("GF", self.p)

    def characteristic(self):
        return self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("1/0 in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(
                    "denominator of %s vanishes in GF(%d)" % (x, self.p)
                )
            return self.mul(x.numerator % self.p, self.inv(x.denominator))
        raise TypeError("cannot coerce %r into GF(%d)" % (x, self.p))

    def elements(self):
        return range(self.p)

    def element_str(self, a):
        return str(a)

    def __repr__(self):
        return "GF(%d)" % self.p


NEG_INF = float("-inf")


class Poly:
    """Dense univariate polynomial over a coefficient domain.

    Immutable; coeffs[i] is the coefficient of X^i and trailing zeros
    are trimmed, so the zero polynomial has an empty tuple and degree
    NEG_INF.
    """

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain, coeffs, coerce=True):
        if coerce:
            cs = [domain.coerce(c) for c in coeffs]
        else:
            cs = list(coeffs)
        while cs and domain.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, domain):
        return cls(domain, (), coerce=False)

    @classmethod
    def constant(cls, domain, c):
        return cls(domain, (c,))

    @classmethod
    def variable(cls, domain):
        return cls(domain, (domain.zero(), domain.one()), coerce=False)

    @classmethod
    def monomial(cls, domain, k, c=None):
        c = domain.one() if c is None else domain.coerce(c)
        return cls(domain, (domain.zero(),) * k + (c,), coerce=False)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.domain.zero()

    def is_monic(self):
        return bool(self.coeffs) and self.domain.is_one(self.coeffs[-1])

    def _same(self, other):
        if not isinstance(other, Poly):
            raise TypeError("expected a Poly, got %r" % (other,))
        if self.domain != other.domain:
            raise TypeError("polynomials over different domains")
        return other

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.domain == other.domain and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.domain.key(), self.coeffs))

    def __add__(self, other):
        other = self._same(other)
        d = self.domain
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = d.add(cs[i], c)
        return Poly(d, cs, coerce=False)

    def __neg__(self):
        d = self.domain
        return Poly(d, [d.neg(c) for c in self.coeffs], coerce=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._same(other)
        d = self.domain
        if self.is_zero() or other.is_zero():
            return Poly.zero(d)
        cs = [d.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if d.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                cs[i + j] = d.add(cs[i + j], d.mul(a, b))
        return Poly(d, cs, coerce=False)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        d = self.domain
        c = d.coerce(c)
        return Poly(d, [d.mul(c, x) for x in self.coeffs], coerce=False)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers take non-negative ints")
        result = Poly.constant(self.domain, self.domain.one())
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        d = self.domain
        lead_inv = None if other.is_monic() else d.inv(other.leading())
        rem = list(self.coeffs)
        m = len(other.coeffs)
        quo = [d.zero()] * max(len(rem) - m + 1, 0)
        for i in range(len(rem) - m, -1, -1):
            c = rem[i + m - 1]
            if lead_inv is not None:
                c = d.mul(c, lead_inv)
            if d.is_zero(c):
                continue
            quo[i] = c
            for j, b in enumerate(other.coeffs[:-1]):
                rem[i + j] = d.sub(rem[i + j], d.mul(c, b))
            rem[i + m - 1] = d.zero()
        return Poly(d, quo, coerce=False), Poly(d, rem, coerce=False)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        if self.is_monic():
            return self
        return self.scale(self.domain.inv(self.leading()))

    def derivative(self):
        d = self.domain
        cs = [
            d.mul(d.coerce(i), self.coeffs[i])
            for i in range(1, len(self.coeffs))
        ]
        return Poly(d, cs, coerce=False)

    def evaluate(self, x):
        d = self.domain
        x = d.coerce(x)
        acc = d.zero()
        for c in reversed(self.coeffs):
            acc = d.add(d.mul(acc, x), c)
        return acc

    def map_domain(self, new_domain, convert=None):
        if convert is None:
            convert = new_domain.coerce
        return Poly(new_domain, [convert(c) for c in self.coeffs],
                    coerce=False)

    def to_str(self, var="X"):
        if self.is_zero():
            return "0"
        d = self.domain
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if d.is_zero(c):
                continue
            cstr = d.element_str(c)
            if i == 0:
                parts.append(cstr)
            else:
                xpow = var if i == 1 else "%s^%d" % (var, i)
                if d.is_one(c):
                    parts.append(xpow)
                else:
                    if any(op in cstr[1:] for op in "+-") or "/" in cstr:
                        cstr = "(%s)" % cstr
                    parts.append("%s*%s" % (cstr, xpow))
        return " + ".join(parts)

    def __repr__(self):
        return "Poly(%s)" % self.to_str()


def poly_gcd(f, g):
    """Monic gcd over a field; gcd(0, 0) = 0."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def poly_xgcd(f, g):
    """Returns (d, s, t) with d = s*f + t*g and d the monic gcd."""
    dom = f.domain
    one = Poly.constant(dom, dom.one())
    zero = Poly.zero(dom)
    old_r, r = f, g
    old_s, s = one, zero
    old_t, t = zero, one
    while not r.is_zero():
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r.is_zero():
        return old_r, old_s, old_t
    c = dom.inv(old_r.leading())
    return old_r.scale(c), old_s.scale(c), old_t.scale(c)


def resultant(f, g):
    """Resultant of two polynomials over a field.

    Classical Euclidean descent: with f = q*g + r,
    res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * res(g, r).
    """
    d = f._same(g).domain
    if f.is_zero() and g.is_zero():
        raise ValueError("res(0, 0) is undefined")
    if f.is_zero() or g.is_zero():
        other = g if f.is_zero() else f
        return d.one() if other.degree == 0 else d.zero()
    if f.degree == 0:
        return _dpow(d, f.leading(), g.degree)
    acc = d.one()
    negate = False
    a, b = f, g
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return d.zero()
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            negate = not negate
        acc = d.mul(acc, _dpow(d, b.leading(), a.degree - r.degree))
        a, b = b, r
    acc = d.mul(acc, _dpow(d, b.leading(), a.degree))
    return d.neg(acc) if negate else acc


def _dpow(d, x, k):
    acc = d.one()
    for _ in range(int(k)):
        acc = d.mul(acc, x)
    return acc


def taylor_coefficients(f, center):
    """Coefficients c_k with f(X) = sum c_k (X - center)^k.

    Equivalently f(Y + center) = sum c_k Y^k, which is how shifted
    polynomials are produced.  Runs repeated synthetic division by
    (X - center) on a plain list, the remainder of each round being
    the next coefficient.
    """
    d = f.domain
    center = d.coerce(center)
    rest = list(f.coeffs)
    out = []
    for k in range(len(rest)):
        acc = d.zero()
        for i in range(len(rest) - 1, k - 1, -1):
            acc = d.add(d.mul(acc, center), rest[i])
            rest[i] = acc
        out.append(rest[k])
        rest[k] = d.zero()
    if not out:
        out.append(d.zero())
    return out


def compose_mod(f, g, modulus):
    """f(g(X)) reduced mod modulus, by Horner on the coefficients of f."""
    d = f.domain
    acc = Poly.zero(d)
    for c in reversed(f.coeffs):
        acc = (acc * g + Poly.constant(d, c)) % modulus
    return acc


def interpolate(domain, points):
    """The unique polynomial of degree < len(points) through the given
    (x, y) pairs; the x values must be pairwise distinct."""
    xs = [domain.coerce(x) for x, _ in points]
    ys = [domain.coerce(y) for _, y in points]
    full = Poly.constant(domain, domain.one())
    for x in xs:
        full = full * Poly(domain, (domain.neg(x), domain.one()), coerce=False)
    acc = Poly.zero(domain)
    for x, y in zip(xs, ys):
        basis = full // Poly(domain, (domain.neg(x), domain.one()),
                             coerce=False)
        denom = basis.evaluate(x)
        acc = acc + basis.scale(domain.mul(y, domain.inv(denom)))
    return acc


class QuotientRing(_DomainBase):
    """base[X] / (modulus) with a monic modulus.

    All arithmetic is the obvious one on reduced representatives.  The
    caller is responsible for only passing an irreducible modulus when
    field behaviour (inverses of every nonzero element) is relied on;
    inverting a zero divisor raises ZeroDivisionError either way.
    """

    __slots__ = ("base", "modulus", "var")

    def __init__(self, base, modulus, var="a"):
        if not isinstance(modulus, Poly) or modulus.domain != base:
            raise TypeError("modulus must be a Poly over the base domain")
        if modulus.degree < 1:
            raise ValueError("modulus must have degree at least 1")
        if not modulus.is_monic():
            raise ValueError("modulus must be monic")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "var", var)

    def key(self):
        return ("quot", self.base.key(), self.modulus.coeffs)

    def characteristic(self):
        return self.base.characteristic()

    @property
    def degree(self):
        return self.modulus.degree

    def generator(self):
        return Poly.variable(self.base) % self.modulus

    def zero(self):
        return Poly.zero(self.base)

    def one(self):
        return Poly.constant(self.base, self.base.one())

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return (a * b) % self.modulus

    def inv(self, a):
        if a.is_zero():
            raise ZeroDivisionError("1/0 in quotient ring")
        g, s, _ = poly_xgcd(a, self.modulus)
        if g.degree != 0:
            raise ZeroDivisionError(
                "%r is a zero divisor modulo %r" % (a, self.modulus)
            )
        return s % self.modulus

    def eq(self, a, b):
        return a.coeffs == b.coeffs

    def coerce(self, x):
        if isinstance(x, Poly):
            if x.domain == self.base:
                return x % self.modulus
            raise TypeError("polynomial over a different base")
        return Poly.constant(self.base, self.base.coerce(x))

    def element_str(self, a):
        return a.to_str(var=self.var)

    def __repr__(self):
        return "QuotientRing(%r mod %s)" % (self.base,
                                            self.modulus.to_str(self.var))


class RationalFunction:
    """num/den with both Poly over one field, den monic, gcd-reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        if not den.is_monic():
            c = den.domain.inv(den.leading())
            num, den = num.scale(c), den.scale(c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return RationalFunction(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("powers take ints")
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den ** (-k), self.num ** (-k))
        return RationalFunction(self.num ** k, self.den ** k)

    def __repr__(self):
        return "RationalFunction(%s)" % self.to_str()

    def to_str(self, var="t"):
        top = self.num.to_str(var)
        if self.den.degree == 0:
            return top
        bottom = self.den.to_str(var)
        if "+" in top[1:] or "-" in top[1:] or "*" in top:
            top = "(%s)" % top
        if "+" in bottom[1:] or "-" in bottom[1:] or "*" in bottom:
            bottom = "(%s)" % bottom
        return "%s/%s" % (top, bottom)


class FunctionField(_DomainBase):
    """The rational function field base(var); elements are
    RationalFunction over the base prime field."""

    __slots__ = ("base", "var")

    def __init__(self, base, var="t"):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "var", var)

    def key(self):
        return ("ratfunc", self.base.key(), self.var)

    def characteristic(self):
        return self.base.characteristic()

    def zero(self):
        return RationalFunction(
            Poly.zero(self.base), Poly.constant(self.base, self.base.one())
        )

    def one(self):
        one = Poly.constant(self.base, self.base.one())
        return RationalFunction(one, one)

    def variable(self):
        one = Poly.constant(self.base, self.base.one())
        return RationalFunction(Poly.variable(self.base), one)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a.is_zero():
            raise ZeroDivisionError("1/0 in function field")
        return RationalFunction(a.den, a.num)

    def eq(self, a, b):
        return a == b

    def coerce(self, x):
        if isinstance(x, RationalFunction):
            if x.num.domain != self.base:
                raise TypeError("function over a different constant field")
            return x
        one = Poly.constant(self.base, self.base.one())
        if isinstance(x, Poly):
            if x.domain != self.base:
                raise TypeError("polynomial over a different constant field")
            return RationalFunction(x, one)
        return RationalFunction(
            Poly.constant(self.base, self.base.coerce(x)), one
        )

    def element_str(self, a):
        return a.to_str(self.var)

    def __repr__(self):
        return "FunctionField(%r, %r)" % (self.base, self.var)


def monic_polys(field, degree):
    """All monic polynomials of exactly the given degree over a finite
    field domain exposing elements()."""
    elems = list(field.elements())
    coeffs = [field.zero()] * degree + [field.one()]

    def rec(i):
        if i == degree:
            yield Poly(field, list(coeffs), coerce=False)
            return
        for e in elems:
            coeffs[i] = e
            yield from rec(i + 1)

    yield from rec(0)


def brute_irreducible(f):
    """Trial-division irreducibility over a finite field; fine for the
    tiny degrees this engine ever sees."""
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.domain, d):
            if (f % g).is_zero():
                return False
    return True
