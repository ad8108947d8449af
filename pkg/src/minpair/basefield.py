"""Ground fields carrying a normalized rank-one discrete valuation.

Two families are supported: Q with the p-adic valuation and F_p(t)
with the t-adic one.  Both have value group Z, residue field GF(p) and
a perfect residue field, which is all the rest of the engine assumes.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exactpoly import (
    FunctionField,
    Poly,
    PrimeField,
    QQ,
    RationalFunction,
)
from .ordvals import INFINITY, OrderedValue, ValueGroup


class BaseFieldError(ValueError):
    pass


def _padic_ord(n, p):
    if n == 0:
        raise ValueError("ord of 0")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _t_ord(poly):
    for i, c in enumerate(poly.coeffs):
        if c:
            return i
    raise ValueError("ord of 0")


class BaseField:
    """A ground field with its distinguished valuation.

    kind is "Qp" (rationals, p-adic) or "Fpt" (rational functions over
    GF(p), t-adic).  Elements are Fraction resp. RationalFunction; all
    polynomial work happens over self.domain.
    """

    __slots__ = ("kind", "p", "domain", "residue_field")

    def __init__(self, kind, p):
        if kind not in ("Qp", "Fpt"):
            raise BaseFieldError("unknown base field kind %r" % (kind,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "residue_field", PrimeField(p))
        if kind == "Qp":
            object.__setattr__(self, "domain", QQ)
        else:
            object.__setattr__(
                self, "domain", FunctionField(self.residue_field, "t")
            )

    def __setattr__(self, name, value):
        raise AttributeError("BaseField is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, BaseField)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        if self.kind == "Qp":
            return "Q(v_%d)" % self.p
        return "F_%d(t)" % self.p

    def characteristic(self):
        return 0 if self.kind == "Qp" else self.p

    def residue_characteristic(self):
        return self.p

    def value_group(self):
        return ValueGroup(1, [OrderedValue.of(1)])

    def uniformizer(self):
        if self.kind == "Qp":
            return Fraction(self.p)
        return self.domain.variable()

    def uniformizer_power(self, k):
        k = Fraction(k)
        if k.denominator != 1:
            raise BaseFieldError("fractional uniformizer power %s" % k)
        k = int(k)
        if self.kind == "Qp":
            return Fraction(self.p) ** k
        return self.domain.variable() ** k

    def valuation(self, x):
        x = self.domain.coerce(x)
        if self.kind == "Qp":
            if x == 0:
                return INFINITY
            v = _padic_ord(x.numerator, self.p) - _padic_ord(
                x.denominator, self.p
            )
        else:
            if x.is_zero():
                return INFINITY
            v = _t_ord(x.num) - _t_ord(x.den)
        return OrderedValue.of(v)

    def residue(self, x):
        """Image in GF(p) of a valuation-integral element."""
        x = self.domain.coerce(x)
        v = self.valuation(x)
        if v is INFINITY:
            return 0
        if v < OrderedValue.of(0):
            raise BaseFieldError(
                "residue of %s undefined: negative value" % self.element_to_str(x)
            )
        if v > OrderedValue.of(0):
            return 0
        F = self.residue_field
        if self.kind == "Qp":
            return F.mul(
                F.coerce(x.numerator), F.inv(F.coerce(x.denominator))
            )
        num_c = x.num.coeff(0)
        den_c = x.den.coeff(0)
        return F.mul(num_c, F.inv(den_c))

    # ------------------------------------------------------------ text I/O

    def element_to_str(self, x):
        return self.domain.element_str(self.domain.coerce(x))

    def parse_element(self, text):
        if isinstance(text, (int, Fraction)):
            return self.domain.coerce(text)
        if isinstance(text, RationalFunction):
            return self.domain.coerce(text)
        text = str(text).strip()
        if self.kind == "Qp":
            try:
                return Fraction(text.replace(" ", ""))
            except (ValueError, ZeroDivisionError) as exc:
                raise BaseFieldError("bad rational %r" % text) from exc
        return self._parse_t_expr(text)

    def _parse_t_expr(self, text):
        """Parse c0 + c1*t + c2*t^k style expressions, optionally as a
        single quotient num/den with parenthesized sides."""
        text = text.replace(" ", "")
        if not text:
            raise BaseFieldError("empty element")
        num_str, den_str = _split_quotient(text)
        num = self._parse_t_poly(num_str)
        if den_str is None:
            den = Poly.constant(self.residue_field, 1)
        else:
            den = self._parse_t_poly(den_str)
            if den.is_zero():
                raise BaseFieldError("zero denominator in %r" % text)
        return RationalFunction(num, den)

    def _parse_t_poly(self, text):
        text = _strip_parens(text)
        if not text:
            raise BaseFieldError("empty polynomial")
        terms = _split_terms(text)
        F = self.residue_field
        coeffs = {}
        for term in terms:
            m = re.fullmatch(
                r"([+-]?\d*)(\*?)(t(?:\^(\d+))?)?", term
            )
            if not m or (m.group(2) and not (m.group(1).strip("+-")
                                             and m.group(3))):
                raise BaseFieldError("bad term %r" % term)
            cs, has_t, es = m.group(1), bool(m.group(3)), m.group(4)
            if cs in ("", "+", "-"):
                if not has_t:
                    raise BaseFieldError("bad term %r" % term)
                c = -1 if cs == "-" else 1
            else:
                c = int(cs)
            k = 0
            if has_t:
                k = int(es) if es else 1
            coeffs[k] = F.add(coeffs.get(k, 0), F.coerce(c))
        size = max(coeffs) + 1
        out = [F.zero()] * size
        for k, c in coeffs.items():
            out[k] = c
        return Poly(F, out, coerce=False)


def _split_quotient(text):
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return text[:i], text[i + 1:]
    return text, None


def _strip_parens(text):
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        ok = True
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(text) - 1:
                    ok = False
                    break
        if not ok:
            break
        text = text[1:-1]
    return text


def _split_terms(text):
    terms = []
    start = 0
    for i, ch in enumerate(text):
        if ch in "+-" and i > start:
            terms.append(text[start:i])
            start = i
    terms.append(text[start:])
    return terms


def make_base(kind, p):
    return BaseField(kind, p)
