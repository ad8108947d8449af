"""Certified simple algebraic extensions K(a) of a valued ground field.

An extension is admitted only when the Newton polygon of its monic
generator Q is one-sided with slope -h/e, gcd(h, e) = 1, and the
residual polynomial attached to that side is irreducible over the
residue field GF(p).  Under these conditions Q stays irreducible over
the henselization, the valuation extends uniquely to K(a), the
extension is defectless with invariants e (ramification) and f
(residue degree), e*f = deg Q, and the residue field is GF(p^f)
generated by the class of the unit a^e / pi^h.

Uniqueness of the extension is what makes the norm formula
w(x) = v(Res(Q, x)) / deg(Q) valid, and everything downstream leans on
that formula, so none of these checks are optional.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .basefield import BaseField
from .exactpoly import (
    Poly,
    PrimeField,
    QuotientRing,
    brute_irreducible,
    interpolate,
    resultant,
    taylor_coefficients,
)
from .ordvals import INFINITY, OrderedValue, ValueGroup

RESIDUE_SEARCH_BOUND = 64


class CertificationError(ValueError):
    """The generator is outside the class this engine can certify."""

    def __init__(self, message, polygon=None):
        super().__init__(message)
        self.polygon = polygon


def lower_hull(points):
    """Vertices of the lower convex hull, left to right.

    Points are (x, y) pairs with exact coordinates; collinear interior
    points are dropped.
    """
    pts = sorted(points)
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            cross = (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1)
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def root_value_multiset(values):
    """Root valuations of a polynomial from its coefficient valuations.

    values[k] is the valuation (OrderedValue or INFINITY) of the
    coefficient of Y^k; the leading one must be finite.  Returns a list
    of (valuation, multiplicity) pairs, one per polygon edge, with an
    INFINITY entry for the power of Y dividing the polynomial.  Entries
    are sorted with the largest valuation first.
    """
    n = len(values) - 1
    if n < 0 or values[n] is INFINITY:
        raise ValueError("leading coefficient must have finite valuation")
    ord_y = 0
    while values[ord_y] is INFINITY:
        ord_y += 1
    out = []
    if ord_y:
        out.append((INFINITY, ord_y))
    pts = [
        (k, values[k][0])
        for k in range(ord_y, n + 1)
        if values[k] is not INFINITY
    ]
    hull = lower_hull(pts)
    # hull slopes increase left to right, so root values come out in
    # descending order already, right behind the INFINITY entry
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = Fraction(y2 - y1, x2 - x1)
        out.append((OrderedValue.of(-slope), x2 - x1))
    return out


class DistanceMultiset:
    """Multiset of valuations v(a - a_i) over all roots a_i of Q,
    including a itself (an INFINITY entry per repetition of a)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(entries)

    def total(self):
        return sum(m for _, m in self.entries)

    def infinite_count(self):
        return sum(m for d, m in self.entries if d is INFINITY)

    def count_ge(self, gamma):
        rank = gamma.rank if gamma is not INFINITY else 1
        total = 0
        for d, m in self.entries:
            if d is INFINITY or d.embed(rank) >= gamma:
                total += m
        return total

    def sum_below(self, gamma):
        """Sum of the finite distances strictly under gamma, as a
        rank-one value."""
        rank = gamma.rank if gamma is not INFINITY else 1
        acc = Fraction(0)
        for d, m in self.entries:
            if d is not INFINITY and d.embed(rank) < gamma:
                acc += m * d[0]
        return OrderedValue.of(acc)

    def max_finite(self):
        best = None
        for d, m in self.entries:
            if d is not INFINITY and (best is None or d > best):
                best = d
        return best

    def to_json(self):
        from .ordvals import value_to_json

        return [[value_to_json(d), m] for d, m in self.entries]

    def __eq__(self, other):
        if not isinstance(other, DistanceMultiset):
            return NotImplemented
        return sorted(self.entries, key=_entry_key) == sorted(
            other.entries, key=_entry_key
        )

    def __repr__(self):
        return "DistanceMultiset(%s)" % (list(self.entries),)


def _entry_key(entry):
    d, m = entry
    return (d is INFINITY, d.coords if d is not INFINITY else (), m)


@dataclass(frozen=True)
class OreCertificate:
    """Evidence recorded by certify(); see the module docstring."""

    kind: str
    e: int
    f: int
    root_value: OrderedValue
    residual: Poly
    separable: bool
    insep_degree: int
    purely_inseparable: bool

    def to_json(self):
        from .ordvals import value_to_json

        return {
            "kind": self.kind,
            "e": self.e,
            "f": self.f,
            "root_value": value_to_json(self.root_value),
            "residual": [int(c) for c in self.residual.coeffs],
            "separable": self.separable,
            "insep_degree": self.insep_degree,
            "purely_inseparable": self.purely_inseparable,
        }


class ResidueField:
    """GF(p^f) presented as GF(p)[y] modulo the residual polynomial."""

    __slots__ = ("p", "f", "modulus", "domain")

    def __init__(self, p, modulus):
        self.p = p
        self.f = modulus.degree
        self.modulus = modulus
        if self.f == 1:
            self.domain = PrimeField(p)
        else:
            self.domain = QuotientRing(PrimeField(p), modulus, var="y")

    def size(self):
        return self.p ** self.f

    def zero(self):
        return self.domain.zero()

    def generator_residue(self):
        """The class of the certified unit a^e / pi^h, i.e. the root of
        the residual polynomial this field was built around."""
        if self.f == 1:
            F = self.domain
            return F.neg(F.coerce(self.modulus.coeff(0)))
        return self.domain.generator()

    def enumerate(self):
        if self.f == 1:
            yield from self.domain.elements()
            return
        F = PrimeField(self.p)
        for tup in itertools.product(range(self.p), repeat=self.f):
            yield Poly(F, tup, coerce=False)

    def element_to_ints(self, x):
        if self.f == 1:
            return [int(x)]
        return [int(x.coeff(i)) for i in range(self.f)]

    def element_from_ints(self, ints):
        if len(ints) > self.f:
            raise ValueError("too many coordinates")
        if self.f == 1:
            return self.domain.coerce(ints[0])
        return Poly(PrimeField(self.p), list(ints) + [0] * (self.f - len(ints)))

    def element_str(self, x):
        return self.domain.element_str(x)

    def __repr__(self):
        return "ResidueField(GF(%d^%d))" % (self.p, self.f)


def _insep_degree(Q, p):
    if p == 0:
        return 1
    m = 1
    while True:
        step = m * p
        if all(
            i % step == 0
            for i in range(1, len(Q.coeffs))
            if not Q.domain.is_zero(Q.coeffs[i])
        ):
            m = step
        else:
            return m


def certify(base, Q):
    """Certificate for Q over the base field, or CertificationError."""
    if not isinstance(Q, Poly) or Q.domain != base.domain:
        raise CertificationError("generator must be a Poly over the base")
    n = Q.degree
    if n < 1:
        raise CertificationError("generator must be non-constant")
    if not Q.is_monic():
        raise CertificationError("generator must be monic")
    p = base.residue_characteristic()
    if n == 1:
        return OreCertificate(
            kind="linear",
            e=1,
            f=1,
            root_value=base.valuation(Q.domain.neg(Q.coeff(0))),
            residual=Poly(PrimeField(p), [0, 1]),
            separable=True,
            insep_degree=1,
            purely_inseparable=False,
        )
    if base.domain.is_zero(Q.coeff(0)):
        raise CertificationError("X divides the generator; it is reducible")

    vals = [base.valuation(Q.coeff(i)) for i in range(n + 1)]
    v0 = vals[0][0]
    points = [
        (i, vals[i][0]) for i in range(n + 1) if vals[i] is not INFINITY
    ]
    hull = lower_hull(points)
    for i, v in points:
        if v < v0 - Fraction(v0, n) * i:
            raise CertificationError(
                "Newton polygon has more than one slope; the valuation "
                "does not extend uniquely along this presentation",
                polygon=hull,
            )

    root_value = Fraction(v0, n)
    e = root_value.denominator
    h = root_value.numerator
    f = n // e

    F = PrimeField(p)
    res_coeffs = []
    for k in range(f + 1):
        c = Q.coeff(k * e)
        height = v0 - k * h
        if base.domain.is_zero(c):
            res_coeffs.append(0)
        else:
            scaled = base.domain.mul(c, base.uniformizer_power(-height))
            res_coeffs.append(base.residue(scaled))
    residual = Poly(F, res_coeffs, coerce=False)
    assert residual.degree == f and residual.is_monic()
    if not brute_irreducible(residual):
        raise CertificationError(
            "residual polynomial %s is not irreducible over GF(%d); "
            "not certifiable at level one (a shifted generator may help)"
            % (residual.to_str("y"), p),
            polygon=hull,
        )
    if p ** f > RESIDUE_SEARCH_BOUND:
        raise CertificationError(
            "residue field GF(%d^%d) exceeds the search bound" % (p, f)
        )

    separable = not Q.derivative().is_zero()
    insep = _insep_degree(Q, base.characteristic())
    if e == n and v0 == 1:
        kind = "eisenstein"
    elif e == 1 and v0 == 0:
        kind = "unramified-reduction"
    else:
        kind = "polygon"
    return OreCertificate(
        kind=kind,
        e=e,
        f=f,
        root_value=OrderedValue.of(root_value),
        residual=residual,
        separable=separable,
        insep_degree=insep,
        purely_inseparable=(insep == n),
    )


class AlgebraicElement:
    """A root a of a certified generator Q, living in K[X]/(Q).

    Carries the unique extension of the base valuation: valuation() via
    the norm/resultant formula, residue() by searching the finite
    residue field for the class that cancels the unit part.
    """

    __slots__ = (
        "base",
        "Q",
        "n",
        "cert",
        "ring",
        "gen",
        "res_field",
        "unit",
        "_val_cache",
        "_distances",
    )

    def __init__(self, base, Q, cert=None):
        if cert is None:
            cert = certify(base, Q)
        self.base = base
        self.Q = Q
        self.n = Q.degree
        self.cert = cert
        self.ring = QuotientRing(base.domain, Q, var="a")
        self.gen = self.ring.generator()
        self.res_field = ResidueField(base.residue_characteristic(),
                                      cert.residual)
        self._val_cache = {}
        self._distances = None
        if self.n > 1:
            h = cert.root_value[0] * cert.e
            pi_pow = base.uniformizer_power(-int(h))
            self.unit = self.ring.mul(
                _ring_pow(self.ring, self.gen, cert.e),
                self.ring.coerce(pi_pow),
            )
            assert self.valuation(self.unit).is_zero()
            lifted = self.lift_residue_poly(cert.residual)
            check = self._eval_in_ring(lifted, self.unit)
            assert self.valuation(check) > OrderedValue.of(0), (
                "residual polynomial does not annihilate the unit residue"
            )
        else:
            self.unit = None
        assert cert.e * cert.f == self.n

    @property
    def degree(self):
        return self.n

    def value_group(self):
        return ValueGroup(1, [OrderedValue.of(Fraction(1, self.cert.e))])

    def element(self, coeffs):
        """Ring element from base-domain coefficients (low to high)."""
        return self.ring.coerce(Poly(self.base.domain, coeffs))

    def element_str(self, x):
        return self.ring.element_str(x)

    def valuation(self, x):
        """The unique extension of the base valuation to K(a)."""
        if x.is_zero():
            return INFINITY
        cached = self._val_cache.get(x)
        if cached is None:
            r = resultant(self.Q, x)
            v = self.base.valuation(r)
            assert v is not INFINITY
            cached = OrderedValue.of(Fraction(v[0], self.n))
            self._val_cache[x] = cached
        return cached

    def residue(self, x):
        """Residue of a valuation unit, as an element of GF(p^f)."""
        v = self.valuation(x)
        if not v.is_zero():
            raise ValueError("residue is defined for units only; value %r" % v)
        zero = OrderedValue.of(0)
        for c in self.res_field.enumerate():
            if self.res_field.domain.is_zero(c):
                continue
            lifted = self.lift_residue(c)
            if self.valuation(self.ring.sub(x, lifted)) > zero:
                return c
        raise ArithmeticError(
            "no residue found; certification invariant violated"
        )

    def lift_residue(self, c):
        """A canonical unit (or zero) of K(a) reducing to c."""
        ints = self.res_field.element_to_ints(c)
        acc = self.ring.zero()
        power = self.ring.one()
        for ci in ints:
            if ci:
                acc = self.ring.add(
                    acc, self.ring.mul(self.ring.coerce(ci), power)
                )
            if self.unit is not None:
                power = self.ring.mul(power, self.unit)
        return acc

    def lift_residue_poly(self, rpoly):
        """Lift a GF(p)[y] polynomial coefficient-wise to K(a)[Y]."""
        return [int(c) for c in rpoly.coeffs]

    def _eval_in_ring(self, int_coeffs, point):
        acc = self.ring.zero()
        for c in reversed(int_coeffs):
            acc = self.ring.add(
                self.ring.mul(acc, point), self.ring.coerce(c)
            )
        return acc

    def taylor_at_gen(self, P):
        """Coefficients of P(a + Y) as ring elements, low to high."""
        lifted = P.map_domain(self.ring)
        return taylor_coefficients(lifted, self.gen)

    def distances(self):
        """Multiset {v(a - a_i)} over all roots a_i of Q (with
        multiplicity, a itself included as INFINITY)."""
        if self._distances is None:
            coeffs = self.taylor_at_gen(self.Q)
            vals = [self.valuation(c) for c in coeffs]
            self._distances = DistanceMultiset(root_value_multiset(vals))
            assert self._distances.total() == self.n
        return self._distances

    def krasner_bound(self):
        """Largest finite conjugate distance, or None when every
        conjugate coincides with a (degree one, or purely inseparable)."""
        return self.distances().max_finite()

    def __repr__(self):
        return "AlgebraicElement(%s over %r)" % (self.Q.to_str(), self.base)


def _ring_pow(ring, x, k):
    acc = ring.one()
    for _ in range(k):
        acc = ring.mul(acc, x)
    return acc


def conjugate_distance_oracle(base, Q):
    """Slow independent recomputation of the conjugate distances.

    Builds D(Z) = Res_Y(Q(Y), Q(Y + Z)) by evaluation and Lagrange
    interpolation, reads the valuations of the roots of D off its
    Newton polygon, and divides every multiplicity by deg Q: the root
    multiset of D is {a_i - a_j} over all ordered pairs, which by
    uniqueness of the extended valuation covers the distance multiset
    of a exactly deg Q times.
    """
    n = Q.degree
    D = base.domain
    sample_count = n * n + 1
    zs = []
    for s in range(sample_count):
        zs.append(_sample_point(base, s))
    points = []
    for z in zs:
        shifted = Poly(D, taylor_coefficients(Q, z), coerce=False)
        points.append((z, resultant(Q, shifted)))
    DZ = interpolate(D, points)
    assert DZ.degree == n * n
    vals = [base.valuation(DZ.coeff(i)) for i in range(n * n + 1)]
    raw = root_value_multiset(vals)
    entries = []
    for d, m in raw:
        assert m % n == 0, "pair multiset not divisible by the degree"
        entries.append((d, m // n))
    return DistanceMultiset(entries)


def _sample_point(base, s):
    if base.kind == "Qp":
        return Fraction(s)
    digits = []
    p = base.p
    while s:
        digits.append(s % p)
        s //= p
    if not digits:
        digits = [0]
    F = base.residue_field
    one = Poly.constant(F, 1)
    from .exactpoly import RationalFunction

    return RationalFunction(Poly(F, digits), one)
