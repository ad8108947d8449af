from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from minpair.exactpoly import (
    QQ,
    FunctionField,
    Poly,
    PrimeField,
    QuotientRing,
    RationalFunction,
    brute_irreducible,
    compose_mod,
    interpolate,
    monic_polys,
    poly_gcd,
    poly_xgcd,
    resultant,
    taylor_coefficients,
)


def qpoly(*coeffs):
    return Poly(QQ, coeffs)


X = Poly.variable(QQ)


# ------------------------------------------------------------ basic ring ops


def test_construction_trims_trailing_zeros():
    assert qpoly(1, 2, 0, 0).degree == 1
    assert Poly.zero(QQ).degree == float("-inf")
    assert qpoly(0).is_zero()


def test_divmod():
    f = qpoly(-2, 0, 1)  # X^2 - 2
    q, r = divmod(f, qpoly(-1, 1))  # X - 1
    assert q == qpoly(1, 1)
    assert r == qpoly(-1)
    assert q * qpoly(-1, 1) + r == f


def test_divmod_requires_nonzero_divisor():
    with pytest.raises(ZeroDivisionError):
        divmod(X, Poly.zero(QQ))


def test_pow_and_evaluate():
    f = (X - qpoly(1)) ** 3
    assert f == qpoly(-1, 3, -3, 1)
    assert f.evaluate(Fraction(3)) == 8
    assert qpoly(1, 0, 1).evaluate(Fraction(1, 2)) == Fraction(5, 4)


def test_gcd_and_xgcd():
    f = (X - qpoly(1)) * (X - qpoly(2))
    g = (X - qpoly(1)) * (X + qpoly(5))
    assert poly_gcd(f, g) == X - qpoly(1)
    d, s, t = poly_xgcd(qpoly(-2, 0, 1), X)
    assert s * qpoly(-2, 0, 1) + t * X == d
    assert d == qpoly(1)  # coprime


def test_derivative():
    assert qpoly(5, 0, 3, 1).derivative() == qpoly(0, 6, 3)
    F2 = PrimeField(2)
    f = Poly(F2, [1, 0, 1])  # X^2 + 1
    assert f.derivative().is_zero()


# ------------------------------------------------------------ prime fields


def test_prime_field_ops():
    F5 = PrimeField(5)
    assert F5.inv(3) == 2
    assert F5.coerce(Fraction(1, 2)) == 3
    assert F5.coerce(-1) == 4
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)
    with pytest.raises(ValueError):
        PrimeField(6)


def test_brute_irreducible():
    F2 = PrimeField(2)
    assert brute_irreducible(Poly(F2, [1, 1, 1]))
    assert not brute_irreducible(Poly(F2, [1, 0, 1]))  # (X+1)^2
    assert brute_irreducible(Poly(F2, [1, 1, 0, 1]))
    assert not brute_irreducible(Poly(F2, [1]))
    F3 = PrimeField(3)
    assert brute_irreducible(Poly(F3, [1, 0, 1]))
    assert len(list(monic_polys(F3, 2))) == 9


# ------------------------------------------------------------ quotient rings


def test_quotient_ring_is_field_mod_irreducible():
    R = QuotientRing(QQ, qpoly(-2, 0, 1))  # Q[a], a^2 = 2
    a = R.generator()
    assert R.mul(a, a) == R.coerce(2)
    x = R.add(a, R.one())  # 1 + a
    inv = R.inv(x)
    assert R.mul(x, inv) == R.one()
    assert R.element_str(x) == "a + 1"
    with pytest.raises(ZeroDivisionError):
        R.inv(R.zero())


def test_quotient_ring_detects_zero_divisors():
    R = QuotientRing(QQ, qpoly(-1, 0, 1))  # X^2 - 1, reducible
    x = R.coerce(X - qpoly(1))
    with pytest.raises(ZeroDivisionError):
        R.inv(x)


# ------------------------------------------------------------ function fields


def test_rational_function_normalization():
    F2 = PrimeField(2)
    K = FunctionField(F2, "t")
    t = K.variable()
    f = K.mul(t, t)
    g = K.div(f, t)
    assert g == t
    h = RationalFunction(Poly(F2, [1, 1]), Poly(F2, [0, 1]))  # (1+t)/t
    assert K.mul(h, t) == K.add(K.one(), t)
    assert K.inv(h) == RationalFunction(Poly(F2, [0, 1]), Poly(F2, [1, 1]))
    assert (t ** 3).num.degree == 3
    assert (h ** -2).den == Poly(F2, [1, 0, 1])


def test_function_field_monic_denominators():
    F3 = PrimeField(3)
    K = FunctionField(F3, "t")
    f = RationalFunction(Poly(F3, [1]), Poly(F3, [0, 2]))  # 1/(2t)
    assert f.den.is_monic()
    assert f.num == Poly(F3, [2])


# ------------------------------------------------------------ taylor shifts


def test_taylor_reconstruction():
    f = qpoly(3, -1, 0, 2)
    c = Fraction(5, 3)
    coeffs = taylor_coefficients(f, c)
    acc = Poly.zero(QQ)
    shift = X - qpoly(c)
    for k in range(len(coeffs) - 1, -1, -1):
        acc = acc * shift + qpoly(coeffs[k])
    assert acc == f


def test_taylor_shift_binomial():
    # (Y+1)^2 - 2 = Y^2 + 2Y - 1
    coeffs = taylor_coefficients(qpoly(-2, 0, 1), Fraction(1))
    assert coeffs == [Fraction(-1), Fraction(2), Fraction(1)]


# ------------------------------------------------------------ resultants


def test_resultant_degree_one():
    # res(X - c, g) = g(c) for any g
    g = qpoly(7, -3, 0, 2)
    for c in [Fraction(0), Fraction(2), Fraction(-5, 3)]:
        assert resultant(X - qpoly(c), g) == g.evaluate(c)
        assert resultant(g, X - qpoly(c)) == g.evaluate(c) * (-1) ** g.degree


def test_resultant_known_values():
    # res(X^2 - 2, X^2 - 3) = (sqrt2^2 - 3)(-sqrt2^2 - 3) -> (2-3)^2 = 1
    assert resultant(qpoly(-2, 0, 1), qpoly(-3, 0, 1)) == 1
    # discriminant-style: res(X^2 + 1, 2X) = 4
    assert resultant(qpoly(1, 0, 1), qpoly(0, 2)) == 4
    assert resultant(qpoly(-2, 0, 1), qpoly(0, 1)) == -2
    assert resultant(qpoly(3), qpoly(0, 0, 1)) == 9
    assert resultant(qpoly(-2, 0, 1), Poly.zero(QQ)) == 0


def test_resultant_shared_root_vanishes():
    f = (X - qpoly(1)) * (X - qpoly(4))
    g = (X - qpoly(1)) * (X + qpoly(2))
    assert resultant(f, g) == 0


small_poly = st.lists(
    st.integers(min_value=-6, max_value=6), min_size=1, max_size=4
).map(lambda cs: qpoly(*cs))


@given(small_poly, small_poly, small_poly)
def test_resultant_multiplicative(f, g, h):
    if f.is_zero() or g.is_zero() or h.is_zero():
        return
    lhs = resultant(f, g * h)
    rhs = resultant(f, g) * resultant(f, h)
    assert lhs == rhs


@given(small_poly, small_poly)
def test_resultant_vs_root_products(f, g):
    # res(f, g) = lc(f)^deg(g) * prod g(root_i) checked through a
    # factored construction instead of numeric roots: compare against
    # the Euclidean value computed with the arguments swapped.
    if f.is_zero() or g.is_zero() or f.degree < 1 or g.degree < 1:
        return
    sign = (-1) ** (f.degree * g.degree)
    assert resultant(f, g) == sign * resultant(g, f)


# ------------------------------------------------------------ composition


def test_compose_mod():
    Q = qpoly(-2, 0, 1)
    assert compose_mod(Q, X, Q).is_zero()
    # (X^2)^2 - 2 mod X^2 - 2 -> 4 - 2 = 2
    assert compose_mod(Q, X * X, Q) == qpoly(2)


# ------------------------------------------------------------ interpolation


def test_interpolate_rationals():
    pts = [(Fraction(0), Fraction(1)), (Fraction(1), Fraction(2)),
           (Fraction(2), Fraction(5))]
    f = interpolate(QQ, pts)
    assert f == qpoly(1, 0, 1)


def test_interpolate_function_field():
    F3 = PrimeField(3)
    K = FunctionField(F3, "t")
    t = K.variable()
    pts = [(K.zero(), K.one()), (K.one(), K.add(K.one(), t)),
           (t, K.mul(t, t))]
    f = interpolate(K, pts)
    for x, y in pts:
        assert f.evaluate(x) == y
    assert f.degree <= 2
