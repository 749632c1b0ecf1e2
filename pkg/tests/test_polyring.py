import math

import pytest
from hypothesis import given, strategies as st

from p1split import DivisionByZero, Poly, PrimeField, QQ, RatFun, poly_divmod, val_inf
from p1split.polyring import poly_gcd

F5 = PrimeField(5)


def P(*c, field=F5):
    return Poly(field, c)


def test_divmod_over_f5():
    q, r = poly_divmod(P(1, 0, 1), P(2, 1))
    assert (q, r) == (P(3, 1), P())
    # independent check: re-multiply
    assert P(2, 1) * P(3, 1) == P(1, 0, 1)


def test_divmod_trivial_cases():
    f = P(4, 1, 3)
    assert poly_divmod(f, P(1)) == (f, P())
    assert poly_divmod(P(0, 1), P(0, 0, 1)) == (P(), P(0, 1))
    with pytest.raises(DivisionByZero):
        poly_divmod(f, P())


def test_val_inf_examples():
    assert val_inf(P(1, 0, 0, 1)) == -3
    assert val_inf(RatFun(P(1), P(0, 1, 1))) == 2
    assert val_inf(P()) == math.inf
    assert P().degree == -math.inf


def test_ratfun_canonical():
    r = RatFun(P(0, 2), P(0, 4))  # 2T / 4T
    assert r.den == P(1) and r.num == P(3)  # 2/4 = 3 in F_5
    r = RatFun(P(1, 1) * P(2, 1), P(1, 1) * P(0, 3))
    assert r.den.lc == 1 and poly_gcd(r.num, r.den) == P(1)
    with pytest.raises(DivisionByZero):
        RatFun(P(1), P())


polys = st.lists(st.integers(0, 4), max_size=6).map(lambda c: Poly(F5, c))
qpolys = st.lists(st.integers(-5, 5), max_size=5).map(lambda c: Poly(QQ, c))


@given(polys, polys)
def test_divmod_roundtrip(f, g):
    if not g:
        return
    q, r = poly_divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(qpolys, qpolys)
def test_divmod_roundtrip_q(f, g):
    if not g:
        return
    q, r = poly_divmod(f, g)
    assert q * g + r == f


@given(polys, polys, polys, polys)
def test_valuation_multiplicative_and_ultrametric(a, b, c, d):
    if not (b and d):
        return
    x, y = RatFun(a, b), RatFun(c, d)
    if x and y:
        assert val_inf(x * y) == val_inf(x) + val_inf(y)
    assert val_inf(x + y) >= min(val_inf(x), val_inf(y))
    if val_inf(x) != val_inf(y):
        assert val_inf(x + y) == min(val_inf(x), val_inf(y))


@given(polys, polys)
def test_ratfun_field_ops(a, b):
    if not (a and b):
        return
    x = RatFun(a, b)
    assert x * x.inverse() == RatFun(P(1))
    assert (x + x) - x == x
