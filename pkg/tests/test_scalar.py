from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from p1split import DivisionByZero, FieldMismatch, PrimeField, QQ, Scalar, scalar_arith
from p1split.scalar import field_from_json, parse_field

F5, F7 = PrimeField(5), PrimeField(7)


def test_add_in_f5():
    assert scalar_arith("add", F5(3), F5(4), F5) == F5(2)


@pytest.mark.parametrize("f", [F5, F7, PrimeField(2), QQ])
def test_mul_by_one_is_identity(f):
    a = f(3)
    assert scalar_arith("mul", a, f(1), f) == a


def test_div_in_f7_checked_by_remultiplication():
    q = scalar_arith("div", F7(1), F7(3), F7)
    assert q * F7(3) == F7(1)
    assert q == F7(5)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        scalar_arith("div", F7(1), F7(0), F7)
    with pytest.raises(ZeroDivisionError):
        QQ(1) / QQ(0)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        scalar_arith("add", F5(1), F7(1), F5)
    with pytest.raises(FieldMismatch):
        F5(1) + F7(1)


def test_prime_check():
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_rational_canonical_form():
    x = QQ(Fraction(6, -4))
    assert x.value.denominator == 2 and x.value.numerator == -3
    assert QQ(Fraction(1, 2)) + QQ(Fraction(1, 3)) == QQ(Fraction(5, 6))


def test_json_roundtrip():
    assert field_from_json({"kind": "Fp", "p": 7}) == F7
    assert field_from_json({"kind": "Q"}) == QQ
    assert QQ.element_from_json("-3/6") == Fraction(-1, 2)
    assert QQ.element_to_json(Fraction(-1, 2)) == "-1/2"
    assert QQ.element_to_json(Fraction(4)) == 4
    assert F7.element_from_json(10) == 3
    with pytest.raises(ValueError):
        QQ.element_from_json(1.5)


def test_parse_field():
    assert parse_field("Q") == QQ
    assert parse_field("F7") == F7
    assert parse_field("Fp:5") == F5
    assert parse_field("2") == PrimeField(2)


residues = st.integers(min_value=-50, max_value=50)
fractions = st.fractions(max_denominator=20)


@given(residues, residues, residues)
def test_field_axioms_fp(a, b, c):
    a, b, c = F7(a), F7(b), F7(c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == F7(1)


@given(fractions, fractions, fractions)
def test_field_axioms_q(a, b, c):
    a, b, c = QQ(a), QQ(b), QQ(c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == QQ(1)
    # canonical form makes equality structural
    s = a + b
    assert s.value.denominator > 0
    assert Scalar(QQ, Fraction(s.value.numerator, s.value.denominator)) == s
