from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vecprod.errors import BadScalar, CharTwoRejected, DivisionByZero, FieldMismatch, NotPrime
from vecprod.fields import GF, QQ, Scalar, is_prime, is_square

F7 = GF(7)
PRIMES = [3, 5, 7, 11, 13, 101]


def test_examples():
    assert QQ("1/2") + QQ("1/3") == QQ("5/6")
    assert F7(3) * F7(5) == F7(1)
    assert str(QQ("2/4")) == "1/2"
    assert str(F7(-1)) == "6"
    assert F7.half == F7(4)
    assert QQ.half == QQ("1/2")


def test_field_validation():
    with pytest.raises(CharTwoRejected):
        GF(2)
    with pytest.raises(NotPrime):
        GF(9)
    with pytest.raises(NotPrime):
        GF(1)
    assert [p for p in range(60) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_cross_field_errors():
    with pytest.raises(FieldMismatch):
        F7(1) + GF(5)(1)
    with pytest.raises(FieldMismatch):
        F7(1) * QQ(1)
    with pytest.raises(FieldMismatch):
        F7(QQ(1))
    assert F7(1) != QQ(1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        F7(3) / F7(0)
    with pytest.raises(ZeroDivisionError):
        QQ(1) / 0


def test_parse_and_text():
    assert QQ.parse("-3/6") == QQ(Fraction(-1, 2))
    assert str(QQ.parse("4/-8")) == "-1/2"
    assert F7.parse("15") == F7(1)
    for bad in ("x", "1/0", "", "1.5"):
        with pytest.raises(BadScalar):
            QQ.parse(bad)
    with pytest.raises(BadScalar):
        F7.parse("1/2")


@pytest.mark.parametrize("p", PRIMES)
def test_is_square_matches_enumeration(p):
    F = GF(p)
    squares = {r * r % p for r in range(p)}
    for a in F.elements():
        r = is_square(a)
        assert (r is not None) == (a.value in squares)
        if r is not None:
            assert r * r == a
            assert r.value <= p - r.value or r.value == 0
        # Euler criterion
        assert (r is not None) == (pow(a.value, (p - 1) // 2, p) in (0, 1))


def test_is_square_examples():
    # squares mod 7: {0, 1, 2, 4}
    assert is_square(F7(2)) == F7(3)
    assert is_square(F7(3)) is None
    assert is_square(QQ("4/9")) == QQ("2/3")
    assert is_square(QQ(-4)) is None
    assert is_square(QQ(2)) is None
    assert is_square(QQ(0)) == QQ(0)


def test_tonelli_large_prime():
    # p = 1 mod 8 exercises the non-trivial loop
    p = 999_983
    F = GF(p)
    for a in (2, 3, 5, 12345, 999_982):
        r = is_square(F(a))
        assert (r is not None) == (pow(a, (p - 1) // 2, p) == 1)
        if r is not None:
            assert r * r == F(a)
    F = GF(97)  # 97 = 1 mod 32
    for a in F.elements():
        r = is_square(a)
        if r is not None:
            assert r * r == a


def test_one_plus_one_nonzero():
    for F in [QQ] + [GF(p) for p in PRIMES]:
        assert F.one + F.one != 0


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
residues = st.integers(min_value=0, max_value=6)


@given(rationals, rationals, rationals)
def test_field_axioms_q(a, b, c):
    a, b, c = QQ(a), QQ(b), QQ(c)
    assert (a + b) + c == a + (b + c)
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(residues, residues, residues)
def test_field_axioms_f7(a, b, c):
    a, b, c = F7(a), F7(b), F7(c)
    assert (a + b) + c == a + (b + c)
    assert a * (b * c) == (a * b) * c
    assert a * (b + c) == a * b + a * c
    assert a - b == -(b - a)
    if a:
        assert a * a.inverse() == 1


def test_canonical_form_and_hash():
    assert QQ("6/4") == QQ("3/2")
    assert hash(QQ("6/4")) == hash(QQ("3/2"))
    assert F7(8) == F7(1) and hash(F7(8)) == hash(F7(1))
    assert isinstance(F7(3) ** -1, Scalar) and F7(3) ** -1 == F7(5)
