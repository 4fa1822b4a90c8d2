import random
from fractions import Fraction

import pytest

from bishift.errors import (
    BadValueTokenError,
    DecimalInExactFieldError,
    FieldSpecError,
    MixedFieldError,
    ZeroDenominatorError,
)
from bishift.fields import (
    FloatField,
    PrimeField,
    RationalField,
    decimal_token,
    parse_field_spec,
)

Q = RationalField()
GF7 = PrimeField(7)


def test_rational_add():
    assert Q.value(1, 2) + Q.value(1, 3) == Q.value(5, 6)


def test_gf7_mul():
    assert GF7.value(3) * GF7.value(5) == GF7.value(1)


def test_gf7_inverse_matches_brute_force_scan():
    # independent oracle: scan 1..6 for the multiplicative inverse of 3
    expected = next(x for x in range(1, 7) if 3 * x % 7 == 1)
    assert expected == 5
    assert GF7.value(3).inverse() == GF7.value(expected)


def test_rational_canonical_form():
    assert Q.value(2, 4) == Q.value(1, 2)
    assert Q.value(2, 4).payload == Fraction(1, 2)
    assert Q.value(1, -2).payload.denominator == 2


def test_float_tolerance_equality():
    F = FloatField(1e-9)
    assert F.value(0.1) + F.value(0.2) == F.value(0.3)
    assert F.value(0.1) != F.value(0.10001)


def test_gf5_canonical_residue():
    GF5 = PrimeField(5)
    assert GF5.value(7) == GF5.value(2)
    assert GF5.value(-1).payload == 4


def test_mixed_field_rejected():
    with pytest.raises(MixedFieldError):
        Q.value(1) + GF7.value(1)
    with pytest.raises(MixedFieldError):
        Q.value(1) == GF7.value(1)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        Q.value(0).inverse()
    with pytest.raises(ZeroDivisionError):
        GF7.value(7).inverse()
    with pytest.raises(ZeroDivisionError):
        FloatField().value(0.0).inverse()


def test_primality_checked():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)
    PrimeField(2)
    PrimeField(97)


def test_float_tolerance_must_be_positive():
    with pytest.raises(ValueError):
        FloatField(0.0)
    with pytest.raises(ValueError):
        FloatField(-1e-3)


@pytest.mark.parametrize("field", [Q, GF7])
def test_field_axioms_randomized(field):
    rng = random.Random(7001)

    def rand(nonzero=False):
        if isinstance(field, PrimeField):
            return field.value(rng.randint(1 if nonzero else 0, field.p - 1))
        while True:
            v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if v or not nonzero:
                return field.value(v)

    zero, one = field.zero, field.one
    for _ in range(1000):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        n = rand(nonzero=True)
        assert n * n.inverse() == one


@pytest.mark.parametrize("field", [Q, GF7, FloatField()])
def test_normalization_idempotent(field):
    rng = random.Random(7002)
    for _ in range(200):
        if isinstance(field, PrimeField):
            v = field.value(rng.randint(-50, 50))
        elif isinstance(field, RationalField):
            v = field.value(rng.randint(-30, 30), rng.randint(1, 30))
        else:
            v = field.value(rng.randint(-20, 20) / 8)
        again = field.value(v.payload)
        assert again.payload == v.payload


def test_parse_field_spec_forms():
    assert parse_field_spec("rational") == Q
    assert parse_field_spec("gf:7") == GF7
    assert parse_field_spec("float") == FloatField()
    assert parse_field_spec("float:1e-6") == FloatField(1e-6)


@pytest.mark.parametrize(
    "spec", ["", "gf:", "gf:4", "gf:x", "float:", "float:0", "float:-1", "real", "GF:7"]
)
def test_parse_field_spec_rejects(spec):
    with pytest.raises(FieldSpecError):
        parse_field_spec(spec)


def test_parse_token_forms():
    assert Q.parse_token("-3") == Q.value(-3)
    assert Q.parse_token("5/10") == Q.value(1, 2)
    assert GF7.parse_token("9") == GF7.value(2)
    assert GF7.parse_token("1/3") == GF7.value(5)
    F = FloatField()
    assert F.parse_token("0.5") == F.value(0.5)
    assert F.parse_token("-2") == F.value(-2.0)


def test_parse_token_rejects():
    with pytest.raises(DecimalInExactFieldError):
        Q.parse_token("0.5")
    with pytest.raises(ZeroDenominatorError):
        Q.parse_token("1/0")
    with pytest.raises(ZeroDenominatorError):
        PrimeField(5).parse_token("1/5")
    for bad in ["", "x", "1/2/3", "1.2.3", "--1", "1e5", " 1"]:
        with pytest.raises(BadValueTokenError):
            Q.parse_token(bad)


def test_decimal_token_round_trips():
    for x in [0.5, -1.25, 2.0, 1e-9, 123456.789, 3.141592653589793, -1.23456789e-12]:
        assert float(decimal_token(x)) == x
        assert "e" not in decimal_token(x)


def test_token_round_trip_through_format():
    rng = random.Random(7003)
    for _ in range(200):
        v = Q.value(rng.randint(-99, 99), rng.randint(1, 99))
        assert Q.parse_token(Q.format_value(v)) == v
        g = GF7.value(rng.randint(0, 6))
        assert GF7.parse_token(GF7.format_value(g)) == g
