import random
from fractions import Fraction

import pytest

from npenta import FLOAT, RATIONAL, InputFormatError, format_rational, parse_rational


def rand_fraction(rng):
    return Fraction(rng.randint(-50, 50), rng.randint(1, 30))


def test_field_axioms_exact():
    # randomized algebraic identities, structural equality throughout
    rng = random.Random(101)
    f = RATIONAL
    for _ in range(1000):
        a, b, c = (rand_fraction(rng) for _ in range(3))
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        if not f.is_zero(a):
            assert f.mul(a, f.div(f.one, a)) == f.one
        assert f.add(a, f.neg(a)) == f.zero


def test_zero_one_predicates():
    for f in (RATIONAL, FLOAT):
        assert f.is_zero(f.zero)
        assert not f.is_zero(f.one)
    assert RATIONAL.is_exact
    assert not FLOAT.is_exact


def test_float_is_zero_is_exact_comparison():
    assert not FLOAT.is_zero(1e-300)
    assert not FLOAT.is_zero(-0.0 + 5e-324)
    assert FLOAT.is_zero(0.0)
    assert FLOAT.is_zero(-0.0)


def test_exact_div_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        RATIONAL.div(RATIONAL.one, RATIONAL.zero)


def test_exact_arithmetic_examples():
    f = RATIONAL
    assert f.add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)
    assert f.mul(Fraction(35, 4), Fraction(4, 35)) == 1


def test_parse_rational_forms():
    assert parse_rational(7) == Fraction(7)
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-5") == Fraction(-5)
    assert parse_rational(2.0) == Fraction(2)
    assert parse_rational(Fraction(9, 2)) == Fraction(9, 2)


def test_parse_rational_rejects_ambiguous_decimals():
    with pytest.raises(InputFormatError):
        parse_rational(0.1)
    with pytest.raises(InputFormatError):
        parse_rational("nonsense")
    with pytest.raises(InputFormatError):
        parse_rational("1/0")
    with pytest.raises(InputFormatError):
        parse_rational(True)


def test_format_rational():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-145151505)) == "-145151505"
    assert format_rational(Fraction(4, 3)) == "4/3"
    assert format_rational(Fraction(-91736, 186433)) == "-91736/186433"


def test_rational_invariants_maintained():
    rng = random.Random(7)
    for _ in range(200):
        q = rand_fraction(rng) * rand_fraction(rng)
        assert q.denominator > 0
        import math
        assert math.gcd(abs(q.numerator), q.denominator) == 1
    assert Fraction(0, 5) == Fraction(0, 1)


def test_float_coercion():
    assert FLOAT.coerce("1/2") == 0.5
    assert FLOAT.coerce(3) == 3.0
    vec = FLOAT.make_vector([1, 2, "3/2"])
    assert list(vec) == [1.0, 2.0, 1.5]
    assert not vec.flags.writeable


def test_json_round_trip_values():
    assert RATIONAL.to_json(Fraction(5)) == 5
    assert RATIONAL.to_json(Fraction(5, 2)) == "5/2"
    assert FLOAT.to_json(2.5) == 2.5
