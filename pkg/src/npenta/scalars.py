"""Scalar fields the banded solvers are generic over.

Values are ordinary Python objects (float, Fraction, RationalFunction)
combined with the usual operators; a field object supplies the constants,
the zero test and the conversions the algorithms need beyond arithmetic.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import InputFormatError

__all__ = [
    "ExactRational",
    "ScalarField",
    "FloatField",
    "RationalField",
    "FLOAT",
    "RATIONAL",
    "parse_rational",
    "format_rational",
]

# Arbitrary-precision rational in lowest terms with positive denominator.
# fractions.Fraction maintains exactly that canonical form (0 is 0/1).
ExactRational = Fraction


def parse_rational(value) -> Fraction:
    """Convert an int, an integral float, a "p/q" string or a Fraction.

    Non-integral floats are rejected: their binary value is almost never
    the decimal the user meant, and silently converting would corrupt
    exact computations.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputFormatError(f"not a rational value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value.is_integer():
            return Fraction(int(value))
        raise InputFormatError(
            f'decimal {value!r} is ambiguous in exact mode; '
            f'write it as a rational string such as "1/10"'
        )
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"not a rational value: {value!r}") from exc
    raise InputFormatError(f"not a rational value: {value!r}")


def format_rational(q: Fraction) -> str:
    """Lowest-terms string, "p" for integers and "p/q" otherwise."""
    return str(q)


class ScalarField:
    """Field operations plus the predicates the solvers rely on.

    Arithmetic delegates to the value type's operators, so exact and
    float values flow through the same recurrences unchanged.
    """

    name = "abstract"
    is_exact = False
    zero = None
    one = None

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def div(self, x, y):
        return x / y

    def neg(self, x):
        return -x

    def is_zero(self, x) -> bool:
        raise NotImplementedError

    def coerce(self, value):
        """Convert an int / float / string / Fraction into a field value."""
        raise NotImplementedError

    def make_vector(self, values):
        """Immutable vector of field values in the field's natural container."""
        return tuple(self.coerce(v) for v in values)

    def to_json(self, value):
        """JSON-serializable form of a field value."""
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class FloatField(ScalarField):
    """IEEE double precision.

    The zero test is an exact comparison with 0.0; pivot tolerances are a
    solver option, not a property of the field.
    """

    name = "float64"
    is_exact = False
    zero = 0.0
    one = 1.0

    def is_zero(self, x) -> bool:
        return x == 0.0

    def coerce(self, value):
        if isinstance(value, str):
            return float(Fraction(value))
        return float(value)

    def make_vector(self, values):
        try:
            vec = np.array(values, dtype=np.float64)
        except (TypeError, ValueError):
            # entries such as "p/q" strings need per-element conversion
            vec = np.array([self.coerce(v) for v in values], dtype=np.float64)
        if vec.ndim != 1:
            raise InputFormatError("band vectors must be one-dimensional")
        vec.flags.writeable = False
        return vec

    def to_json(self, value):
        return float(value)


class RationalField(ScalarField):
    """Exact rationals backed by fractions.Fraction."""

    name = "rational"
    is_exact = True
    zero = Fraction(0)
    one = Fraction(1)

    def is_zero(self, x) -> bool:
        return x == 0

    def coerce(self, value):
        return parse_rational(value)

    def to_json(self, value):
        if value.denominator == 1:
            return int(value)
        return format_rational(value)


FLOAT = FloatField()
RATIONAL = RationalField()
