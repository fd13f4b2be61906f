"""Rational functions of one indeterminate over exact rationals.

Values are kept canonical (numerator and denominator coprime, denominator
monic), so structural equality coincides with equality as functions. The
symbolic solve depends on that: its pivot test asks whether the canonical
numerator is the zero polynomial, never whether the value at a point is 0.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import PoleAtZero, ZeroDenominator
from .polynomials import Polynomial, X, poly_gcd
from .scalars import ScalarField

__all__ = [
    "RationalFunction",
    "RationalFunctionField",
    "RATFUNC",
    "SYMBOL",
    "rf_normalize",
    "rf_eval_at_zero",
]

_ONE = Polynomial((1,))


def _as_polynomial(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return Polynomial((v,))
    raise TypeError(f"cannot treat {type(v).__name__} as a polynomial")


class RationalFunction:
    """Quotient of two polynomials, normalized on construction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_ONE):
        num = _as_polynomial(num)
        den = _as_polynomial(den)
        if den.is_zero:
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero:
            self.num = num
            self.den = _ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num //= g
            den //= g
        lead = den.leading
        if lead != 1:
            inv = 1 / lead
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerced(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return RationalFunction(_as_polynomial(other))
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        out.num = -self.num  # canonical form is preserved: den untouched
        out.den = self.den
        return out

    def __eq__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


def rf_normalize(num, den) -> RationalFunction:
    """Canonical rational function num/den (gcd cancelled, monic denominator)."""
    return RationalFunction(num, den)


def rf_eval_at_zero(r: RationalFunction) -> Fraction:
    """Value at 0; raises PoleAtZero when the denominator vanishes there.

    Canonical form makes the pole test unambiguous: num and den share no
    factor, so den(0) = 0 really is a pole.
    """
    d0 = r.den(Fraction(0))
    if d0 == 0:
        raise PoleAtZero(f"no value at 0: {r}")
    return r.num(Fraction(0)) / d0


class RationalFunctionField(ScalarField):
    """Univariate rational functions over exact rationals."""

    name = "ratfunc"
    is_exact = True
    zero = RationalFunction(Polynomial())
    one = RationalFunction(_ONE)

    def is_zero(self, x) -> bool:
        return x.is_zero

    def coerce(self, value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return RationalFunction(value)
        if isinstance(value, str):
            return RationalFunction(Polynomial((Fraction(value),)))
        return RationalFunction(_as_polynomial(value))

    def to_json(self, value):
        return str(value)


RATFUNC = RationalFunctionField()

#: The indeterminate as a field value, used to replace vanishing pivots.
SYMBOL = RationalFunction(X)
