"""Univariate polynomials over exact rationals.

Coefficients are stored lowest degree first with no trailing zeros; the
empty tuple is the zero polynomial (degree -1).
"""
from __future__ import annotations

from fractions import Fraction

__all__ = ["Polynomial", "X", "poly_gcd"]


def _coeff(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, str)):
        return Fraction(v)
    raise TypeError(f"polynomial coefficients must be rational, got {type(v).__name__}")


def _as_poly(v) -> "Polynomial":
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return Polynomial((v,))
    raise TypeError(f"cannot treat {type(v).__name__} as a polynomial")


class Polynomial:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Polynomial):
            self.coeffs = coeffs.coeffs
            return
        cs = [_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, point):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __neg__(self):
        p = Polynomial.__new__(Polynomial)
        p.coeffs = tuple(-c for c in self.coeffs)
        return p

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, k) -> "Polynomial":
        k = _coeff(k)
        return Polynomial(tuple(c * k for c in self.coeffs))

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        dd = other.degree
        rem = list(self.coeffs)
        dn = len(rem) - 1
        if dn < dd:
            return Polynomial(), self
        inv_lead = 1 / other.leading
        quot = [Fraction(0)] * (dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            coef = rem[dd + k] * inv_lead
            quot[k] = coef
            if coef:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= coef * oc
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        """Same polynomial scaled to leading coefficient 1; zero stays zero."""
        if self.is_zero or self.leading == 1:
            return self
        return self.scale(1 / self.leading)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


#: The indeterminate.
X = Polynomial((0, 1))


def poly_gcd(p, q) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm.

    gcd(p, 0) is monic(p); gcd(0, 0) is the zero polynomial.
    """
    p, q = _as_poly(p), _as_poly(q)
    while not q.is_zero:
        p, q = q, p % q
    return p.monic()
