"""Reduced rational functions over the rationals.

A :class:`RationalFunction` is kept in canonical form: numerator and
denominator are coprime and the denominator is monic.  Two instances are
therefore equal exactly when their stored polynomials are equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .poly import ONE, ZERO, Polynomial, Scalar, poly_gcd

Coercible = Union["RationalFunction", Polynomial, int, Fraction]


class RationalFunction:
    __slots__ = ("num", "den")

    num: Polynomial
    den: Polynomial

    def __init__(self, num: Polynomial | Scalar, den: Polynomial | Scalar = 1):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(num)
        if not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if not g.is_constant():
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lead
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> RationalFunction:
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def from_poly(cls, p: Polynomial) -> RationalFunction:
        return cls._raw(p, ONE)

    @classmethod
    def x(cls) -> RationalFunction:
        return cls._raw(Polynomial.x(), ONE)

    @staticmethod
    def coerce(v: Coercible) -> RationalFunction:
        if isinstance(v, RationalFunction):
            return v
        if isinstance(v, Polynomial):
            return RationalFunction._raw(v, ONE)
        if isinstance(v, (int, Fraction)):
            return RationalFunction._raw(Polynomial.constant(v), ONE)
        raise TypeError(f"cannot coerce {type(v).__name__} to RationalFunction")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def to_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} is not a polynomial")
        return self.num

    # -- field operations ------------------------------------------------

    def __add__(self, other: object) -> RationalFunction:
        try:
            o = self.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        # a coprime pair stays coprime when a multiple of the denominator is added
        if o.den.is_constant():
            return _reduced(self.num + o.num * self.den, self.den)
        if self.den.is_constant():
            return _reduced(self.num * o.den + o.num, o.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other: object) -> RationalFunction:
        try:
            o = self.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> RationalFunction:
        try:
            o = self.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> RationalFunction:
        try:
            o = self.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RationalFunction._raw(ZERO, ONE)
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = self.num, o.den
        if not g1.is_constant():
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        n2, d1 = o.num, self.den
        if not g2.is_constant():
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        num, den = n1 * n2, d1 * d2
        lc = den.lead
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        return RationalFunction._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: object) -> RationalFunction:
        try:
            o = self.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> RationalFunction:
        try:
            o = self.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> RationalFunction:
        if k < 0:
            return self.inverse() ** (-k)
        # num and den stay coprime under powers
        return RationalFunction._raw(self.num**k, self.den**k)

    # -- evaluation ------------------------------------------------------

    def __call__(self, x: Scalar) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def compose(self, inner: Polynomial) -> RationalFunction:
        return RationalFunction(self.num.compose(inner), self.den.compose(inner))

    # -- comparison / display --------------------------------------------

    def __eq__(self, other: object) -> bool:
        try:
            o = self.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if self.den == ONE:
            return self.num.pretty(var)
        n = self.num.pretty(var)
        d = self.den.pretty(var)
        if self.num.term_count() > 1:
            n = f"({n})"
        if self.den.term_count() > 1:
            d = f"({d})"
        return f"{n} / {d}"


def _reduced(num: Polynomial, den: Polynomial) -> RationalFunction:
    if num.is_zero():
        return RationalFunction._raw(ZERO, ONE)
    return RationalFunction._raw(num, den)


def ratfun_eval_poly(p: Polynomial, x: Coercible) -> RationalFunction:
    """Evaluate the polynomial ``p`` at a rational function (Horner scheme)."""
    xr = RationalFunction.coerce(x)
    acc = RationalFunction._raw(ZERO, ONE)
    for c in reversed(p.coeffs):
        acc = acc * xr + c
    return acc
