"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored in ascending order of degree as a tuple of
:class:`fractions.Fraction`, with no trailing zeros.  The empty tuple is the
zero polynomial.  Instances are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import NonEvenPolynomial

Scalar = Union[int, Fraction]


def _strip(cs: list[Fraction]) -> tuple[Fraction, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Polynomial:
    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _strip([Fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> Polynomial:
        # caller guarantees Fractions and no trailing zero
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> Polynomial:
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Polynomial:
        p = cls.constant(1)
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def monic(self) -> Polynomial:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        lc = self.coeffs[-1]
        return Polynomial._raw(tuple(c / lc for c in self.coeffs))

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return None

    def __add__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return Polynomial._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: object) -> tuple[Polynomial, Polynomial]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree
        if len(rem) - 1 < db:
            return ZERO, self
        quot = [Fraction(0)] * (len(rem) - db)
        lc = o.coeffs[-1]
        bc = o.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lc
            quot[k] = q
            if q:
                for j in range(db + 1):
                    rem[k + j] -= q * bc[j]
        return Polynomial._raw(_strip(quot)), Polynomial._raw(_strip(rem[:db]))

    def __floordiv__(self, other: object) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: object) -> Polynomial:
        return divmod(self, other)[1]

    def exact_div(self, other: Polynomial) -> Polynomial:
        """Quotient ``self / other``; raises ``ArithmeticError`` on a remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def shift(self, k: int) -> Polynomial:
        """Multiply by ``x**k``."""
        if not self.coeffs or k == 0:
            return self
        return Polynomial._raw((Fraction(0),) * k + self.coeffs)

    # -- evaluation and composition --------------------------------------

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: Polynomial) -> Polynomial:
        """Return ``self(inner(x))``."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    # -- comparison / display -------------------------------------------

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if a == 1:
                    body = mono
                elif a.denominator == 1:
                    body = f"{a}{mono}"
                else:
                    body = f"({a}){mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def term_count(self) -> int:
        return sum(1 for c in self.coeffs if c != 0)


ZERO = Polynomial._raw(())
ONE = Polynomial._raw((Fraction(1),))
X = Polynomial._raw((Fraction(0), Fraction(1)))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; ``gcd(0, 0)`` is the zero polynomial."""
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return ZERO
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def even_part_substitute(p: Polynomial) -> Polynomial:
    """Return ``q`` with ``q(x**2) == p(x)``.

    Raises :class:`NonEvenPolynomial` if ``p`` has a nonzero odd coefficient.
    """
    odd = [k for k in range(1, len(p.coeffs), 2) if p.coeffs[k] != 0]
    if odd:
        raise NonEvenPolynomial(f"coefficient of x^{odd[0]} is nonzero")
    return Polynomial._raw(p.coeffs[::2])


def odd_free(p: Polynomial) -> bool:
    return all(p.coeffs[k] == 0 for k in range(1, len(p.coeffs), 2))
