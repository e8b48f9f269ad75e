"""Exact matrix algorithms over Q, Q[x] and Q(x).

Matrices are plain row-major lists of lists.  Nothing here uses floating
point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import ONE, ZERO, Polynomial, Scalar, poly_lcm
from .ratfunc import Coercible, RationalFunction

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def char_poly(m: Sequence[Sequence[Scalar]]) -> Polynomial:
    """Characteristic polynomial ``det(xI - m)`` of a square rational matrix.

    Reduces ``m`` to upper Hessenberg form by exact similarity transforms and
    then runs the standard three-term recurrence, O(n^3) field operations.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("char_poly needs a square matrix")
    h = [[Fraction(v) for v in row] for row in m]

    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        t = h[j + 1][j]
        src = h[j + 1]
        for i in range(j + 2, n):
            u = h[i][j] / t
            if u == 0:
                continue
            hi = h[i]
            for k in range(n):
                if src[k]:
                    hi[k] -= u * src[k]
            for row in h:
                if row[i]:
                    row[j + 1] += u * row[i]

    # p[k] holds coefficient lists of the leading k x k block's char poly
    p: list[list[Fraction]] = [[Fraction(1)]]
    for mm in range(1, n + 1):
        prev = p[mm - 1]
        d = h[mm - 1][mm - 1]
        cur = [Fraction(0)] * (mm + 1)
        for k, c in enumerate(prev):
            cur[k + 1] += c
            cur[k] -= d * c
        t = Fraction(1)
        for i in range(mm - 1, 0, -1):
            t *= h[i][i - 1]
            if t == 0:
                break
            f = h[i - 1][mm - 1] * t
            if f:
                for k, c in enumerate(p[i - 1]):
                    cur[k] -= f * c
        p.append(cur)
    return Polynomial(p[n])


def poly_matrix_det(m: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant over Q[x] by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return ONE
    a = [list(row) for row in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != k:
            a[piv], a[k] = a[k], a[piv]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (akk * a[i][j] - aik * a[k][j]).exact_div(prev)
        prev = akk
    return a[n - 1][n - 1] * sign


def ratfun_matrix_det(m: Sequence[Sequence[Coercible]]) -> RationalFunction:
    """Determinant of a square matrix over Q(x).

    Each column is scaled by the lcm of its denominators, the resulting
    polynomial matrix goes through :func:`poly_matrix_det`, and the scale
    factors are divided back out.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("ratfun_matrix_det needs a square matrix")
    rows = [[RationalFunction.coerce(v) for v in row] for row in m]
    scale = ONE
    cleared: list[list[Polynomial]] = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        lcm = ONE
        for i in range(n):
            if not rows[i][j].is_zero():
                lcm = poly_lcm(lcm, rows[i][j].den)
        for i in range(n):
            r = rows[i][j]
            cleared[i][j] = r.num * lcm.exact_div(r.den)
        scale = scale * lcm
    return RationalFunction(poly_matrix_det(cleared), scale)


def ratfun_solve(m: Sequence[Sequence[Coercible]], b: Sequence[Coercible]) -> list[RationalFunction]:
    """Solve ``m y = b`` over Q(x) by Gaussian elimination.

    Raises ``ZeroDivisionError`` when ``m`` is singular.
    """
    n = len(m)
    a = [[RationalFunction.coerce(v) for v in row] + [RationalFunction.coerce(b[i])]
         for i, row in enumerate(m)]
    for k in range(n):
        piv = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[k], a[piv] = a[piv], a[k]
        inv = a[k][k].inverse()
        a[k] = [v * inv for v in a[k]]
        for i in range(n):
            if i != k and not a[i][k].is_zero():
                f = a[i][k]
                a[i] = [vi - f * vk for vi, vk in zip(a[i], a[k])]
    return [row[n] for row in a]
