"""Signed coronals and factorized spectra of generalized corona products.

For a graph ``H`` with marking ``mu`` the signed coronal of kind ``K`` is
``mu^T (s(x) I - M)^{-1} mu`` where

* ADJ: ``M = A(H)``, ``s(x) = x``
* LAP: ``M = L(H)``, ``s(x) = x - 1``
* QLAP: ``M = Q(H)``, ``s(x) = x - 1``

The characteristic (resp. Laplacian, signless Laplacian) polynomial of a
generalized corona product factors as the product of the satellites'
polynomials evaluated at ``s(x)`` times a determinant over the base graph
whose diagonal absorbs one coronal per base vertex.  Everything is exact; a
single indeterminate ``x`` stands for lambda, alpha or beta.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .corona import CoronaSpec, generalized_corona
from .errors import InternalInconsistency, NotBipartite, NotRegular, PartsUnequal
from .graph import (
    SignedGraph,
    adjacency,
    bipartition,
    co_regularity,
    degree_profile,
    laplacian,
    marking_of,
    net_regularity,
    signless_laplacian,
)
from .matrix import char_poly, ratfun_matrix_det, ratfun_solve
from .poly import ONE, X, Polynomial, even_part_substitute
from .ratfunc import RationalFunction, ratfun_eval_poly


class CoronalKind(enum.Enum):
    ADJ = "adj"
    LAP = "lap"
    QLAP = "qlap"

    @property
    def shift(self) -> int:
        return 0 if self is CoronalKind.ADJ else 1

    def matrix(self, g: SignedGraph) -> list[list[int]]:
        if self is CoronalKind.ADJ:
            return adjacency(g)
        if self is CoronalKind.LAP:
            return laplacian(g)
        return signless_laplacian(g)

    def shifted_var(self) -> Polynomial:
        return X - self.shift


@dataclass(frozen=True)
class Factor:
    label: str
    value: RationalFunction
    multiplicity: int = 1


@dataclass(frozen=True)
class FactoredPoly:
    """A polynomial together with the factor list it was assembled from.

    Factors may be proper rational functions; only their product is
    guaranteed to be a polynomial.
    """

    factors: tuple[Factor, ...]
    expanded: Polynomial

    def product(self) -> RationalFunction:
        acc = RationalFunction.from_poly(ONE)
        for f in self.factors:
            acc = acc * f.value**f.multiplicity
        return acc


def _cleared(factors: list[Factor]) -> FactoredPoly:
    fp = FactoredPoly(tuple(factors), ONE)
    prod = fp.product()
    if not prod.is_polynomial():
        raise InternalInconsistency(f"factor product does not clear to a polynomial: {prod}")
    return FactoredPoly(tuple(factors), prod.num)


def kind_poly(g: SignedGraph, kind: CoronalKind) -> Polynomial:
    """``det(xI - M)`` for the kind's matrix; 1 for the empty graph."""
    return char_poly(kind.matrix(g))


def cospectral(g1: SignedGraph, g2: SignedGraph, kind: CoronalKind = CoronalKind.ADJ) -> bool:
    return kind_poly(g1, kind) == kind_poly(g2, kind)


# -- coronals ------------------------------------------------------------------


def coronal_solve(h: SignedGraph, kind: CoronalKind = CoronalKind.ADJ) -> RationalFunction:
    """Coronal by solving ``(s(x) I - M) y = mu`` over Q(x)."""
    if h.n == 0:
        return RationalFunction(0)
    m = kind.matrix(h)
    mu = marking_of(h)
    s = kind.shifted_var()
    rows = [[s - m[i][j] if i == j else Polynomial.constant(-m[i][j]) for j in range(h.n)] for i in range(h.n)]
    y = ratfun_solve(rows, list(mu))
    acc = RationalFunction(0)
    for mi, yi in zip(mu, y):
        acc = acc + yi * mi
    return acc


def coronal_rank_one(h: SignedGraph, kind: CoronalKind = CoronalKind.ADJ) -> RationalFunction:
    """Coronal from ``det(tI - M - mu mu^T) = det(tI - M) (1 - chi(t))``."""
    if h.n == 0:
        return RationalFunction(0)
    m = kind.matrix(h)
    mu = marking_of(h)
    bumped = [[m[i][j] + mu[i] * mu[j] for j in range(h.n)] for i in range(h.n)]
    c1, c2 = char_poly(m), char_poly(bumped)
    s = kind.shifted_var()
    return RationalFunction((c1 - c2).compose(s), c1.compose(s))


def coronal(h: SignedGraph, kind: CoronalKind = CoronalKind.ADJ, method: str = "solve") -> RationalFunction:
    if method == "solve":
        return coronal_solve(h, kind)
    if method == "rank_one":
        return coronal_rank_one(h, kind)
    raise ValueError(f"unknown coronal method {method!r}")


def _constant_marking(h: SignedGraph) -> bool:
    return len(set(marking_of(h))) <= 1


def coronal_net_regular(h: SignedGraph) -> Optional[RationalFunction]:
    """``n / (x - k)`` for a ``k``-net-regular graph with a constant marking.

    The marking must be all ``+1`` or all ``-1`` so that it is an
    eigenvector of ``A`` for eigenvalue ``k``; net-regularity alone does not
    guarantee this when vertex degrees differ in parity.
    """
    k = net_regularity(h)
    if k is None or not _constant_marking(h):
        return None
    return RationalFunction(h.n, X - k)


def coronal_co_regular(h: SignedGraph, kind: CoronalKind) -> Optional[RationalFunction]:
    """Closed form ``n / (x - 1 - 2 d)`` with ``d = d-`` (LAP) or ``d+`` (QLAP).

    Requires a co-regular graph, a common negative (equivalently positive)
    degree, and a constant marking.
    """
    if kind is CoronalKind.ADJ:
        raise ValueError("use coronal_net_regular for the adjacency coronal")
    if co_regularity(h) is None or not _constant_marking(h):
        return None
    prof = degree_profile(h)
    d = {p.d_minus if kind is CoronalKind.LAP else p.d_plus for p in prof}
    if len(d) != 1:
        return None
    return RationalFunction(h.n, X - 1 - 2 * d.pop())


# -- the base-graph determinant --------------------------------------------------


def g_determinant(
    chis: Sequence[RationalFunction],
    g: SignedGraph,
    kind: CoronalKind = CoronalKind.ADJ,
    satellite_orders: Optional[Sequence[int]] = None,
) -> RationalFunction:
    """``det(diag(x - t_l - chi_l) - M(G))`` (``t_l`` is dropped for ADJ)."""
    if len(chis) != g.n:
        raise ValueError(f"expected {g.n} coronals, got {len(chis)}")
    if kind is CoronalKind.ADJ:
        orders = [0] * g.n
    else:
        if satellite_orders is None or len(satellite_orders) != g.n:
            raise ValueError("satellite_orders must list one order per base vertex")
        orders = list(satellite_orders)
    m = kind.matrix(g)
    x = RationalFunction.x()
    rows = [
        [x - orders[i] - chis[i] - m[i][i] if i == j else RationalFunction(-m[i][j]) for j in range(g.n)]
        for i in range(g.n)
    ]
    return ratfun_matrix_det(rows)


# -- main factorization ----------------------------------------------------------

# Test hook: maps the list of coronals before they enter the base determinant.
CoronalHook = Callable[[list[RationalFunction]], list[RationalFunction]]


def _group_factors(polys: Sequence[Polynomial], label: str) -> list[Factor]:
    counts: dict[Polynomial, list[int]] = {}
    for l, p in enumerate(polys):
        counts.setdefault(p, []).append(l)
    out = []
    for p, ls in counts.items():
        if p == ONE:
            continue
        names = ",".join(str(l) for l in ls)
        out.append(Factor(f"{label}[{names}]", RationalFunction.from_poly(p), len(ls)))
    return out


def corona_poly(spec: CoronaSpec, kind: CoronalKind, hook: Optional[CoronalHook] = None) -> FactoredPoly:
    """Factorized characteristic polynomial of ``kind`` for a generalized corona.

    ``prod_l f_{M(H_l)}(s(x)) * det(diag(x - t_l - chi_l) - M(G))``.
    """
    s = kind.shifted_var()
    sat_polys = [kind_poly(h, kind).compose(s) for h in spec.satellites]
    chis = [coronal(h, kind) for h in spec.satellites]
    if hook is not None:
        chis = hook(chis)
    g = g_determinant(chis, spec.base, kind, spec.orders)
    name = {CoronalKind.ADJ: "f_H", CoronalKind.LAP: "f_L(H)(x-1)", CoronalKind.QLAP: "f_Q(H)(x-1)"}[kind]
    factors = _group_factors(sat_polys, name)
    factors.append(Factor({CoronalKind.ADJ: "g", CoronalKind.LAP: "L_g", CoronalKind.QLAP: "Q_g"}[kind], g))
    return _cleared(factors)


def charpoly_generalized_corona(spec: CoronaSpec, hook: Optional[CoronalHook] = None) -> FactoredPoly:
    return corona_poly(spec, CoronalKind.ADJ, hook)


def laplacian_poly_generalized_corona(spec: CoronaSpec, hook: Optional[CoronalHook] = None) -> FactoredPoly:
    return corona_poly(spec, CoronalKind.LAP, hook)


def signless_laplacian_poly_generalized_corona(
    spec: CoronaSpec, hook: Optional[CoronalHook] = None
) -> FactoredPoly:
    return corona_poly(spec, CoronalKind.QLAP, hook)


def direct_poly(spec: CoronaSpec, kind: CoronalKind) -> Polynomial:
    """Oracle: characteristic polynomial of the assembled product's matrix."""
    product, _ = generalized_corona(spec)
    return kind_poly(product, kind)


def equal_coronal_poly(spec: CoronaSpec, kind: CoronalKind) -> FactoredPoly:
    """Shortcut when every satellite has the same coronal (and, for LAP/QLAP, order).

    The base determinant collapses to ``f_{M(G)}(x - m - chi)``.
    """
    chis = {coronal(h, kind) for h in spec.satellites}
    if len(chis) > 1:
        raise ValueError("satellites do not share one coronal")
    orders = set(spec.orders)
    if kind is not CoronalKind.ADJ and len(orders) > 1:
        raise ValueError("satellites do not share one order")
    chi = chis.pop() if chis else RationalFunction(0)
    m = 0 if kind is CoronalKind.ADJ or not orders else orders.pop()
    s = kind.shifted_var()
    sat_polys = [kind_poly(h, kind).compose(s) for h in spec.satellites]
    base = ratfun_eval_poly(kind_poly(spec.base, kind), RationalFunction.x() - m - chi)
    factors = _group_factors(sat_polys, "f_H")
    factors.append(Factor("f_G(x - m - chi)", base))
    return _cleared(factors)


# -- bipartite forms ----------------------------------------------------------------


def _parts(g: SignedGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    parts = bipartition(g)
    if parts is None:
        raise NotBipartite("graph has an odd cycle")
    return parts


def bipartite_split(g: SignedGraph) -> tuple[int, Polynomial, Polynomial]:
    """``(h, g_hat, q_hat)`` with ``f_G(x) = x^(n-2h) g_hat(x^2) = x^(2h-n) q_hat(x^2)``.

    ``h`` is the size of the part ``M`` from :func:`bipartition`;
    ``g_hat(y) = det(yI - W W^T)`` and ``q_hat(y) = det(yI - W^T W)``.
    """
    m_part, _ = _parts(g)
    h, n = len(m_part), g.n
    f = char_poly(adjacency(g))

    def recover(e: int) -> Polynomial:
        # f(x) = x^e * p(x^2)
        p = f.shift(-e) if e < 0 else f.exact_div(Polynomial.monomial(e))
        return even_part_substitute(p)

    return h, recover(n - 2 * h), recover(2 * h - n)


def two_family_spec(g: SignedGraph, z1: SignedGraph, z2: SignedGraph) -> CoronaSpec:
    """Corona spec giving ``z1`` to every vertex of part ``M`` and ``z2`` to part ``N``."""
    m_part, _ = _parts(g)
    ms = set(m_part)
    return CoronaSpec(g, tuple(z1 if v in ms else z2 for v in range(g.n)))


def charpoly_bipartite_two_family(g: SignedGraph, z1: SignedGraph, z2: SignedGraph) -> FactoredPoly:
    """Characteristic polynomial via the square-root form for bipartite bases.

    With ``a = x - chi_{z1}``, ``b = x - chi_{z2}`` and ``i = |M|``:
    ``f_{z1}^i f_{z2}^(n-i) b^(n-2i) g_hat(ab)`` if ``n >= 2i``, else
    ``f_{z1}^i f_{z2}^(n-i) a^(2i-n) q_hat(ab)``.
    """
    i, g_hat, q_hat = bipartite_split(g)
    n = g.n
    x = RationalFunction.x()
    a = x - coronal(z1)
    b = x - coronal(z2)
    factors = [
        Factor("f_Z1", RationalFunction.from_poly(kind_poly(z1, CoronalKind.ADJ)), i),
        Factor("f_Z2", RationalFunction.from_poly(kind_poly(z2, CoronalKind.ADJ)), n - i),
    ]
    if n >= 2 * i:
        factors.append(Factor("x - chi_Z2", b, n - 2 * i))
        factors.append(Factor("g_G(sqrt((x - chi_Z1)(x - chi_Z2)))", ratfun_eval_poly(g_hat, a * b)))
    else:
        factors.append(Factor("x - chi_Z1", a, 2 * i - n))
        factors.append(Factor("q_G(sqrt((x - chi_Z1)(x - chi_Z2)))", ratfun_eval_poly(q_hat, a * b)))
    return _cleared([f for f in factors if f.multiplicity])


def _regular_bipartite_checks(g: SignedGraph) -> tuple[int, int, Polynomial]:
    m_part, n_part = _parts(g)
    if len(m_part) != len(n_part):
        raise PartsUnequal(f"parts have sizes {len(m_part)} and {len(n_part)}")
    degrees = {d.total for d in degree_profile(g)}
    if len(degrees) != 1:
        raise NotRegular("underlying graph is not regular")
    f = char_poly(adjacency(g))
    return degrees.pop(), len(m_part), even_part_substitute(f)


def bipartite_regular_poly(g: SignedGraph, z1: SignedGraph, z2: SignedGraph, kind: CoronalKind) -> FactoredPoly:
    """Laplacian or signless Laplacian polynomial for an ``r``-regular bipartite base
    with equal parts of size ``k``:

    ``prod_j f_{M(Z_j)}(x-1)^k * f_G(sqrt((x-m-r-chi_1)(x-s-r-chi_2)))``.
    """
    if kind is CoronalKind.ADJ:
        raise ValueError("use charpoly_bipartite_two_family for the adjacency case")
    r, k, f_even = _regular_bipartite_checks(g)
    x = RationalFunction.x()
    s = kind.shifted_var()
    arg = (x - z1.n - r - coronal(z1, kind)) * (x - z2.n - r - coronal(z2, kind))
    factors = [
        Factor("f_M(Z1)(x-1)", RationalFunction.from_poly(kind_poly(z1, kind).compose(s)), k),
        Factor("f_M(Z2)(x-1)", RationalFunction.from_poly(kind_poly(z2, kind).compose(s)), k),
        Factor("f_G(sqrt(...))", ratfun_eval_poly(f_even, arg)),
    ]
    return _cleared(factors)


def laplacian_poly_bipartite_regular(g: SignedGraph, z1: SignedGraph, z2: SignedGraph) -> FactoredPoly:
    return bipartite_regular_poly(g, z1, z2, CoronalKind.LAP)


def signless_poly_bipartite_regular(g: SignedGraph, z1: SignedGraph, z2: SignedGraph) -> FactoredPoly:
    return bipartite_regular_poly(g, z1, z2, CoronalKind.QLAP)


# -- closed forms with edgeless satellites ----------------------------------------
# These use the known coronal m/x (or m/(x-1)) of an edgeless graph on m
# vertices instead of computing it; m = 0 stands for the empty graph.


def edgeless_two_family_charpoly(g: SignedGraph, m: int, t: int) -> RationalFunction:
    """``x^(mi+(n-i)t) (x - t/x)^(n-2i) g_hat((x - m/x)(x - t/x))`` and its mirror."""
    i, g_hat, q_hat = bipartite_split(g)
    n = g.n
    x = RationalFunction.x()
    a, b = x - Fraction(m) / x, x - Fraction(t) / x
    lead = x ** (m * i + (n - i) * t)
    if n >= 2 * i:
        return lead * b ** (n - 2 * i) * ratfun_eval_poly(g_hat, a * b)
    return lead * a ** (2 * i - n) * ratfun_eval_poly(q_hat, a * b)


def edgeless_regular_bipartite_poly(g: SignedGraph, m: int, s: int) -> RationalFunction:
    """``(x-1)^(k(m+s)) f_G(sqrt((x-m-r-m/(x-1))(x-s-r-s/(x-1))))``.

    Identical for the Laplacian and signless Laplacian polynomials.
    """
    r, k, f_even = _regular_bipartite_checks(g)
    x = RationalFunction.x()
    arg = (x - m - r - Fraction(m) / (x - 1)) * (x - s - r - Fraction(s) / (x - 1))
    return (x - 1) ** (k * (m + s)) * ratfun_eval_poly(f_even, arg)
