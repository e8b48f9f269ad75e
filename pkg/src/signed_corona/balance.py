"""Edge and triad statistics of signed graphs and their corona products.

The predicted counts for a generalized corona product are computed per base
vertex: vertex ``l`` only joins satellite ``l``, so each new edge and each new
triangle is classified using ``mu(v_l)`` and the marks inside that one
satellite.  ``literal_*`` functions reproduce the closed-form table
expressions that multiply global mark counts; they agree with the per-vertex
counts only in homogeneous cases and are exposed for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .corona import CoronaSpec
from .errors import PreconditionUnbalancedInput
from .graph import Edge, SignedGraph, is_balanced, marking_of


@dataclass(frozen=True)
class EdgeClassCounts:
    """Edges by sign and by the marks of their endpoints."""

    pos_pp: int = 0
    pos_pm: int = 0
    pos_mm: int = 0
    neg_pp: int = 0
    neg_pm: int = 0
    neg_mm: int = 0

    @property
    def total(self) -> int:
        return self.positive + self.negative

    @property
    def positive(self) -> int:
        return self.pos_pp + self.pos_pm + self.pos_mm

    @property
    def negative(self) -> int:
        return self.neg_pp + self.neg_pm + self.neg_mm


class TriadCensus(NamedTuple):
    t0: int = 0
    t1: int = 0
    t2: int = 0
    t3: int = 0

    @property
    def total(self) -> int:
        return self.t0 + self.t1 + self.t2 + self.t3

    def __add__(self, other: object) -> TriadCensus:  # type: ignore[override]
        if not isinstance(other, TriadCensus):
            return NotImplemented
        return TriadCensus(*(a + b for a, b in zip(self, other)))


class EdgeStats(NamedTuple):
    total: int
    positive: int
    negative: int


class Witness(NamedTuple):
    satellite: int
    edge: Edge
    condition: int


def edge_class_counts(g: SignedGraph) -> EdgeClassCounts:
    mu = marking_of(g)
    c = dict.fromkeys(("pos_pp", "pos_pm", "pos_mm", "neg_pp", "neg_pm", "neg_mm"), 0)
    for u, v, s in g.edges:
        marks = mu[u] + mu[v]
        cls = "pp" if marks == 2 else "mm" if marks == -2 else "pm"
        c[("pos_" if s > 0 else "neg_") + cls] += 1
    return EdgeClassCounts(**c)


def triad_census(g: SignedGraph) -> TriadCensus:
    nb = g.neighbors()
    counts = [0, 0, 0, 0]
    for u, v, s in g.edges:
        # u < v; take w > v so each triangle is seen once
        for w in nb[u].keys() & nb[v].keys():
            if w > v:
                neg = (s < 0) + (nb[u][w] < 0) + (nb[v][w] < 0)
                counts[neg] += 1
    return TriadCensus(*counts)


def _mark_counts(g: SignedGraph) -> tuple[int, int]:
    mu = marking_of(g)
    plus = sum(1 for m in mu if m > 0)
    return plus, g.n - plus


def predicted_edge_stats(spec: CoronaSpec) -> EdgeStats:
    mu = marking_of(spec.base)
    pos = sum(1 for *_, s in spec.base.edges if s > 0)
    neg = len(spec.base.edges) - pos
    for l, h in enumerate(spec.satellites):
        hp = sum(1 for *_, s in h.edges if s > 0)
        pos += hp
        neg += len(h.edges) - hp
        m_plus, m_minus = _mark_counts(h)
        if mu[l] > 0:
            pos, neg = pos + m_plus, neg + m_minus
        else:
            pos, neg = pos + m_minus, neg + m_plus
    return EdgeStats(pos + neg, pos, neg)


def literal_table_edge_stats(spec: CoronaSpec) -> EdgeStats:
    """Edge counts from the published closed form (global mark counts)."""
    g_plus, g_minus = _mark_counts(spec.base)
    base = edge_class_counts(spec.base)
    sats = [edge_class_counts(h) for h in spec.satellites]
    marks = [_mark_counts(h) for h in spec.satellites]
    sum_hp = sum(m[0] for m in marks)
    sum_hm = sum(m[1] for m in marks)
    pos = base.positive + sum(c.positive for c in sats) + g_plus * sum_hp + g_minus * sum_hm
    neg = base.negative + sum(c.negative for c in sats) + g_plus * sum_hm + g_minus * sum_hp
    total = len(spec.base.edges) + sum(len(h.edges) for h in spec.satellites) + sum(spec.orders)
    return EdgeStats(total, pos, neg)


def predicted_triad_census(spec: CoronaSpec) -> TriadCensus:
    mu = marking_of(spec.base)
    census = triad_census(spec.base)
    new = [0, 0, 0, 0]
    for l, h in enumerate(spec.satellites):
        census = census + triad_census(h)
        mu_l = marking_of(h)
        for u, w, s in h.edges:
            neg = (mu[l] * mu_l[u] < 0) + (mu[l] * mu_l[w] < 0) + (s < 0)
            new[neg] += 1
    return census + TriadCensus(*new)


def literal_table_triad_census(spec: CoronaSpec) -> TriadCensus:
    """Triad counts from the published closed form (global mark counts)."""
    g_plus, g_minus = _mark_counts(spec.base)
    census = triad_census(spec.base)
    for h in spec.satellites:
        census = census + triad_census(h)
    cs = [edge_class_counts(h) for h in spec.satellites]

    def tot(attr: str) -> int:
        return sum(getattr(c, attr) for c in cs)

    t0 = g_plus * tot("pos_pp") + g_minus * tot("pos_mm")
    t1 = g_plus * (tot("pos_pm") + tot("neg_pp")) + g_minus * (tot("pos_pm") + tot("neg_mm"))
    t2 = g_plus * (tot("pos_mm") + tot("neg_pm")) + g_minus * (tot("pos_pp") + tot("neg_pm"))
    t3 = g_plus * tot("neg_mm") + g_minus * tot("neg_pp")
    return census + TriadCensus(t0, t1, t2, t3)


def total_triads(spec: CoronaSpec) -> int:
    """Triangles of the product: those of the factors plus one per satellite edge."""
    return (
        triad_census(spec.base).total
        + sum(triad_census(h).total for h in spec.satellites)
        + sum(len(h.edges) for h in spec.satellites)
    )


def edge_condition(edge: Edge, marking: tuple[int, ...]) -> int | None:
    """Which unbalance condition (1, 2 or 3) a satellite edge meets, if any.

    1: positive edge between opposite marks; 2: negative edge between two
    negative marks; 3: negative edge between two positive marks.
    """
    u, v, s = edge
    a, b = marking[u], marking[v]
    if s > 0:
        return 1 if a != b else None
    if a == b:
        return 2 if a < 0 else 3
    return None


def unbalance_witness(spec: CoronaSpec) -> list[Witness]:
    """Satellite edges that force the product to be unbalanced.

    Every listed edge closes an unbalanced triangle with its base vertex.
    Requires the base and every satellite to be balanced.
    """
    if not is_balanced(spec.base):
        raise PreconditionUnbalancedInput("base graph is unbalanced")
    for l, h in enumerate(spec.satellites):
        if not is_balanced(h):
            raise PreconditionUnbalancedInput(f"satellite {l} is unbalanced")
    hits: list[Witness] = []
    for l, h in enumerate(spec.satellites):
        mu_l = marking_of(h)
        for e in h.edge_list:
            cond = edge_condition(e, mu_l)
            if cond is not None:
                hits.append(Witness(l, e, cond))
    return hits
