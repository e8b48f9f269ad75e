"""Corona and generalized corona products of signed graphs.

Product vertex order: base vertices ``0..n-1`` first, then the copy of
satellite ``l`` for ``l = 0..n-1``, each copy in its own vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidGraph
from .graph import SignedGraph, adjacency, marking_of


@dataclass(frozen=True)
class CoronaSpec:
    base: SignedGraph
    satellites: tuple[SignedGraph, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "satellites", tuple(self.satellites))
        if len(self.satellites) != self.base.n:
            raise InvalidGraph(
                f"base has {self.base.n} vertices but {len(self.satellites)} satellites were given"
            )

    @classmethod
    def uniform(cls, base: SignedGraph, satellite: SignedGraph) -> CoronaSpec:
        return cls(base, (satellite,) * base.n)

    @property
    def orders(self) -> list[int]:
        return [h.n for h in self.satellites]


@dataclass(frozen=True)
class CoronaLayout:
    base_range: range
    satellite_ranges: tuple[range, ...]

    @classmethod
    def of(cls, spec: CoronaSpec) -> CoronaLayout:
        n = spec.base.n
        ranges = []
        start = n
        for h in spec.satellites:
            ranges.append(range(start, start + h.n))
            start += h.n
        return cls(range(n), tuple(ranges))

    @property
    def size(self) -> int:
        return self.satellite_ranges[-1].stop if self.satellite_ranges else self.base_range.stop


def generalized_corona(spec: CoronaSpec) -> tuple[SignedGraph, CoronaLayout]:
    """Join base vertex ``l`` to every vertex ``w`` of satellite ``l``.

    The new edge is signed ``mu(v_l) * mu_l(w)`` using each graph's own
    marking.  The product carries no explicit marking.
    """
    layout = CoronaLayout.of(spec)
    mu = marking_of(spec.base)
    edges = set(spec.base.edges)
    for l, (h, rng) in enumerate(zip(spec.satellites, layout.satellite_ranges)):
        off = rng.start
        mu_l = marking_of(h)
        edges.update((u + off, v + off, s) for u, v, s in h.edges)
        edges.update((l, off + w, mu[l] * mu_l[w]) for w in range(h.n))
    return SignedGraph(layout.size, frozenset(edges)), layout


def corona(g: SignedGraph, h: SignedGraph) -> tuple[SignedGraph, CoronaLayout]:
    return generalized_corona(CoronaSpec.uniform(g, h))


def block_matrices(spec: CoronaSpec) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """The blocks ``P`` (base marks), ``Q`` (satellite mark rows) and ``D``.

    ``[[A(G), PQ], [(PQ)^T, D]]`` is the product's adjacency matrix.
    """
    n = spec.base.n
    layout = CoronaLayout.of(spec)
    total = layout.size - n
    mu = marking_of(spec.base)
    p = [[mu[i] if i == j else 0 for j in range(n)] for i in range(n)]
    q = [[0] * total for _ in range(n)]
    d = [[0] * total for _ in range(total)]
    for l, (h, rng) in enumerate(zip(spec.satellites, layout.satellite_ranges)):
        off = rng.start - n
        for w, m in enumerate(marking_of(h)):
            q[l][off + w] = m
        for i, row in enumerate(adjacency(h)):
            d[off + i][off : off + h.n] = row
    return p, q, d


def assemble_adjacency(
    a: Sequence[Sequence[int]], p: Sequence[Sequence[int]], q: Sequence[Sequence[int]], d: Sequence[Sequence[int]]
) -> list[list[int]]:
    n, t = len(a), len(d)
    # P is diagonal, so (PQ)_ij = P_ii Q_ij
    pq = [[p[i][i] * q[i][j] for j in range(t)] for i in range(n)]
    top = [list(a[i]) + pq[i] for i in range(n)]
    bottom = [[pq[i][j] for i in range(n)] + list(d[j]) for j in range(t)]
    return top + bottom
