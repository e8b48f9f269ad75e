"""Signed graphs with vertex markings.

Vertices are the integers ``0..n-1``.  Edges are stored as ``(u, v, sign)``
triples with ``u < v`` and ``sign`` in ``{+1, -1}``.  A graph may carry an
explicit marking, otherwise its marking is the canonical one: each vertex is
marked with the product of the signs of its incident edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import InvalidGraph

Edge = tuple[int, int, int]
Marking = tuple[int, ...]


def _sign(s: object) -> int:
    if s in (1, "+", "+1"):
        return 1
    if s in (-1, "-", "-1"):
        return -1
    raise InvalidGraph(f"invalid sign {s!r}")


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    explicit_marking: Optional[Marking] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidGraph("negative vertex count")
        seen: set[tuple[int, int]] = set()
        for u, v, s in self.edges:
            if not (0 <= u < v < self.n):
                raise InvalidGraph(f"bad edge ({u}, {v}) for n={self.n}")
            if s not in (1, -1):
                raise InvalidGraph(f"bad sign {s!r} on edge ({u}, {v})")
            if (u, v) in seen:
                raise InvalidGraph(f"parallel edges between {u} and {v}")
            seen.add((u, v))
        if self.explicit_marking is not None:
            if len(self.explicit_marking) != self.n:
                raise InvalidGraph("marking length differs from vertex count")
            if any(m not in (1, -1) for m in self.explicit_marking):
                raise InvalidGraph("marking entries must be +1 or -1")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int, object]] = (),
        marking: Optional[Sequence[int]] = None,
    ) -> SignedGraph:
        """Build a graph from loosely specified edges.

        Endpoints may come in either order and signs may be ``+1``/``-1`` or
        ``"+"``/``"-"``.  Loops and repeated pairs raise :class:`InvalidGraph`.
        """
        norm: list[Edge] = []
        pairs: set[tuple[int, int]] = set()
        for u, v, s in edges:
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in pairs:
                raise InvalidGraph(f"duplicate edge ({a}, {b})")
            pairs.add((a, b))
            norm.append((a, b, _sign(s)))
        mk = None if marking is None else tuple(_sign(m) for m in marking)
        return cls(n, frozenset(norm), mk)

    @property
    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self) -> list[dict[int, int]]:
        """Per-vertex map ``neighbor -> sign``."""
        nb: list[dict[int, int]] = [{} for _ in range(self.n)]
        for u, v, s in self.edges:
            nb[u][v] = s
            nb[v][u] = s
        return nb

    def with_marking(self, marking: Optional[Sequence[int]]) -> SignedGraph:
        return SignedGraph(self.n, self.edges, None if marking is None else tuple(marking))

    def relabel(self, perm: Sequence[int]) -> SignedGraph:
        """Image under the vertex map ``v -> perm[v]``; markings travel with their vertex."""
        edges = [(perm[u], perm[v], s) for u, v, s in self.edges]
        mk = None
        if self.explicit_marking is not None:
            out = [0] * self.n
            for v, m in enumerate(self.explicit_marking):
                out[perm[v]] = m
            mk = out
        return SignedGraph.from_edges(self.n, edges, mk)

    def switch(self, subset: Iterable[int]) -> SignedGraph:
        """Negate every edge with exactly one endpoint in ``subset``."""
        s_set = set(subset)
        edges = [(u, v, -s if ((u in s_set) != (v in s_set)) else s) for u, v, s in self.edges]
        return SignedGraph(self.n, frozenset(edges))


# -- standard families ------------------------------------------------------


def empty_graph(n: int) -> SignedGraph:
    return SignedGraph(n)


def complete_graph(n: int, sign: int = 1) -> SignedGraph:
    return SignedGraph(n, frozenset((u, v, sign) for u, v in combinations(range(n), 2)))


def path_graph(signs: Sequence[int]) -> SignedGraph:
    """Path on ``len(signs) + 1`` vertices, edge ``i--i+1`` carrying ``signs[i]``."""
    return SignedGraph.from_edges(len(signs) + 1, [(i, i + 1, s) for i, s in enumerate(signs)])


def cycle_graph(signs: Sequence[int]) -> SignedGraph:
    n = len(signs)
    if n < 3:
        raise InvalidGraph("a cycle needs at least 3 vertices")
    return SignedGraph.from_edges(n, [(i, (i + 1) % n, s) for i, s in enumerate(signs)])


def triad(negatives: int) -> SignedGraph:
    """Triangle with ``negatives`` negative edges; vertex 0 is the apex.

    Negative edges are placed at the apex first, so ``triad(2)`` has both
    apex edges negative and the base edge ``1--2`` positive.
    """
    if not 0 <= negatives <= 3:
        raise ValueError("a triad has 0..3 negative edges")
    order = [(0, 1), (0, 2), (1, 2)] if negatives != 1 else [(1, 2), (0, 1), (0, 2)]
    return SignedGraph.from_edges(3, [(u, v, -1 if i < negatives else 1) for i, (u, v) in enumerate(order)])


def complete_bipartite(a: int, b: int, sign: int = 1) -> SignedGraph:
    return SignedGraph(a + b, frozenset((u, a + v, sign) for u in range(a) for v in range(b)))


# -- markings and degrees --------------------------------------------------


def canonical_marking(g: SignedGraph) -> Marking:
    mk = [1] * g.n
    for u, v, s in g.edges:
        mk[u] *= s
        mk[v] *= s
    return tuple(mk)


def marking_of(g: SignedGraph) -> Marking:
    if g.explicit_marking is not None:
        return g.explicit_marking
    return canonical_marking(g)


class Degree(NamedTuple):
    d_plus: int
    d_minus: int

    @property
    def net(self) -> int:
        return self.d_plus - self.d_minus

    @property
    def total(self) -> int:
        return self.d_plus + self.d_minus


def degree_profile(g: SignedGraph) -> list[Degree]:
    dp = [0] * g.n
    dm = [0] * g.n
    for u, v, s in g.edges:
        if s > 0:
            dp[u] += 1
            dp[v] += 1
        else:
            dm[u] += 1
            dm[v] += 1
    return [Degree(a, b) for a, b in zip(dp, dm)]


def net_regularity(g: SignedGraph) -> Optional[int]:
    """Common net degree ``d+ - d-`` of all vertices, or ``None``.

    The empty graph on zero vertices has no net degree and returns ``None``.
    """
    nets = {d.net for d in degree_profile(g)}
    return nets.pop() if len(nets) == 1 else None


def co_regularity(g: SignedGraph) -> Optional[tuple[int, int]]:
    """Co-regularity pair ``(r, k)``: underlying ``r``-regular and ``k``-net-regular."""
    prof = degree_profile(g)
    if len({d.total for d in prof}) != 1 or len({d.net for d in prof}) != 1:
        return None
    return prof[0].total, prof[0].net


# -- matrices ----------------------------------------------------------------


def adjacency(g: SignedGraph) -> list[list[int]]:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v, s in g.edges:
        a[u][v] = a[v][u] = s
    return a


def laplacian(g: SignedGraph) -> list[list[int]]:
    """``L = D - A`` with ``D`` the diagonal of total degrees."""
    a = adjacency(g)
    out = [[-x for x in row] for row in a]
    for v, d in enumerate(degree_profile(g)):
        out[v][v] = d.total
    return out


def signless_laplacian(g: SignedGraph) -> list[list[int]]:
    """``Q = D + A``."""
    a = adjacency(g)
    for v, d in enumerate(degree_profile(g)):
        a[v][v] = d.total
    return a


# -- balance and bipartiteness ---------------------------------------------


@dataclass(frozen=True)
class BalanceResult:
    """Outcome of :func:`is_balanced`.

    ``camps`` is a two-part split witnessing balance; ``cycle`` is a closed
    vertex walk ``v0, v1, ..., v0`` whose edge-sign product is ``-1``.
    Exactly one of the two is set.
    """

    balanced: bool
    camps: Optional[tuple[frozenset[int], frozenset[int]]] = None
    cycle: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.balanced


def _tree_path(parent: list[int], v: int) -> list[int]:
    out = [v]
    while parent[v] != -1:
        v = parent[v]
        out.append(v)
    return out


def is_balanced(g: SignedGraph) -> BalanceResult:
    """Decide balance by signed two-colouring of each component.

    Positive edges must join equal colours and negative edges different
    ones.  On a conflict the offending non-tree edge closes a negative cycle
    through the BFS tree, which is returned as the witness.
    """
    nb = g.neighbors()
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, s in nb[v].items():
                want = color[v] if s > 0 else 1 - color[v]
                if color[w] == -1:
                    color[w] = want
                    parent[w] = v
                    queue.append(w)
                elif color[w] != want:
                    pv, pw = _tree_path(parent, v), _tree_path(parent, w)
                    on_pw = set(pw)
                    lca = next(x for x in pv if x in on_pw)
                    up = pv[: pv.index(lca) + 1]
                    down = pw[: pw.index(lca)]
                    cycle = tuple(up + down[::-1] + [v])
                    return BalanceResult(False, cycle=cycle)
    camp0 = frozenset(v for v in range(g.n) if color[v] == 0)
    camp1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return BalanceResult(True, camps=(camp0, camp1))


def bipartition(g: SignedGraph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Parts ``(M, N)`` of the underlying graph, or ``None`` if it has an odd cycle.

    Deterministic: the lowest vertex of each component lands in ``M``.
    """
    nb = g.neighbors()
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in nb[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    m = tuple(v for v in range(g.n) if side[v] == 0)
    nn = tuple(v for v in range(g.n) if side[v] == 1)
    return m, nn


def complement(g: SignedGraph) -> SignedGraph:
    """Signed complement: non-edges become edges signed ``mu(u) * mu(v)``.

    The result keeps the marking of ``g`` as its explicit marking.
    """
    mu = marking_of(g)
    present = {(u, v) for u, v, _ in g.edges}
    edges = frozenset(
        (u, v, mu[u] * mu[v]) for u, v in combinations(range(g.n), 2) if (u, v) not in present
    )
    return SignedGraph(g.n, edges, mu)


def cycle_sign(g: SignedGraph, walk: Sequence[int]) -> int:
    """Product of edge signs along a closed walk given as ``v0, ..., v0``."""
    nb = g.neighbors()
    s = 1
    for a, b in zip(walk, walk[1:]):
        s *= nb[a][b]
    return s
