"""Backtracking isomorphism test for small signed marked graphs."""

from __future__ import annotations

from typing import Optional

from .errors import SizeLimitExceeded
from .graph import SignedGraph, degree_profile, marking_of

DEFAULT_SIZE_LIMIT = 10


def _invariant(g: SignedGraph) -> list[tuple[int, int, int]]:
    mu = marking_of(g)
    return [(mu[v], d.d_plus, d.d_minus) for v, d in enumerate(degree_profile(g))]


def isomorphic_marked(
    g1: SignedGraph, g2: SignedGraph, size_limit: int = DEFAULT_SIZE_LIMIT
) -> Optional[tuple[int, ...]]:
    """Find ``phi`` with ``phi[v]`` the image of vertex ``v``, or return ``None``.

    ``phi`` preserves adjacency, edge signs and markings
    (``marking_of(g1)[v] == marking_of(g2)[phi[v]]``).
    """
    if max(g1.n, g2.n) > size_limit:
        raise SizeLimitExceeded(f"isomorphism search limited to {size_limit} vertices")
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    inv1, inv2 = _invariant(g1), _invariant(g2)
    if sorted(inv1) != sorted(inv2):
        return None
    nb1, nb2 = g1.neighbors(), g2.neighbors()

    # place high-degree vertices first, then grow along adjacency
    order: list[int] = []
    rest = set(range(g1.n))
    while rest:
        start = max(rest, key=lambda v: (len(nb1[v]), -v))
        stack = [start]
        while stack:
            v = stack.pop()
            if v not in rest:
                continue
            rest.remove(v)
            order.append(v)
            stack.extend(sorted((w for w in nb1[v] if w in rest), key=lambda w: len(nb1[w])))

    phi = [-1] * g1.n
    used = [False] * g2.n

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for c in range(g2.n):
            if used[c] or inv2[c] != inv1[v]:
                continue
            ok = True
            for w, s in nb1[v].items():
                if phi[w] != -1 and nb2[c].get(phi[w]) != s:
                    ok = False
                    break
            if ok:
                # mapped non-neighbours of v must stay non-neighbours of c
                mapped_nb = sum(1 for w in nb1[v] if phi[w] != -1)
                if sum(1 for x in nb2[c] if used[x]) != mapped_nb:
                    ok = False
            if not ok:
                continue
            phi[v] = c
            used[c] = True
            if extend(depth + 1):
                return True
            phi[v] = -1
            used[c] = False
        return False

    return tuple(phi) if extend(0) else None
