"""Randomized exact verification of the factorization identities.

Each suite draws instances from its own seeded generator, compares an
assembled-matrix oracle with the factorized computation, and records any
disagreement together with a shrunken reproducing instance.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from . import spectral as sp
from .balance import (
    predicted_edge_stats,
    predicted_triad_census,
    total_triads,
    triad_census,
    unbalance_witness,
)
from .corona import CoronaSpec, generalized_corona
from .graph import (
    SignedGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    is_balanced,
    path_graph,
)
from .graphfile import format_graph
from .spectral import CoronalKind

SUITES = (
    "charpoly",
    "laplacian",
    "signless",
    "tables",
    "balance",
    "coronal-paths",
    "closed-forms",
    "bipartite",
    "cospectral",
)

FAULTS = ("sign-flip",)


@dataclass
class Failure:
    detail: str
    instance: str = ""


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


# -- random instances ---------------------------------------------------------


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> SignedGraph:
    edges = [(u, v, rng.choice((1, -1))) for u, v in combinations(range(n), 2) if rng.random() < density]
    return SignedGraph(n, frozenset(edges))


def random_spec(rng: random.Random, max_base: int = 5, max_sat: int = 4, density: float = 0.5) -> CoronaSpec:
    base = random_graph(rng, rng.randint(1, max_base), density)
    sats = tuple(random_graph(rng, rng.randint(0, max_sat), density) for _ in range(base.n))
    return CoronaSpec(base, sats)


def random_signing(rng: random.Random, g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, frozenset((u, v, rng.choice((1, -1))) for u, v, _ in g.edges))


def random_relabel(rng: random.Random, g: SignedGraph) -> SignedGraph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def format_spec(spec: CoronaSpec) -> str:
    parts = [format_graph(spec.base, "base")]
    for l, h in enumerate(spec.satellites):
        parts.append(format_graph(h, f"satellite {l}"))
    return "".join(parts)


# -- shrinking -------------------------------------------------------------------


def _drop_vertex(g: SignedGraph, v: int) -> SignedGraph:
    def idx(u: int) -> int:
        return u if u < v else u - 1

    edges = [(idx(a), idx(b), s) for a, b, s in g.edges if v not in (a, b)]
    mk = None
    if g.explicit_marking is not None:
        mk = g.explicit_marking[:v] + g.explicit_marking[v + 1 :]
    return SignedGraph.from_edges(g.n - 1, edges, mk)


def _drop_edge(g: SignedGraph, e: tuple[int, int, int]) -> SignedGraph:
    return SignedGraph(g.n, g.edges - {e}, g.explicit_marking)


def _spec_candidates(spec: CoronaSpec) -> Iterable[CoronaSpec]:
    base, sats = spec.base, list(spec.satellites)
    if base.n > 1:
        for v in range(base.n):
            yield CoronaSpec(_drop_vertex(base, v), tuple(sats[:v] + sats[v + 1 :]))
    for l, h in enumerate(sats):
        for v in range(h.n):
            yield CoronaSpec(base, tuple(sats[:l] + [_drop_vertex(h, v)] + sats[l + 1 :]))
    for e in base.edge_list:
        yield CoronaSpec(_drop_edge(base, e), spec.satellites)
    for l, h in enumerate(sats):
        for e in h.edge_list:
            yield CoronaSpec(base, tuple(sats[:l] + [_drop_edge(h, e)] + sats[l + 1 :]))


def shrink_spec(spec: CoronaSpec, failing: Callable[[CoronaSpec], bool], budget: int = 500) -> CoronaSpec:
    """Greedy delta-debugging: delete vertices and edges while the failure persists."""
    improved = True
    while improved and budget > 0:
        improved = False
        for cand in _spec_candidates(spec):
            budget -= 1
            try:
                still = failing(cand)
            except Exception:
                still = True
            if still:
                spec = cand
                improved = True
                break
            if budget <= 0:
                break
    return spec


# -- balance oracle used by the balance suite ------------------------------------------


def fundamental_cycle_balance(g: SignedGraph) -> bool:
    """Balance via the sign of every fundamental cycle of a spanning forest."""
    nb = g.neighbors()
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    tree: set[tuple[int, int]] = set()
    for root in range(g.n):
        if root in depth:
            continue
        depth[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in nb[v]:
                if w not in depth:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    tree.add((min(v, w), max(v, w)))
                    stack.append(w)
    for u, v, s in g.edges:
        if (u, v) in tree:
            continue
        sign = s
        a, b = u, v
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            sign *= nb[a][parent[a]]
            a = parent[a]
        if sign < 0:
            return False
    return True


# -- suites ---------------------------------------------------------------------------


def _sign_flip(chis: list) -> list:
    # first nonzero coronal changes sign; used only to prove the harness catches faults
    out = list(chis)
    for i, c in enumerate(out):
        if not c.is_zero():
            out[i] = -c
            break
    return out


_HOOKS = {"sign-flip": _sign_flip}


def _theorem_suite(kind: CoronalKind) -> Callable[..., SuiteResult]:
    def run(rng: random.Random, trials: int, max_base: int, max_sat: int, fault: Optional[str]) -> SuiteResult:
        res = SuiteResult("")
        hook = _HOOKS.get(fault) if fault else None

        def failing(spec: CoronaSpec) -> bool:
            return sp.corona_poly(spec, kind, hook).expanded != sp.direct_poly(spec, kind)

        for _ in range(trials):
            spec = random_spec(rng, max_base, max_sat)
            res.checks += 1
            try:
                bad = failing(spec)
            except Exception as exc:  # an inconsistency is itself a failure
                bad, why = True, repr(exc)
            else:
                why = "factored polynomial differs from the assembled-matrix oracle"
            if bad:
                small = shrink_spec(spec, failing)
                res.failures.append(Failure(f"{kind.value}: {why}", format_spec(small)))
                break
        return res

    return run


def _tables_suite(rng: random.Random, trials: int, max_base: int, max_sat: int, fault: Optional[str]) -> SuiteResult:
    res = SuiteResult("")
    for _ in range(trials):
        spec = random_spec(rng, max_base, max_sat)
        product, _ = generalized_corona(spec)
        pos = sum(1 for *_, s in product.edges if s > 0)
        actual_edges = (len(product.edges), pos, len(product.edges) - pos)
        census = triad_census(product)
        res.checks += 3
        if tuple(predicted_edge_stats(spec)) != actual_edges:
            res.failures.append(Failure("predicted edge stats differ from the product", format_spec(spec)))
        if predicted_triad_census(spec) != census:
            res.failures.append(Failure("predicted triad census differs from the product", format_spec(spec)))
        if total_triads(spec) != census.total:
            res.failures.append(Failure("total triad identity fails", format_spec(spec)))
        if res.failures:
            break
    return res


def _balance_suite(rng: random.Random, trials: int, max_base: int, max_sat: int, fault: Optional[str]) -> SuiteResult:
    res = SuiteResult("")
    for _ in range(trials):
        g = random_graph(rng, rng.randint(1, 7), rng.choice((0.3, 0.5, 0.8)))
        res.checks += 1
        verdict = is_balanced(g)
        if verdict.balanced != fundamental_cycle_balance(g):
            res.failures.append(Failure("two-colouring disagrees with fundamental cycles", format_graph(g)))
            break
        census = triad_census(g)
        if verdict.balanced and (census.t1 or census.t3):
            res.failures.append(Failure("balanced graph has an unbalanced triad", format_graph(g)))
            break

        spec = random_spec(rng, max_base, max_sat)
        if is_balanced(spec.base) and all(is_balanced(h) for h in spec.satellites):
            res.checks += 1
            product, _ = generalized_corona(spec)
            if unbalance_witness(spec) and is_balanced(product):
                res.failures.append(Failure("witness reported but product is balanced", format_spec(spec)))
                break
    return res


def _coronal_paths_suite(
    rng: random.Random, trials: int, max_base: int, max_sat: int, fault: Optional[str]
) -> SuiteResult:
    res = SuiteResult("")
    for _ in range(max(1, trials // 2)):
        h = random_graph(rng, rng.randint(1, 8))
        for kind in CoronalKind:
            res.checks += 1
            if sp.coronal_solve(h, kind) != sp.coronal_rank_one(h, kind):
                res.failures.append(Failure(f"{kind.value}: coronal paths disagree", format_graph(h)))
                return res
    return res


def closed_form_battery() -> list[tuple[str, SignedGraph]]:
    items = [(f"Kbar{n}", empty_graph(n)) for n in range(1, 6)]
    for n in range(3, 7):
        items.append((f"C{n}+", cycle_graph([1] * n)))
        items.append((f"C{n}-", cycle_graph([-1] * n)))
    items.append(("K2+", complete_graph(2, 1)))
    items.append(("K2-", complete_graph(2, -1)))
    return items


def check_closed_forms(h: SignedGraph) -> list[str]:
    """Mismatches between the general coronal and every closed form that applies."""
    bad = []
    cf = sp.coronal_net_regular(h)
    if cf is not None and cf != sp.coronal(h, CoronalKind.ADJ):
        bad.append("adj")
    for kind in (CoronalKind.LAP, CoronalKind.QLAP):
        cf = sp.coronal_co_regular(h, kind)
        if cf is not None and cf != sp.coronal(h, kind):
            bad.append(kind.value)
    return bad


def _closed_forms_suite(
    rng: random.Random, trials: int, max_base: int, max_sat: int, fault: Optional[str]
) -> SuiteResult:
    res = SuiteResult("")
    graphs = [g for _, g in closed_form_battery()]
    graphs += [random_graph(rng, rng.randint(1, 6), rng.choice((0.4, 0.7, 1.0))) for _ in range(trials)]
    for h in graphs:
        res.checks += 1
        bad = check_closed_forms(h)
        if bad:
            res.failures.append(Failure(f"closed form mismatch ({', '.join(bad)})", format_graph(h)))
            break
    return res


BIPARTITE_BASES = {
    "P2": path_graph([1]),
    "P4": path_graph([1, 1, 1]),
    "C4": cycle_graph([1] * 4),
    "C6": cycle_graph([1] * 6),
    "K2,2": complete_bipartite(2, 2),
}
REGULAR_BIPARTITE_BASES = ("P2", "C4", "C6", "K2,2")


def satellite_pool() -> list[SignedGraph]:
    """Edgeless graphs, the empty graph and a few small net-regular graphs."""
    return [
        empty_graph(0),
        empty_graph(1),
        empty_graph(2),
        empty_graph(3),
        complete_graph(2, 1),
        complete_graph(2, -1),
        cycle_graph([1, 1, 1]),
        cycle_graph([-1, -1, -1, -1]),
        cycle_graph([1, -1, 1, -1]),
    ]


def _bipartite_suite(rng: random.Random, trials: int, max_base: int, max_sat: int, fault: Optional[str]) -> SuiteResult:
    res = SuiteResult("")
    pool = satellite_pool()
    rounds = max(1, trials // 10)
    for _ in range(rounds):
        for name, shape in BIPARTITE_BASES.items():
            g = random_signing(rng, shape)
            z1, z2 = rng.choice(pool), rng.choice(pool)
            spec = sp.two_family_spec(g, z1, z2)
            res.checks += 1
            if sp.charpoly_bipartite_two_family(g, z1, z2).expanded != sp.charpoly_generalized_corona(spec).expanded:
                res.failures.append(Failure(f"{name}: square-root form differs", format_spec(spec)))
                return res
            m, t = rng.randint(0, 3), rng.randint(0, 3)
            kspec = sp.two_family_spec(g, empty_graph(m), empty_graph(t))
            res.checks += 1
            if sp.edgeless_two_family_charpoly(g, m, t) != sp.direct_poly(kspec, CoronalKind.ADJ):
                res.failures.append(Failure(f"{name}: edgeless closed form differs", format_spec(kspec)))
                return res
            if name not in REGULAR_BIPARTITE_BASES:
                continue
            for kind in (CoronalKind.LAP, CoronalKind.QLAP):
                res.checks += 2
                if sp.bipartite_regular_poly(g, z1, z2, kind).expanded != sp.corona_poly(spec, kind).expanded:
                    res.failures.append(Failure(f"{name}/{kind.value}: regular bipartite form differs", format_spec(spec)))
                    return res
                if sp.edgeless_regular_bipartite_poly(g, m, t) != sp.direct_poly(kspec, kind):
                    res.failures.append(Failure(f"{name}/{kind.value}: edgeless regular form differs", format_spec(kspec)))
                    return res
    return res


def switching_pair(rng: random.Random, n: int) -> tuple[SignedGraph, SignedGraph]:
    g = random_graph(rng, n, 0.6)
    subset = [v for v in range(n) if rng.random() < 0.5]
    return g, g.switch(subset)


def _cospectral_suite(rng: random.Random, trials: int, max_base: int, max_sat: int, fault: Optional[str]) -> SuiteResult:
    res = SuiteResult("")
    rounds = max(1, trials // 10)
    for _ in range(rounds):
        g1, g2 = switching_pair(rng, rng.randint(4, 5))
        h = random_graph(rng, rng.randint(1, 4))
        # relabelled copies share the coronal of h
        sats = tuple(random_relabel(rng, h) for _ in range(g1.n))
        for kind in CoronalKind:
            res.checks += 2
            if not sp.cospectral(g1, g2, kind):
                res.failures.append(Failure(f"{kind.value}: switched bases not cospectral", format_graph(g1) + format_graph(g2)))
                return res
            p1, _ = generalized_corona(CoronaSpec(g1, sats))
            p2, _ = generalized_corona(CoronaSpec(g2, sats))
            if not sp.cospectral(p1, p2, kind):
                res.failures.append(Failure(f"{kind.value}: products over cospectral bases differ", format_spec(CoronaSpec(g1, sats))))
                return res

        base = random_graph(rng, rng.randint(2, 4))
        family = [random_relabel(rng, h) for _ in range(2 * base.n)]
        first = CoronaSpec(base, tuple(family[: base.n]))
        second = CoronaSpec(base, tuple(family[base.n :]))
        for kind in CoronalKind:
            res.checks += 1
            if sp.direct_poly(first, kind) != sp.direct_poly(second, kind):
                res.failures.append(Failure(f"{kind.value}: swapped families not cospectral", format_spec(first)))
                return res
    return res


_RUNNERS: dict[str, Callable[..., SuiteResult]] = {
    "charpoly": _theorem_suite(CoronalKind.ADJ),
    "laplacian": _theorem_suite(CoronalKind.LAP),
    "signless": _theorem_suite(CoronalKind.QLAP),
    "tables": _tables_suite,
    "balance": _balance_suite,
    "coronal-paths": _coronal_paths_suite,
    "closed-forms": _closed_forms_suite,
    "bipartite": _bipartite_suite,
    "cospectral": _cospectral_suite,
}


def run_verify(
    seed: int = 0,
    trials: int = 200,
    max_base: int = 5,
    max_sat: int = 4,
    suites: Optional[Sequence[str]] = None,
    fault: Optional[str] = None,
) -> list[SuiteResult]:
    """Run the named suites (all by default); each suite reseeds from ``seed``."""
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    results = []
    for name in suites or SUITES:
        rng = random.Random(f"{seed}:{name}")
        t0 = time.perf_counter()
        res = _RUNNERS[name](rng, trials, max_base, max_sat, fault)
        res.name = name
        res.seconds = time.perf_counter() - t0
        results.append(res)
    return results
