from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from oracles import char_poly_coeffs, coronal_at
from signed_corona.corona import CoronaSpec, generalized_corona
from signed_corona.errors import InternalInconsistency, NonEvenPolynomial, NotBipartite, NotRegular, PartsUnequal
from signed_corona.graph import (
    SignedGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    laplacian,
    marking_of,
    path_graph,
    signless_laplacian,
    triad,
)
from signed_corona.matrix import char_poly
from signed_corona.poly import ONE, X, Polynomial
from signed_corona.ratfunc import RationalFunction, ratfun_eval_poly
from signed_corona.spectral import (
    CoronalKind,
    bipartite_regular_poly,
    bipartite_split,
    charpoly_bipartite_two_family,
    charpoly_generalized_corona,
    coronal,
    coronal_co_regular,
    coronal_net_regular,
    coronal_rank_one,
    coronal_solve,
    corona_poly,
    cospectral,
    direct_poly,
    edgeless_regular_bipartite_poly,
    edgeless_two_family_charpoly,
    equal_coronal_poly,
    g_determinant,
    kind_poly,
    laplacian_poly_bipartite_regular,
    laplacian_poly_generalized_corona,
    signless_laplacian_poly_generalized_corona,
    signless_poly_bipartite_regular,
    two_family_spec,
)
from signed_corona.verify import random_graph, random_relabel
from test_corona_balance import specs
from test_graph import signed_graphs

ADJ, LAP, QLAP = CoronalKind.ADJ, CoronalKind.LAP, CoronalKind.QLAP
x = RationalFunction.x()
K1 = empty_graph(1)
K2N = complete_graph(2, -1)
K2P = complete_graph(2, 1)


def R(num: object, den: object = 1) -> RationalFunction:
    return RationalFunction(num, den)  # type: ignore[arg-type]


# -- coronals ---------------------------------------------------------------------------


def test_coronal_examples() -> None:
    for n in range(1, 6):
        assert coronal(empty_graph(n)) == R(n, X)
    assert coronal(K2N) == R(2, X + 1)
    assert coronal(K2N, LAP) == R(2, X - 3)
    assert coronal(K1) == R(1, X)
    assert coronal(empty_graph(0)) == 0
    assert coronal(empty_graph(0), LAP, method="rank_one") == 0
    with pytest.raises(ValueError):
        coronal(K1, method="magic")


def test_closed_form_examples() -> None:
    assert coronal_net_regular(cycle_graph([1] * 4)) == R(4, X - 2)
    assert coronal_net_regular(K2N) == R(2, X + 1)
    assert coronal_net_regular(path_graph([1, -1])) is None
    assert coronal_co_regular(K2N, LAP) == R(2, X - 3)
    assert coronal_co_regular(K2P, QLAP) == R(2, X - 3)
    assert coronal_co_regular(cycle_graph([1] * 4), LAP) == R(4, X - 1)
    assert coronal_co_regular(complete_bipartite(1, 2), LAP) is None
    with pytest.raises(ValueError):
        coronal_co_regular(K1, ADJ)


# net-regular with k = 0 but the canonical marking is not constant
NET_REGULAR_MIXED = SignedGraph.from_edges(5, [(0, 2, 1), (0, 3, -1), (1, 3, 1), (1, 4, -1), (2, 3, -1), (3, 4, 1)])


def test_net_regular_form_needs_constant_marking() -> None:
    g = NET_REGULAR_MIXED
    assert marking_of(g) == (-1, -1, -1, 1, -1)
    assert coronal(g) == R(5 * X**2 - 9, X**3 - 5 * X)
    assert coronal(g) != R(5, X)  # the unguarded closed form is wrong here
    assert coronal_net_regular(g) is None


def test_co_regular_form_needs_constant_marking() -> None:
    g = cycle_graph([1] * 4).with_marking([1, -1, 1, 1])
    assert coronal(g, LAP) != R(4, X - 1)
    assert coronal_co_regular(g, LAP) is None
    assert coronal_net_regular(g) is None


@settings(max_examples=80, deadline=None)
@given(signed_graphs(max_n=6, marked=True))
def test_coronal_paths_and_closed_forms(g: SignedGraph) -> None:
    for kind in CoronalKind:
        assert coronal_solve(g, kind) == coronal_rank_one(g, kind)
    cf = coronal_net_regular(g)
    if cf is not None:
        assert cf == coronal(g)
    for kind in (LAP, QLAP):
        cf = coronal_co_regular(g, kind)
        if cf is not None:
            assert cf == coronal(g, kind)


@settings(max_examples=60, deadline=None)
@given(signed_graphs(max_n=6, marked=True))
def test_coronal_matches_pointwise_resolvent(g: SignedGraph) -> None:
    mu = marking_of(g)
    for kind in CoronalKind:
        chi = coronal(g, kind)
        for t in (Fraction(17, 3), Fraction(-29, 7)):
            # rational eigenvalues of an integer matrix are integers, so these are never poles
            want = coronal_at(kind.matrix(g), mu, t - kind.shift)
            assert chi(t) == want


# -- base determinant ---------------------------------------------------------------


def test_g_determinant_examples() -> None:
    assert g_determinant([1 / x], K1) == x - 1 / x
    assert g_determinant([1 / x, 1 / x], K2N) == (x - 1 / x) ** 2 - 1
    with pytest.raises(ValueError):
        g_determinant([1 / x], K2N)
    with pytest.raises(ValueError):
        g_determinant([1 / x], K1, LAP)


@settings(max_examples=40, deadline=None)
@given(signed_graphs(max_n=5))
def test_equal_coronals_collapse_to_shifted_base_poly(g: SignedGraph) -> None:
    chi = R(3, X - 2)
    for kind in CoronalKind:
        m = 0 if kind is ADJ else 2
        got = g_determinant([chi] * g.n, g, kind, [m] * g.n)
        assert got == ratfun_eval_poly(kind_poly(g, kind), x - m - chi)


# -- main theorems ------------------------------------------------------------------


def test_main_theorem_examples() -> None:
    assert charpoly_generalized_corona(CoronaSpec(K1, (K1,))).expanded == X**2 - 1
    assert charpoly_generalized_corona(CoronaSpec(K2N, (K1, K1))).expanded == X**4 - 3 * X**2 + 1
    fp = laplacian_poly_generalized_corona(CoronaSpec(K1, (K1,)))
    assert fp.expanded == X**2 - 2 * X
    star = CoronaSpec(K1, (empty_graph(2),))
    assert laplacian_poly_generalized_corona(star).expanded == X * (X - 1) * (X - 3)
    assert signless_laplacian_poly_generalized_corona(CoronaSpec(K1, (K1,))).expanded == X**2 - 2 * X
    assert signless_laplacian_poly_generalized_corona(star).expanded == X * (X - 1) * (X - 3)


def test_empty_satellites_reduce_to_base() -> None:
    g = triad(1)
    spec = CoronaSpec(g, (empty_graph(0),) * 3)
    for kind in CoronalKind:
        assert corona_poly(spec, kind).expanded == kind_poly(g, kind)


def test_factored_shape() -> None:
    spec = CoronaSpec(path_graph([1, 1]), (K2N, K2N, empty_graph(2)))
    fp = charpoly_generalized_corona(spec)
    mults = {f.label: f.multiplicity for f in fp.factors}
    assert mults["f_H[0,1]"] == 2 and mults["f_H[2]"] == 1
    assert fp.product() == R(fp.expanded)
    assert fp.expanded.lead == 1 and fp.expanded.degree == 9


def test_inconsistent_hook_is_reported() -> None:
    spec = CoronaSpec(K1, (K1,))
    with pytest.raises(InternalInconsistency):
        charpoly_generalized_corona(spec, hook=lambda chis: [c + R(1, X - 7) for c in chis])


@settings(max_examples=60, deadline=None)
@given(specs(max_base=4, max_sat=3))
def test_main_theorems_with_explicit_markings(spec: CoronaSpec) -> None:
    product, _ = generalized_corona(spec)
    for kind in CoronalKind:
        fp = corona_poly(spec, kind)
        assert fp.expanded == char_poly(kind.matrix(product))
        assert fp.product() == R(fp.expanded)


def test_main_theorem_against_interpolation_oracle() -> None:
    rng = random.Random(11)
    for _ in range(15):
        base = random_graph(rng, rng.randint(1, 3))
        spec = CoronaSpec(base, tuple(random_graph(rng, rng.randint(0, 2)) for _ in range(base.n)))
        product, _ = generalized_corona(spec)
        for kind in CoronalKind:
            assert corona_poly(spec, kind).expanded.coeffs == char_poly_coeffs(kind.matrix(product))


def test_uniform_corona_corollary_form() -> None:
    rng = random.Random(5)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 4))
        h = random_graph(rng, rng.randint(0, 3))
        spec = CoronaSpec(g, (h,) * g.n)
        for kind in CoronalKind:
            # (f_H)^n * f_G(x - m - chi_H), m the satellite order for L and Q
            assert equal_coronal_poly(spec, kind).expanded == direct_poly(spec, kind)


def test_equal_coronal_shortcut_rejects_mixed_satellites() -> None:
    with pytest.raises(ValueError):
        equal_coronal_poly(CoronaSpec(K2N, (K1, K2N)), ADJ)
    # same coronal 2/x but different orders
    mixed = CoronaSpec(K2N, (empty_graph(2), empty_graph(2).with_marking([1, 1])))
    assert equal_coronal_poly(mixed, ADJ).expanded == direct_poly(mixed, ADJ)


# -- bipartite forms ----------------------------------------------------------------------


def test_bipartite_split_examples() -> None:
    assert bipartite_split(path_graph([1])) == (1, X - 1, X - 1)
    y = X
    assert bipartite_split(path_graph([-1, -1, -1])) == (2, y**2 - 3 * y + 1, y**2 - 3 * y + 1)
    assert bipartite_split(complete_bipartite(1, 2)) == (1, y - 2, y * (y - 2))
    with pytest.raises(NotBipartite):
        bipartite_split(triad(0))


def test_two_family_examples() -> None:
    p2 = path_graph([1])
    assert charpoly_bipartite_two_family(p2, K1, K1).expanded == X**4 - 3 * X**2 + 1
    star = complete_bipartite(1, 2)  # M = {0}
    spec = two_family_spec(star, empty_graph(2), K1)
    assert spec.satellites == (empty_graph(2), K1, K1)
    assert charpoly_bipartite_two_family(star, empty_graph(2), K1).expanded == direct_poly(spec, ADJ)
    with pytest.raises(NotBipartite):
        charpoly_bipartite_two_family(triad(0), K1, K1)


def test_two_family_uses_the_mirror_form_when_m_is_larger() -> None:
    g = complete_bipartite(3, 1)  # |M| = 3 > n/2
    assert bipartite_split(g)[0] == 3
    for z1, z2 in ((K1, K2N), (empty_graph(2), empty_graph(0))):
        spec = two_family_spec(g, z1, z2)
        assert charpoly_bipartite_two_family(g, z1, z2).expanded == direct_poly(spec, ADJ)


def test_edgeless_corollaries() -> None:
    g = path_graph([1, -1, 1])
    for m in range(3):
        for t in range(3):
            spec = two_family_spec(g, empty_graph(m), empty_graph(t))
            want = direct_poly(spec, ADJ)
            assert edgeless_two_family_charpoly(g, m, t) == R(want)
    # the empty-satellite case
    spec = two_family_spec(g, empty_graph(2), empty_graph(0))
    i, n = 2, 4
    closed = x ** (2 * i) * x ** (n - 2 * i) * ratfun_eval_poly(bipartite_split(g)[1], (x - 2 / x) * x)
    assert closed == R(direct_poly(spec, ADJ))


def test_regular_bipartite_examples() -> None:
    p2 = path_graph([1])
    for m in range(3):
        for s in range(3):
            spec = two_family_spec(p2, empty_graph(m), empty_graph(s))
            for kind in (LAP, QLAP):
                assert edgeless_regular_bipartite_poly(p2, m, s) == R(direct_poly(spec, kind))
    # the s = 0 factor (x - r) inside the root
    m, r = 2, 1
    arg = (x - m - r - Fraction(m) / (x - 1)) * (x - r)
    want = (x - 1) ** m * ratfun_eval_poly(Polynomial([-1, 1]), arg)
    assert edgeless_regular_bipartite_poly(p2, m, 0) == want


def test_regular_bipartite_with_general_satellites() -> None:
    rng = random.Random(9)
    for shape in (cycle_graph([1, -1, 1, 1]), complete_bipartite(2, 2, -1), cycle_graph([-1] * 6)):
        for _ in range(3):
            z1, z2 = random_graph(rng, rng.randint(0, 3)), random_graph(rng, rng.randint(0, 3))
            spec = two_family_spec(shape, z1, z2)
            assert laplacian_poly_bipartite_regular(shape, z1, z2).expanded == direct_poly(spec, LAP)
            assert signless_poly_bipartite_regular(shape, z1, z2).expanded == direct_poly(spec, QLAP)


def test_regular_bipartite_preconditions() -> None:
    with pytest.raises(PartsUnequal):
        laplacian_poly_bipartite_regular(complete_bipartite(1, 2), K1, K1)
    with pytest.raises(NotRegular):
        laplacian_poly_bipartite_regular(path_graph([1, 1, 1]), K1, K1)
    with pytest.raises(NotBipartite):
        laplacian_poly_bipartite_regular(triad(0), K1, K1)
    with pytest.raises(ValueError):
        bipartite_regular_poly(path_graph([1]), K1, K1, ADJ)
    assert issubclass(NonEvenPolynomial, ValueError)


# -- cospectrality ------------------------------------------------------------------------


def test_cospectral_examples() -> None:
    c4 = cycle_graph([1] * 4)
    switched = c4.switch([0, 1])
    assert switched.edges != c4.edges
    assert cospectral(c4, switched)
    assert not cospectral(triad(0), triad(1))
    assert cospectral(triad(1), triad(1), LAP)


def test_l_and_q_cospectral_corollaries() -> None:
    rng = random.Random(21)
    for _ in range(10):
        g1 = random_graph(rng, 5, 0.6)
        g2 = g1.switch([0, 2])
        h = random_graph(rng, 3, 0.6)
        sats = tuple(random_relabel(rng, h) for _ in range(5))
        for kind in (LAP, QLAP):
            assert cospectral(g1, g2, kind)
            p1, _ = generalized_corona(CoronaSpec(g1, sats))
            p2, _ = generalized_corona(CoronaSpec(g2, sats))
            assert char_poly(laplacian(p1) if kind is LAP else signless_laplacian(p1)) == kind_poly(p2, kind)


def test_kind_poly_of_empty_graph() -> None:
    for kind in CoronalKind:
        assert kind_poly(empty_graph(0), kind) == ONE
    assert kind_poly(empty_graph(2), QLAP) == X**2
