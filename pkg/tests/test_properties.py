"""Property-based checks over random small multigraphs."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from edgezeta.cycles import are_isomorphic, closed_walk_counts, enumerate_prime_cycles
from edgezeta.graph import Graph, complement, disjoint_union, edge_induced, md2_core, to_symmetric_digraph
from edgezeta.io import parse_graph6, to_graph6
from edgezeta.poly import UniPoly, bareiss_det, reverse_charpoly, root_multiplicity
from edgezeta.zeta import ZetaOracle, bass_reciprocal, ihara_reciprocal, signed_top_coefficient


@st.composite
def multigraphs(draw, max_vertices: int = 5, max_edges: int = 7, loops: bool = True):
    n = draw(st.integers(1, max_vertices))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(pair, max_size=max_edges))
    return Graph.from_edges(edges, range(n))


@st.composite
def simple_graphs(draw, max_vertices: int = 7):
    n = draw(st.integers(1, max_vertices))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(sorted(chosen), range(n))


small = settings(max_examples=60, deadline=None)


@small
@given(multigraphs())
def test_degree_sum_is_twice_edge_count(g):
    assert sum(g.degrees().values()) == 2 * g.m


@small
@given(multigraphs())
def test_md2_core_is_idempotent_and_keeps_zeta(g):
    core = md2_core(g)
    assert md2_core(core).same_as(core)
    assert all(d >= 2 for d in core.degrees().values())
    assert ihara_reciprocal(core) == ihara_reciprocal(g)


@small
@given(simple_graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)).same_as(g)


@small
@given(multigraphs(max_vertices=4, max_edges=5), multigraphs(max_vertices=4, max_edges=5))
def test_zeta_is_multiplicative_over_components(g, h):
    assert ihara_reciprocal(disjoint_union(g, h)) == ihara_reciprocal(g) * ihara_reciprocal(h)


@small
@given(multigraphs(loops=False))
def test_bass_identity(g):
    assert bass_reciprocal(g) == ihara_reciprocal(g)


@small
@given(multigraphs())
def test_signed_top_coefficient(g):
    assert ihara_reciprocal(g).coefficient(2 * g.m) == signed_top_coefficient(g)


@small
@given(multigraphs(), st.data())
def test_oracle_specialization_matches_subgraph(g, data):
    S = data.draw(st.lists(st.integers(0, max(g.m - 1, 0)), unique=True, max_size=g.m) if g.m else st.just([]))
    assert ZetaOracle(g).query(S) == ihara_reciprocal(edge_induced(g, S))


@small
@given(multigraphs(max_edges=6), st.permutations(range(5)))
def test_relabeling_preserves_zeta(g, perm):
    mapping = {v: perm[v] for v in g.vertices}
    h = Graph(tuple(sorted(mapping.values())), tuple((mapping[a], mapping[b]) for a, b in g.edges))
    assert are_isomorphic(g, h)
    assert ihara_reciprocal(h) == ihara_reciprocal(g)


@small
@given(multigraphs(max_vertices=4, max_edges=5))
def test_trace_formula(g):
    """u d/du log Z(u) = sum_L N_L u^L, with N_L the closed non-backtracking walk counts."""
    L = 6
    p = ihara_reciprocal(g)
    # -u p'(u) / p(u) as a power series
    dp = UniPoly([k * c for k, c in enumerate(p.coeffs)])
    num = [-c for c in dp.coeffs] + [0] * (L + 1)
    series = []
    for k in range(L + 1):
        acc = num[k] - sum(p.coefficient(i) * series[k - i] for i in range(1, k + 1))
        series.append(acc)
    assert series[1:] == closed_walk_counts(to_symmetric_digraph(g), L)


@small
@given(multigraphs(max_vertices=4, max_edges=5))
def test_prime_cycle_reversal_is_a_fixed_point_free_bijection(g):
    arcs = to_symmetric_digraph(g)
    cycles = set(enumerate_prime_cycles(arcs, 6))
    assert {c.reversed(arcs) for c in cycles} == cycles
    assert all(c.reversed(arcs) != c for c in cycles)


@small
@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=1, max_size=5), st.integers(-3, 3))
def test_berkowitz_matches_bareiss(rows, x):
    n = len(rows)
    M = [r[:n] for r in rows]
    expected = bareiss_det([[(1 if i == j else 0) - x * M[i][j] for j in range(n)] for i in range(n)])
    assert reverse_charpoly(M)(x) == expected


@small
@given(st.lists(st.integers(1, 4), max_size=4), st.lists(st.integers(1, 4), max_size=4))
def test_root_multiplicity_is_additive(a, b):
    def build(ks):
        out = UniPoly.constant(1)
        for k in ks:
            out = out * UniPoly((1, -k))
        return out

    r = Fraction(1, 2)
    p, q = build(a), build(b)
    assert root_multiplicity(p * q, r) == root_multiplicity(p, r) + root_multiplicity(q, r)


@small
@given(simple_graphs(max_vertices=9))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)).same_as(g)
