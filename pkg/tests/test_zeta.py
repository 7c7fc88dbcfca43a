from __future__ import annotations

import pytest

from edgezeta.fixtures import load_fixture
from edgezeta.graph import (
    Graph,
    GraphError,
    bouquet,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    edge_induced,
    path_graph,
    petersen_graph,
    to_symmetric_digraph,
)
from edgezeta.poly import MultiPoly, ScaleCapExceeded, UniPoly
from edgezeta.zeta import (
    ZetaOracle,
    arc_variable_names,
    bass_reciprocal,
    directed_edge_matrix,
    edge_zeta_reciprocal,
    ihara_reciprocal,
    signed_top_coefficient,
    specialize,
    top_coefficient_formula,
)

u = UniPoly.monomial(1)
ONE = UniPoly.constant(1)


def test_directed_edge_matrix_of_triangle():
    T = directed_edge_matrix(to_symmetric_digraph(cycle_graph(3)))
    # arc 0 = 0->1 continues to arc 2 = 1->2 only; backtracking onto arc 1 is excluded
    assert T.successors[0] == (2,)
    assert T.nnz() == 6


def test_loop_arc_follows_itself_but_not_its_inverse():
    T = directed_edge_matrix(to_symmetric_digraph(bouquet(1)))
    assert T.successors == ((0,), (1,))


def test_triangle():
    assert ihara_reciprocal(cycle_graph(3)).coeffs == (1, 0, 0, -2, 0, 0, 1)


def test_cycle_is_square_of_one_minus_u_to_the_n():
    assert ihara_reciprocal(cycle_graph(5)) == (ONE - u ** 5) ** 2


def test_tree_is_one():
    assert ihara_reciprocal(path_graph(6)) == 1


def test_single_loop():
    assert ihara_reciprocal(bouquet(1)) == (ONE - u) ** 2


def test_k4_factorization():
    expected = (ONE - u * u) ** 2 * (ONE - u) * (ONE - 2 * u) * (ONE + u + 2 * u * u) ** 3
    assert ihara_reciprocal(complete_graph(4)) == expected


def test_k4_minus_edge_polynomial():
    p = ihara_reciprocal(load_fixture("k4_minus_edge"))
    assert p.coeffs == (1, 0, 0, -4, -2, 0, 4, 4, 1, 0, -4)


def test_bass_agrees_on_standard_graphs():
    for g in (complete_graph(4), complete_bipartite(3, 3), petersen_graph(), load_fixture("k4_minus_edge")):
        assert bass_reciprocal(g) == ihara_reciprocal(g)


def test_bass_handles_parallel_edges_and_trees():
    g = Graph.from_edges([(0, 1), (0, 1), (1, 2), (2, 0)])
    assert bass_reciprocal(g) == ihara_reciprocal(g)
    # m < n: the (1 - u^2) power is divided out
    assert bass_reciprocal(path_graph(4)) == 1


def test_bass_rejects_loops():
    with pytest.raises(GraphError, match="unsupported for Bass"):
        bass_reciprocal(bouquet(2))


def test_oracle_full_and_subsets():
    g = load_fixture("k4_minus_edge")
    oracle = ZetaOracle(g)
    assert oracle.m == 5
    assert oracle.full() == ihara_reciprocal(g)
    assert oracle.query([]) == 1
    assert specialize(oracle, [0, 1, 4]) == ihara_reciprocal(cycle_graph(3))
    with pytest.raises(IndexError):
        oracle.query([5])


def test_oracle_endpoints_expose_arc_pairing():
    oracle = ZetaOracle(cycle_graph(4))
    assert [oracle.endpoints(j) for j in oracle.edge_pairs] == [(0, 1), (1, 2), (2, 3), (3, 0)]


def test_oracle_memoizes_blocks():
    oracle = ZetaOracle(complete_graph(4))
    oracle.full()
    before = oracle.stats["blocks_computed"]
    oracle.full()
    assert oracle.stats["blocks_computed"] == before


def test_restricted_oracle_renumbers_edge_pairs():
    g = complete_graph(4)
    oracle = ZetaOracle(g)
    sub = oracle.restrict([0, 1, 3])  # triangle 0-1-2
    assert sub.m == 3
    assert sub.full() == ihara_reciprocal(edge_induced(g, [0, 1, 3]))
    assert sub.query([0, 1]) == 1


def test_oracle_on_multigraph_subsets():
    g = load_fixture("multiloop_a")
    oracle = ZetaOracle(g)
    for S in ([0], [0, 1], [8, 9], [0, 4, 8], list(range(11))):
        assert oracle.query(S) == ihara_reciprocal(edge_induced(g, S))


def test_edge_zeta_of_triangle():
    arcs = to_symmetric_digraph(cycle_graph(3))
    Z = edge_zeta_reciprocal(arcs)
    names = arc_variable_names(arcs)
    assert names == ["a1", "b1", "a2", "b2", "a3", "b3"]
    x = [MultiPoly.variable(6, i) for i in range(6)]
    one = MultiPoly.constant(6, 1)
    forward = x[0] * x[2] * x[4]
    backward = x[1] * x[3] * x[5]
    assert Z == one - forward - backward + forward * backward


def test_edge_zeta_specializes_to_ihara():
    for g in (load_fixture("k4_minus_edge"), bouquet(2), Graph.from_edges([(0, 1), (0, 1)])):
        arcs = to_symmetric_digraph(g)
        assert edge_zeta_reciprocal(arcs).specialize() == ihara_reciprocal(g)


def test_edge_zeta_cap():
    with pytest.raises(ScaleCapExceeded):
        edge_zeta_reciprocal(to_symmetric_digraph(complete_graph(4)), cap=11)


def test_top_coefficients():
    assert top_coefficient_formula(complete_graph(4)) == 16
    assert signed_top_coefficient(complete_graph(4)) == 16
    g = load_fixture("k4_minus_edge")
    assert top_coefficient_formula(g) == 4
    assert signed_top_coefficient(g) == -4 == ihara_reciprocal(g).coefficient(10)
