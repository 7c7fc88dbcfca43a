from __future__ import annotations

from collections import Counter

import pytest

from edgezeta.cycles import (
    EnumerationBudgetExceeded,
    PrimeCycle,
    are_isomorphic,
    brute_census,
    brute_chromatic_number,
    brute_clique_number,
    brute_count_edge_induced,
    brute_count_vertex_induced,
    brute_hamiltonian_count,
    canonical_rotation,
    closed_walk_counts,
    enumerate_prime_cycles,
    euler_product_from_counts,
    euler_product_series,
    euler_truncation_check,
    find_isomorphism,
    g_monomial,
    is_bipartite,
    is_chordal_lexbfs,
    is_perfect_by_colouring,
    is_primitive,
    is_prime_cycle,
    multivariate_euler_check,
    prime_cycle_counts_from_walks,
)
from edgezeta.fixtures import load_fixture
from edgezeta.graph import (
    Graph,
    bouquet,
    complete_bipartite,
    complete_graph,
    cycle_complement,
    cycle_graph,
    path_graph,
    petersen_graph,
    to_symmetric_digraph,
)
from edgezeta.zeta import directed_edge_matrix


def _arc(name: str) -> int:
    """``a3`` -> arc 4, ``b3`` -> arc 5."""
    return 2 * (int(name[1:]) - 1) + (name[0] == "b")


FIRST = "a1 a2 b5 a1 a2 b5 b4 b3 b5 b4 b3 b5".split()
SECOND = "a1 a2 b5 b4 b3 b5 b4 b3 b5 a1 a2 b5".split()


def test_triangle_has_two_prime_cycles():
    cycles = enumerate_prime_cycles(to_symmetric_digraph(cycle_graph(3)), 10)
    assert [c.length for c in cycles] == [3, 3]


def test_tree_has_no_prime_cycles():
    assert enumerate_prime_cycles(to_symmetric_digraph(path_graph(5)), 8) == []


def test_loop_gives_two_prime_cycles_of_length_one():
    cycles = enumerate_prime_cycles(to_symmetric_digraph(bouquet(1)), 3)
    assert [c.arcs for c in cycles] == [(0,), (1,)]


def test_max_length_must_be_positive():
    with pytest.raises(ValueError):
        enumerate_prime_cycles(to_symmetric_digraph(cycle_graph(3)), 0)


def test_budget():
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_prime_cycles(to_symmetric_digraph(complete_graph(5)), 12, budget=100)


def test_k4_minus_edge_example_cycle_and_monomial():
    arcs = to_symmetric_digraph(load_fixture("k4_minus_edge"))
    first = tuple(_arc(a) for a in FIRST)
    second = tuple(_arc(a) for a in SECOND)
    assert is_prime_cycle(first, arcs) and is_prime_cycle(second, arcs)
    assert canonical_rotation(first) == canonical_rotation(second)
    expected = Counter({_arc("a1"): 2, _arc("a2"): 2, _arc("b5"): 4, _arc("b4"): 2, _arc("b3"): 2})
    assert g_monomial(PrimeCycle(canonical_rotation(first))) == expected
    assert g_monomial(PrimeCycle(first)) == g_monomial(PrimeCycle(second))
    listed = {c.arcs for c in enumerate_prime_cycles(arcs, 12)}
    assert canonical_rotation(first) in listed


def test_triangle_monomial_uses_three_variables_once():
    (c, _) = enumerate_prime_cycles(to_symmetric_digraph(cycle_graph(3)), 3)
    assert sorted(g_monomial(c, 6)) == [0, 0, 0, 1, 1, 1]


def test_prime_cycle_rules():
    arcs = to_symmetric_digraph(cycle_graph(3))
    assert not is_prime_cycle((0, 1), arcs)  # backtracking
    assert not is_prime_cycle((0, 2, 4, 0, 2, 4), arcs)  # a multiple
    assert not is_prime_cycle((0, 2), arcs)  # not closed
    assert is_prime_cycle((0, 2, 4), arcs)
    assert not is_primitive((1, 2, 1, 2))


def test_reversal_is_a_bijection():
    arcs = to_symmetric_digraph(load_fixture("k4_minus_edge"))
    cycles = set(enumerate_prime_cycles(arcs, 8))
    reversed_ = {c.reversed(arcs) for c in cycles}
    assert reversed_ == cycles
    assert all(c.reversed(arcs) != c for c in cycles)


@pytest.mark.parametrize(
    "g", [cycle_graph(4), complete_graph(4), petersen_graph(), load_fixture("k4_minus_edge"), bouquet(2)],
    ids=["C4", "K4", "Petersen", "k4_minus_edge", "bouquet2"],
)
def test_walk_counts_match_enumeration(g):
    arcs = to_symmetric_digraph(g)
    listed = Counter(c.length for c in enumerate_prime_cycles(arcs, 10))
    assert prime_cycle_counts_from_walks(arcs, 10) == dict(listed)


def test_closed_walks_equal_trace_of_powers():
    arcs = to_symmetric_digraph(load_fixture("k4_minus_edge"))
    T = directed_edge_matrix(arcs).dense()
    n = len(T)
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    traces = []
    for _ in range(8):
        P = [[sum(P[i][k] * T[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        traces.append(sum(P[i][i] for i in range(n)))
    assert closed_walk_counts(arcs, 8) == traces


def test_euler_product_helpers_agree():
    lengths = [1, 1, 2, 3, 3, 3]
    assert euler_product_series(lengths, 9) == euler_product_from_counts(Counter(lengths), 9)


@pytest.mark.parametrize(
    "name,g",
    [("C3", cycle_graph(3)), ("loop", bouquet(1)), ("K4", complete_graph(4)), ("Petersen", petersen_graph()),
     ("multiloop_a", load_fixture("multiloop_a"))],
)
def test_euler_truncation(name, g):
    assert euler_truncation_check(g, 12).ok


def test_euler_check_reports_method():
    assert euler_truncation_check(cycle_graph(4), 6).method == "enumeration"
    assert euler_truncation_check(bouquet(4), 12).method == "closed-walk count"


def test_multivariate_euler():
    assert multivariate_euler_check(to_symmetric_digraph(cycle_graph(3)), 7)
    assert multivariate_euler_check(to_symmetric_digraph(bouquet(1)), 4)
    assert multivariate_euler_check(to_symmetric_digraph(load_fixture("k4_minus_edge")), 6)


def test_isomorphism():
    prism = Graph.from_edges([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    assert are_isomorphic(cycle_complement(6), prism)
    assert are_isomorphic(cycle_complement(5), cycle_graph(5))
    assert not are_isomorphic(cycle_graph(6), prism)
    phi = find_isomorphism(cycle_graph(5), cycle_complement(5))
    assert phi is not None and sorted(phi) == list(range(5))


def test_isomorphism_of_multigraphs():
    a = Graph.from_edges([(0, 1), (0, 1), (1, 1)])
    b = Graph.from_edges([(1, 0), (0, 0), (0, 1)])
    c = Graph.from_edges([(0, 1), (1, 1), (1, 1)])
    assert are_isomorphic(a, b)
    assert not are_isomorphic(a, c)


def test_brute_counts():
    k4 = complete_graph(4)
    assert brute_count_edge_induced(k4, cycle_graph(4)) == 3
    assert brute_count_vertex_induced(k4, cycle_graph(4)) == 0
    assert brute_count_edge_induced(k4, cycle_graph(3)) == 4
    assert brute_count_vertex_induced(k4, cycle_graph(3)) == 4
    assert brute_count_edge_induced(complete_graph(7), cycle_complement(7)) == 360


def test_brute_invariants():
    assert brute_clique_number(petersen_graph()) == 2
    assert brute_clique_number(complete_graph(5)) == 5
    assert brute_hamiltonian_count(complete_graph(5)) == 12
    assert brute_hamiltonian_count(petersen_graph()) == 0
    assert is_bipartite(complete_bipartite(2, 3)) and not is_bipartite(cycle_graph(5))
    assert brute_chromatic_number(petersen_graph()) == 3
    assert brute_chromatic_number(cycle_graph(7)) == 3


def test_chordality_and_perfection():
    assert is_chordal_lexbfs(complete_graph(4))
    assert not is_chordal_lexbfs(cycle_graph(4))
    fan = Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    assert is_chordal_lexbfs(fan)
    assert not is_perfect_by_colouring(cycle_graph(5))
    assert is_perfect_by_colouring(cycle_graph(6))
    census = brute_census(cycle_complement(7))
    assert census.antiholes[7] == 1 and not census.perfect()
