from __future__ import annotations

import pytest

from edgezeta.counting import (
    C,
    Census,
    Cbar,
    Family,
    K,
    Target,
    analyze_oracle,
    clique_number,
    count_edge_induced,
    count_vertex_induced,
    default_targets,
    edge_induced_copies,
    hamiltonian_count,
    hole_antihole_census,
    is_chordal,
    is_chordal_excluding_c4,
    is_perfect,
    regular_candidates,
)
from edgezeta.cycles import brute_count_edge_induced, brute_count_vertex_induced
from edgezeta.fixtures import load_fixture
from edgezeta.graph import (
    Graph,
    complete_graph,
    cycle_complement,
    cycle_graph,
    petersen_graph,
)
from edgezeta.zeta import ZetaOracle, ihara_reciprocal


def test_target_parsing():
    assert Target.parse("K4") == K(4)
    assert Target.parse("c6") == C(6)
    assert Target.parse("Cbar7") == Cbar(7)
    assert Cbar(7).family is Family.CYCLE_COMPLEMENT
    with pytest.raises(ValueError):
        Target.parse("P5")
    with pytest.raises(ValueError):
        Cbar(4)


def test_target_shape():
    assert (K(4).degree, K(4).edge_count) == (3, 6)
    assert (C(6).degree, C(6).edge_count) == (2, 6)
    assert (Cbar(7).degree, Cbar(7).edge_count) == (4, 14)
    assert Cbar(6).reference_poly == ihara_reciprocal(cycle_complement(6))


def test_candidates_are_simple_regular_subsets():
    oracle = ZetaOracle(complete_graph(4))
    assert len(list(regular_candidates(oracle, 2, 4, 4))) == 3
    assert len(list(regular_candidates(oracle, 2, 3, 3))) == 4


def test_k4_counts():
    oracle = ZetaOracle(complete_graph(4))
    assert count_edge_induced(oracle, C(4)) == 3
    assert count_vertex_induced(oracle, C(4)) == 0
    assert count_vertex_induced(oracle, K(3)) == 4
    assert count_vertex_induced(oracle, K(4)) == 1


def test_clique_number_and_ham():
    assert clique_number(ZetaOracle(complete_graph(5))) == 5
    assert clique_number(ZetaOracle(petersen_graph())) == 2
    assert hamiltonian_count(ZetaOracle(complete_graph(5)), 5) == 12
    assert hamiltonian_count(ZetaOracle(petersen_graph()), 10) == 0


def test_k7_contains_360_cycle_complements():
    assert count_edge_induced(ZetaOracle(complete_graph(7)), Cbar(7)) == 360


def test_counts_ignore_multigraph_decorations():
    # a triangle with a doubled side and a loop: copies of C3 use either parallel edge
    g = Graph.from_edges([(0, 1), (1, 2), (2, 0), (0, 1), (2, 2)])
    oracle = ZetaOracle(g)
    assert count_edge_induced(oracle, C(3)) == brute_count_edge_induced(g, cycle_graph(3)) == 2


def test_census_flags():
    c5 = Census({4: 0, 5: 1}, {5: 1})
    assert not is_perfect(c5)
    assert not is_chordal(c5)
    c4 = Census({4: 1}, {})
    assert not is_chordal(c4) and is_chordal_excluding_c4(c4)
    assert is_perfect(c4)


def test_hole_census_of_cycles():
    census = hole_antihole_census(ZetaOracle(cycle_graph(6)), 6)
    assert census.holes == {4: 0, 5: 0, 6: 1}
    assert census.antiholes == {5: 0, 6: 0}


def test_samezeta_full_analysis():
    x, y = load_fixture("samezeta_x"), load_fixture("samezeta_y")
    rx = analyze_oracle(ZetaOracle(x), x.n)
    ry = analyze_oracle(ZetaOracle(y), y.n)
    assert (rx.omega, rx.ham, rx.holes[6], rx.holes[7]) == (3, 0, 0, 0)
    assert (ry.omega, ry.ham, ry.holes[6], ry.holes[7]) == (3, 1, 1, 1)
    for g, r in ((x, rx), (y, ry)):
        for name in ("C6", "C7", "C8"):
            W = Target.parse(name).graph()
            assert r.s_v[name] == brute_count_vertex_induced(g, W)
            assert r.s_e[name] == brute_count_edge_induced(g, W)


def test_threads_do_not_change_results():
    oracle = ZetaOracle(load_fixture("samezeta_y"))
    single = edge_induced_copies(oracle, C(6), workers=1)
    assert edge_induced_copies(oracle, C(6), workers=4) == single
    assert analyze_oracle(oracle, 10, workers=3).to_dict() == analyze_oracle(oracle, 10).to_dict()


def test_partial_census_leaves_global_flags_unknown():
    r = analyze_oracle(ZetaOracle(load_fixture("samezeta_x")), 10, max_cycle=6)
    assert set(r.holes) == {4, 5, 6}
    assert r.ham is None and r.chordal is None and r.perfect is None


def test_explicit_targets_only():
    r = analyze_oracle(ZetaOracle(complete_graph(4)), 4, targets=[K(3), C(4)])
    assert r.s_e == {"K3": 4, "C4": 3}
    assert r.s_v == {"K3": 4, "C4": 0}
    assert r.omega is None


def test_default_targets_fit_the_host():
    names = [t.name for t in default_targets(5, 5)]
    assert names == ["K3", "C4", "C5", "Cbar5"]


def test_report_serializes():
    d = analyze_oracle(ZetaOracle(cycle_graph(5)), 5).to_dict()
    assert d["perfect"] is False
    assert d["holes"] == {"4": 0, "5": 1}
    assert "s_e" in d["provenance"]


def test_eight_vertex_hosts_agree_with_brute_force():
    import random

    from edgezeta.graph import md2_core

    rng = random.Random(5)
    checked = 0
    while checked < 12:
        edges = [(i, j) for i in range(8) for j in range(i + 1, 8) if rng.random() < 0.4]
        g = md2_core(Graph.from_edges(edges, range(8)))
        if g.n != 8:
            continue
        checked += 1
        oracle = ZetaOracle(g)
        for t in (K(3), K(4), C(5), C(8), Cbar(6)):
            W = t.graph()
            assert count_edge_induced(oracle, t) == brute_count_edge_induced(g, W)
            assert count_vertex_induced(oracle, t) == brute_count_vertex_induced(g, W)


def test_cliques_edge_and_vertex_induced_counts_coincide():
    for g in (complete_graph(5), load_fixture("samezeta_y"), petersen_graph()):
        oracle = ZetaOracle(g)
        for r in (3, 4):
            assert count_edge_induced(oracle, K(r)) == count_vertex_induced(oracle, K(r))
