"""Graph batteries shared by the test modules."""

from __future__ import annotations

import random
from functools import lru_cache

from edgezeta.fixtures import load_fixture
from edgezeta.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    md2_core,
    petersen_graph,
)

# filled by the acceptance tests and printed at the end of the session
ACCEPTANCE_LINES: list[str] = []


def random_simple_md2(rng: random.Random, max_vertices: int = 10) -> Graph:
    """A random simple graph cut down to its minimum-degree-2 core (never empty)."""
    while True:
        n = rng.randint(4, max_vertices)
        p = rng.uniform(0.25, 0.5)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        core = md2_core(Graph.from_edges(edges, range(n)))
        if core.m >= 3:
            return core


def random_md2_multigraph(rng: random.Random, max_vertices: int = 6, max_edges: int = 9) -> Graph:
    """Loops and parallel edges allowed; returns the md2 core (never empty)."""
    while True:
        n = rng.randint(1, max_vertices)
        m = rng.randint(1, max_edges)
        edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
        core = md2_core(Graph.from_edges(edges, range(n)))
        if core.m:
            return core


@lru_cache(maxsize=None)
def standard_battery() -> tuple[tuple[str, Graph], ...]:
    out: list[tuple[str, Graph]] = [(f"C{k}", cycle_graph(k)) for k in range(3, 9)]
    out += [
        ("K4", complete_graph(4)),
        ("K5", complete_graph(5)),
        ("K33", complete_bipartite(3, 3)),
        ("Petersen", petersen_graph()),
    ]
    out += [(name, load_fixture(name)) for name in ("k4_minus_edge", "multiloop_a", "multiloop_b", "samezeta_x", "samezeta_y")]
    rng = random.Random(20240611)
    out += [(f"random_md2_{i}", random_simple_md2(rng)) for i in range(10)]
    out += [(f"random_multi_{i}", random_md2_multigraph(rng)) for i in range(3)]
    return tuple(out)


@lru_cache(maxsize=None)
def atlas_md2_graphs() -> tuple[Graph, ...]:
    """Every simple graph on at most 7 vertices with minimum degree >= 2, from the graph atlas."""
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() < 3 or min(d for _, d in h.degree()) < 2:
            continue
        out.append(Graph.from_edges(sorted(tuple(sorted(e)) for e in h.edges()), range(h.number_of_nodes())))
    return tuple(out)
