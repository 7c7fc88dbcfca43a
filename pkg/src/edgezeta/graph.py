"""Finite multigraphs and their symmetric digraphs.

Vertices and edges are dense integer ids.  Loops ``{v, v}`` and parallel
edges are allowed; every edge keeps its own id and nothing is deduplicated.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or unsupported graph operations."""


@dataclass(frozen=True)
class Graph:
    """Finite multigraph with stable vertex and edge ids.

    ``edges[j]`` is the edge with id ``j``; the stored order of its endpoints
    fixes the orientation of its first arc in :func:`to_symmetric_digraph`.
    ``labels`` optionally maps vertex ids back to input labels.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    labels: dict[int, str] | None = field(default=None, compare=False, hash=False)

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        es = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        vset = set(vs)
        if len(vset) != len(vs):
            raise GraphError("duplicate vertex ids")
        for j, (u, v) in enumerate(es):
            if u not in vset or v not in vset:
                raise GraphError(f"edge {j} = {{{u}, {v}}} has an undeclared endpoint")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] | None = None) -> Graph:
        edges = [tuple(e) for e in edges]
        if vertices is None:
            seen: dict[int, None] = {}
            for u, v in edges:
                seen.setdefault(u)
                seen.setdefault(v)
            vertices = sorted(seen)
        return cls(tuple(vertices), tuple(edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> dict[int, int]:
        """Vertex degrees; a loop counts twice."""
        deg = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree(self, v: int) -> int:
        return self.degrees()[v]

    def is_simple(self) -> bool:
        keys = [frozenset(e) for e in self.edges]
        return all(len(k) == 2 for k in keys) and len(set(keys)) == len(keys)

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def edge_multiset(self) -> Counter:
        """Edges as a multiset of unordered pairs (orientation forgotten)."""
        return Counter(tuple(sorted(e)) for e in self.edges)

    def same_as(self, other: Graph) -> bool:
        """Equal vertex sets and equal edge multisets, ignoring edge ids."""
        return set(self.vertices) == set(other.vertices) and self.edge_multiset() == other.edge_multiset()

    def adjacency(self) -> dict[int, Counter]:
        """``adj[u][v]`` = number of edges joining u and v (loops count 2 at ``adj[v][v]``)."""
        adj: dict[int, Counter] = {v: Counter() for v in self.vertices}
        for u, v in self.edges:
            adj[u][v] += 1
            adj[v][u] += 1
        return adj

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        parent = {v: v for v in self.vertices}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[int, list[int]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def relabeled(self) -> Graph:
        """Copy with vertices renumbered 0..n-1 in current order (edge ids kept)."""
        index = {v: i for i, v in enumerate(self.vertices)}
        labels = None
        if self.labels is not None:
            labels = {index[v]: lab for v, lab in self.labels.items() if v in index}
        return Graph(tuple(range(self.n)), tuple((index[u], index[v]) for u, v in self.edges), labels)

    def label(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)


@dataclass(frozen=True)
class ArcList:
    """Symmetric digraph D(X): arcs ``2j`` and ``2j + 1`` are the two orientations of edge ``j``."""

    arcs: tuple[tuple[int, int, int], ...]
    inv: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.arcs)

    def origin(self, a: int) -> int:
        return self.arcs[a][0]

    def terminus(self, a: int) -> int:
        return self.arcs[a][1]

    def edge_of(self, a: int) -> int:
        return self.arcs[a][2]

    @property
    def m(self) -> int:
        return len(self.arcs) // 2


def to_symmetric_digraph(g: Graph) -> ArcList:
    """Build D(X).  A loop gives two distinct, mutually inverse arcs ``(v, v)``."""
    arcs: list[tuple[int, int, int]] = []
    for j, (u, v) in enumerate(g.edges):
        arcs.append((u, v, j))
        arcs.append((v, u, j))
    inv = tuple(a ^ 1 for a in range(len(arcs)))
    return ArcList(tuple(arcs), inv)


def md2_core(g: Graph) -> Graph:
    """Repeatedly strip degree-1 vertices with their edge, then drop isolated vertices.

    Isolated vertices carry no cycles, so the result is empty or has minimum
    degree at least 2.  Vertex ids are preserved; surviving edges are
    renumbered in their original order.
    """
    alive = [True] * g.m
    deg = g.degrees()
    incident: dict[int, list[int]] = {v: [] for v in g.vertices}
    for j, (u, v) in enumerate(g.edges):
        incident[u].append(j)
        if u != v:
            incident[v].append(j)
    stack = [v for v in g.vertices if deg[v] == 1]
    while stack:
        v = stack.pop()
        if deg[v] != 1:
            continue
        j = next(j for j in incident[v] if alive[j])
        alive[j] = False
        u, w = g.edges[j]
        other = w if u == v else u
        deg[v] -= 1
        deg[other] -= 1
        if deg[other] == 1:
            stack.append(other)
    edges = tuple(e for j, e in enumerate(g.edges) if alive[j])
    vertices = tuple(v for v in g.vertices if deg[v] >= 2)
    return Graph(vertices, edges, g.labels)


def complement(g: Graph) -> Graph:
    if not g.is_simple():
        raise GraphError("complement requires a simple graph")
    present = {frozenset(e) for e in g.edges}
    edges = tuple(
        (u, v) for u, v in combinations(g.vertices, 2) if frozenset((u, v)) not in present
    )
    return Graph(g.vertices, edges, g.labels)


def edge_induced(g: Graph, edge_ids: Iterable[int]) -> Graph:
    """Subgraph on the edges ``edge_ids`` and their endpoints; edges renumbered by id order."""
    ids = sorted(set(edge_ids))
    for j in ids:
        if not 0 <= j < g.m:
            raise GraphError(f"edge id {j} out of range")
    edges = tuple(g.edges[j] for j in ids)
    touched = {x for e in edges for x in e}
    vertices = tuple(v for v in g.vertices if v in touched)
    return Graph(vertices, edges, g.labels)


def vertex_induced(g: Graph, vertex_set: Iterable[int]) -> Graph:
    s = set(vertex_set)
    missing = s - set(g.vertices)
    if missing:
        raise GraphError(f"unknown vertices {sorted(missing)}")
    vertices = tuple(v for v in g.vertices if v in s)
    edges = tuple((u, v) for u, v in g.edges if u in s and v in s)
    return Graph(vertices, edges, g.labels)


def disjoint_union(*graphs: Graph) -> Graph:
    """Vertices of later graphs are shifted past those of earlier ones."""
    vertices: list[int] = []
    edges: list[tuple[int, int]] = []
    offset = 0
    for h in graphs:
        index = {v: offset + i for i, v in enumerate(h.vertices)}
        vertices.extend(index.values())
        edges.extend((index[u], index[v]) for u, v in h.edges)
        offset += h.n
    return Graph(tuple(vertices), tuple(edges))


# ---------------------------------------------------------------------------
# standard families
# ---------------------------------------------------------------------------

def cycle_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("cycle needs at least one vertex")
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], range(n))


def path_graph(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], range(n))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(combinations(range(n), 2), range(n))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges([(i, p + j) for i in range(p) for j in range(q)], range(p + q))


def empty_graph(n: int) -> Graph:
    return Graph(tuple(range(n)), ())


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(outer + spokes + inner, range(10))


def cycle_complement(n: int) -> Graph:
    return complement(cycle_graph(n))


def bouquet(loops: int, vertex: int = 0) -> Graph:
    """One vertex carrying ``loops`` loops."""
    return Graph((vertex,), tuple((vertex, vertex) for _ in range(loops)))


def graph_from_adjacency(rows: Sequence[Sequence[int]]) -> Graph:
    """Simple graph from a symmetric 0/1 matrix (upper triangle is read)."""
    n = len(rows)
    return Graph.from_edges(
        [(i, j) for i in range(n) for j in range(i + 1, n) if rows[i][j]], range(n)
    )
