"""Counting spectrally determined regular subgraphs from zeta data alone.

A k-regular target W that is determined by its adjacency spectrum is
recognised inside the host by its reciprocal Ihara polynomial: an edge-pair
subset S of size |E(W)| whose specialization equals W's reciprocal (and
passes the regularity gate) spans a copy of W.  It is a vertex-induced copy
when adding any other edge pair leaves the specialization unchanged.

The only graph-side information used is the arc/inverse-arc pairing the
oracle declares (endpoints of each edge pair), and only to skip subsets
whose local degree pattern can never be k-regular.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

from .graph import Graph, complete_graph, cycle_complement, cycle_graph
from .poly import UniPoly
from .structure import classify_regularity
from .zeta import ZetaOracle, ihara_reciprocal


class Family(str, Enum):
    COMPLETE = "K"
    CYCLE = "C"
    CYCLE_COMPLEMENT = "Cbar"


@dataclass(frozen=True)
class Target:
    family: Family
    size: int

    def __post_init__(self) -> None:
        low = {Family.COMPLETE: 3, Family.CYCLE: 3, Family.CYCLE_COMPLEMENT: 5}[self.family]
        if self.size < low:
            raise ValueError(f"{self.family.value}{self.size}: size must be >= {low}")

    @classmethod
    def parse(cls, text: str) -> Target:
        """``K4``, ``C6``, ``Cbar7`` (case-insensitive)."""
        t = text.strip()
        low = t.lower()
        for fam, prefix in ((Family.CYCLE_COMPLEMENT, "cbar"), (Family.COMPLETE, "k"), (Family.CYCLE, "c")):
            if low.startswith(prefix) and low[len(prefix):].isdigit():
                return cls(fam, int(low[len(prefix):]))
        raise ValueError(f"unknown target {text!r}; expected K<r>, C<k> or Cbar<k>")

    @property
    def name(self) -> str:
        return f"{self.family.value}{self.size}"

    def graph(self) -> Graph:
        if self.family is Family.COMPLETE:
            return complete_graph(self.size)
        if self.family is Family.CYCLE:
            return cycle_graph(self.size)
        return cycle_complement(self.size)

    @property
    def vertex_count(self) -> int:
        return self.size

    @property
    def degree(self) -> int:
        if self.family is Family.COMPLETE:
            return self.size - 1
        if self.family is Family.CYCLE:
            return 2
        return self.size - 3

    @property
    def edge_count(self) -> int:
        return self.vertex_count * self.degree // 2

    @property
    def reference_poly(self) -> UniPoly:
        return reference_zeta(self)


def K(r: int) -> Target:
    return Target(Family.COMPLETE, r)


def C(k: int) -> Target:
    return Target(Family.CYCLE, k)


def Cbar(k: int) -> Target:
    return Target(Family.CYCLE_COMPLEMENT, k)


@lru_cache(maxsize=None)
def reference_zeta(t: Target) -> UniPoly:
    """Reciprocal Ihara polynomial of a constructed instance of the target."""
    return ihara_reciprocal(t.graph())


# ---------------------------------------------------------------------------
# candidate subsets
# ---------------------------------------------------------------------------

def regular_candidates(oracle: ZetaOracle, k: int, n_vertices: int, n_edges: int) -> Iterator[tuple[int, ...]]:
    """Edge-pair subsets that form a simple k-regular graph on ``n_vertices`` vertices.

    Backtracking over edge pairs in index order with degree caps and a
    remaining-incidence feasibility test.  Loops and repeated vertex pairs
    are skipped since every target is simple.
    """
    ends = [oracle.endpoints(j) for j in oracle.edge_pairs]
    usable = [j for j in oracle.edge_pairs if ends[j][0] != ends[j][1]]
    if len(usable) < n_edges:
        return
    left: dict[int, int] = {}
    for j in usable:
        for x in ends[j]:
            left[x] = left.get(x, 0) + 1
    deg: dict[int, int] = {}
    pairs: set[frozenset[int]] = set()
    chosen: list[int] = []
    N = len(usable)

    def feasible(x: int) -> bool:
        d = deg.get(x, 0)
        return d == 0 or d + left[x] >= k

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == n_edges:
            if len(deg) == n_vertices and all(d == k for d in deg.values()):
                yield tuple(chosen)
            return
        if N - pos < n_edges - len(chosen):
            return
        j = usable[pos]
        u, v = ends[j]
        left[u] -= 1
        left[v] -= 1
        key = frozenset((u, v))
        new = (u not in deg) + (v not in deg)
        if (
            deg.get(u, 0) < k
            and deg.get(v, 0) < k
            and key not in pairs
            and len(deg) + new <= n_vertices
        ):
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
            pairs.add(key)
            chosen.append(j)
            if feasible(u) and feasible(v):
                yield from rec(pos + 1)
            chosen.pop()
            pairs.discard(key)
            for x in (u, v):
                deg[x] -= 1
                if deg[x] == 0:
                    del deg[x]
        if feasible(u) and feasible(v):
            yield from rec(pos + 1)
        left[u] += 1
        left[v] += 1

    yield from rec(0)


def _chunks(items: Sequence, parts: int) -> list[Sequence]:
    size = max(1, -(-len(items) // max(parts, 1)))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _parallel_filter(pred, items: Sequence, workers: int) -> list:
    """Order-preserving filter; workers only change wall time, never the result."""
    if workers <= 1 or len(items) < 2:
        return [x for x in items if pred(x)]
    chunks = _chunks(items, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda ch: [x for x in ch if pred(x)], chunks))
    return [x for part in parts for x in part]


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

def _passes_gate(oracle: ZetaOracle, S: tuple[int, ...], t: Target) -> bool:
    return classify_regularity(oracle.restrict(S)).is_regular(t.degree)


def edge_induced_copies(oracle: ZetaOracle, t: Target, workers: int = 1) -> list[tuple[int, ...]]:
    """Edge-pair subsets whose specialization identifies a copy of ``t``.

    The polynomial comparison runs first; the regularity gate is applied to
    the matches.  Either order gives the same set.
    """
    if t.edge_count > oracle.m:
        return []
    ref = reference_zeta(t)
    cands = list(regular_candidates(oracle, t.degree, t.vertex_count, t.edge_count))
    return _parallel_filter(lambda S: oracle.query(S) == ref and _passes_gate(oracle, S, t), cands, workers)


def _is_vertex_induced(oracle: ZetaOracle, S: tuple[int, ...]) -> bool:
    base = oracle.query(S)
    inside = set(S)
    for e in oracle.edge_pairs:
        if e not in inside and oracle.query(S + (e,)) != base:
            return False
    return True


def vertex_induced_copies(
    oracle: ZetaOracle, t: Target, workers: int = 1, copies: Sequence[tuple[int, ...]] | None = None
) -> list[tuple[int, ...]]:
    if copies is None:
        copies = edge_induced_copies(oracle, t, workers)
    return _parallel_filter(lambda S: _is_vertex_induced(oracle, S), list(copies), workers)


def count_edge_induced(oracle: ZetaOracle, t: Target, workers: int = 1) -> int:
    return len(edge_induced_copies(oracle, t, workers))


def count_vertex_induced(oracle: ZetaOracle, t: Target, workers: int = 1) -> int:
    return len(vertex_induced_copies(oracle, t, workers))


def clique_number(oracle: ZetaOracle, workers: int = 1) -> int:
    """Largest r with a K_r; 2 when there is no triangle (at least one edge assumed)."""
    if oracle.m == 0:
        raise ValueError("clique number needs at least one edge")
    best = 2
    r = 3
    while comb(r, 2) <= oracle.m:
        if count_vertex_induced(oracle, K(r), workers) == 0:
            break
        best = r
        r += 1
    return best


def hamiltonian_count(oracle: ZetaOracle, n: int, workers: int = 1) -> int:
    """Spanning cycles; ``n`` is the vertex count, which the zeta function does not fix."""
    if n < 3:
        return 0
    return count_edge_induced(oracle, C(n), workers)


@dataclass(frozen=True)
class Census:
    holes: dict[int, int]
    antiholes: dict[int, int]


def hole_antihole_census(oracle: ZetaOracle, n: int, workers: int = 1, max_cycle: int | None = None) -> Census:
    top = n if max_cycle is None else min(n, max_cycle)
    holes = {k: count_vertex_induced(oracle, C(k), workers) for k in range(4, top + 1)}
    antiholes = {k: count_vertex_induced(oracle, Cbar(k), workers) for k in range(5, top + 1)}
    return Census(holes, antiholes)


def is_chordal(census: Census) -> bool:
    """No induced cycle of length >= 4."""
    return all(c == 0 for c in census.holes.values())


def is_chordal_excluding_c4(census: Census) -> bool:
    """Variant that only excludes induced cycles of length >= 5 (C_4 allowed)."""
    return all(c == 0 for k, c in census.holes.items() if k >= 5)


def is_perfect(census: Census) -> bool:
    """Berge condition: no odd hole and no odd antihole of length >= 5."""
    return all(c == 0 for k, c in census.holes.items() if k % 2) and all(
        c == 0 for k, c in census.antiholes.items() if k % 2
    )


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

PROVENANCE = {
    "s_e": "edge-pair subset specialization matched against the target's reciprocal, regularity gate on matches",
    "s_v": "s_e copies whose specialization is unchanged by every extra edge pair",
    "omega": "largest complete target with a vertex-induced copy",
    "ham": "edge-induced copies of the n-cycle",
    "holes": "vertex-induced cycle copies, k = 4..n",
    "antiholes": "vertex-induced cycle-complement copies, k = 5..n",
    "chordal": "no holes",
    "perfect": "no odd holes and no odd antiholes",
}


@dataclass
class CountReport:
    s_e: dict[str, int] = field(default_factory=dict)
    s_v: dict[str, int] = field(default_factory=dict)
    omega: int | None = None
    ham: int | None = None
    holes: dict[int, int] | None = None
    antiholes: dict[int, int] | None = None
    chordal: bool | None = None
    chordal_excluding_c4: bool | None = None
    perfect: bool | None = None

    def to_dict(self) -> dict:
        return {
            "s_e": dict(self.s_e),
            "s_v": dict(self.s_v),
            "omega": self.omega,
            "ham": self.ham,
            "holes": None if self.holes is None else {str(k): v for k, v in self.holes.items()},
            "antiholes": None if self.antiholes is None else {str(k): v for k, v in self.antiholes.items()},
            "chordal": self.chordal,
            "chordal_excluding_c4": self.chordal_excluding_c4,
            "perfect": self.perfect,
            "provenance": dict(PROVENANCE),
        }


def default_targets(n: int, m: int, max_cycle: int | None = None) -> list[Target]:
    top = n if max_cycle is None else min(n, max_cycle)
    out: list[Target] = [K(r) for r in range(3, n + 1) if comb(r, 2) <= m]
    out += [C(k) for k in range(4, top + 1)]
    out += [Cbar(k) for k in range(5, top + 1)]
    return [t for t in out if t.edge_count <= m]


def analyze_oracle(
    oracle: ZetaOracle,
    n: int,
    targets: Iterable[Target] | None = None,
    max_cycle: int | None = None,
    workers: int = 1,
) -> CountReport:
    """Full census when ``targets`` is None; otherwise only the listed s_e/s_v counts.

    With ``max_cycle`` below ``n`` the census is partial, so Ham, chordality
    and perfection stay ``None``.
    """
    report = CountReport()
    if targets is not None:
        for t in targets:
            copies = edge_induced_copies(oracle, t, workers)
            report.s_e[t.name] = len(copies)
            report.s_v[t.name] = len(vertex_induced_copies(oracle, t, workers, copies))
        return report

    def record(t: Target) -> int:
        if t.name not in report.s_v:
            copies = edge_induced_copies(oracle, t, workers)
            report.s_e[t.name] = len(copies)
            report.s_v[t.name] = len(vertex_induced_copies(oracle, t, workers, copies))
        return report.s_v[t.name]

    if oracle.m == 0:
        report.omega = 1 if n else 0
    else:
        best = 2
        r = 3
        while r <= n and comb(r, 2) <= oracle.m:
            if record(K(r)) == 0:
                break
            best = r
            r += 1
        report.omega = best
    top = n if max_cycle is None else min(n, max_cycle)
    report.holes = {}
    report.antiholes = {}
    for k in range(4, top + 1):
        report.holes[k] = record(C(k)) if C(k).edge_count <= oracle.m else 0
    for k in range(5, top + 1):
        report.antiholes[k] = record(Cbar(k)) if Cbar(k).edge_count <= oracle.m else 0
    if n < 3:
        report.ham = 0
    elif top == n:
        ham_t = C(n)
        if ham_t.name not in report.s_e:
            report.s_e[ham_t.name] = count_edge_induced(oracle, ham_t, workers) if n <= oracle.m else 0
        report.ham = report.s_e[ham_t.name]
    if top == n:
        census = Census(report.holes, report.antiholes)
        report.chordal = is_chordal(census)
        report.chordal_excluding_c4 = is_chordal_excluding_c4(census)
        report.perfect = is_perfect(census)
    return report
