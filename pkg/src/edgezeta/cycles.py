"""Brute-force ground truth.

Everything here is computed directly from the graph, never through
determinants: explicit prime-cycle enumeration, isomorphism search, and
subset enumeration.  These routines are the reference the zeta-only
counters are checked against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from .graph import ArcList, Graph, complement, to_symmetric_digraph, vertex_induced
from .poly import DEFAULT_SCALE_CAP, MultiPoly, UniPoly, series_inverse
from .zeta import directed_edge_matrix, edge_zeta_reciprocal, ihara_reciprocal


@dataclass(frozen=True)
class PrimeCycle:
    """Canonical (lexicographically least) rotation of a prime cycle's arc sequence."""

    arcs: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arcs)

    def reversed(self, arcs: ArcList) -> PrimeCycle:
        return PrimeCycle(canonical_rotation(tuple(arcs.inv[a] for a in reversed(self.arcs))))


def canonical_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def is_primitive(seq: tuple[int, ...]) -> bool:
    n = len(seq)
    for d in range(1, n):
        if n % d == 0 and seq == seq[d:] + seq[:d]:
            return False
    return True


def is_prime_cycle(seq: tuple[int, ...], arcs: ArcList) -> bool:
    """Closed, backtrackless, tailless and primitive, checked from the arc list alone."""
    n = len(seq)
    if n == 0:
        return False
    for i in range(n):
        a, b = seq[i], seq[(i + 1) % n]
        if arcs.terminus(a) != arcs.origin(b):
            return False
        if arcs.inv[a] == b:  # backtracking inside, or a tail at the wrap-around
            return False
    return is_primitive(seq)


class EnumerationBudgetExceeded(RuntimeError):
    pass


def enumerate_prime_cycles(arcs: ArcList, max_length: int, budget: int | None = None) -> list[PrimeCycle]:
    """One canonical representative per prime cycle of length <= ``max_length``.

    Reversal gives a distinct prime cycle.  A canonical rotation starts at
    its least arc, so walks from start arc ``s`` only ever use arcs >= s.
    ``budget`` caps the number of path extensions explored.
    """
    if max_length < 1:
        raise ValueError("max_length must be >= 1")
    steps = 0
    succ = directed_edge_matrix(arcs).successors
    found: list[PrimeCycle] = []
    for s in range(len(arcs)):
        allowed = [tuple(b for b in succ[a] if b >= s) for a in range(len(arcs))]
        closes = [s in succ[a] for a in range(len(arcs))]
        path = [s]
        stack = [iter(allowed[s])]
        if closes[s]:
            _accept(tuple(path), found)
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                path.pop()
                continue
            path.append(nxt)
            steps += 1
            if budget is not None and steps > budget:
                raise EnumerationBudgetExceeded(f"more than {budget} path extensions")
            if closes[nxt]:
                _accept(tuple(path), found)
            if len(path) < max_length:
                stack.append(iter(allowed[nxt]))
            else:
                path.pop()
    found.sort(key=lambda c: (c.length, c.arcs))
    return found


def _accept(seq: tuple[int, ...], out: list[PrimeCycle]) -> None:
    if is_primitive(seq) and canonical_rotation(seq) == seq:
        out.append(PrimeCycle(seq))


def g_monomial(c: PrimeCycle, nvars: int | None = None) -> tuple[int, ...] | Counter:
    """Arc-variable exponents of a prime cycle.

    With ``nvars`` the result is a dense exponent vector, otherwise a Counter
    keyed by arc index.
    """
    counts = Counter(c.arcs)
    if nvars is None:
        return counts
    return tuple(counts.get(i, 0) for i in range(nvars))


@dataclass(frozen=True)
class EulerCheck:
    ok: bool
    max_length: int
    cycle_counts: dict[int, int]
    method: str = "enumeration"
    first_discrepancy: int | None = None
    expected: int | None = None
    got: int | None = None


def euler_product_series(lengths: Iterable[int], L: int) -> UniPoly:
    """prod over cycles of 1/(1 - u^l), truncated after u^L."""
    series = [1] + [0] * L
    for l in lengths:
        if l > L:
            continue
        # multiply by 1/(1 - u^l): running sum with stride l
        for k in range(l, L + 1):
            series[k] += series[k - l]
    return UniPoly(series)


def euler_product_from_counts(counts: Mapping[int, int], L: int) -> UniPoly:
    """prod_l (1 - u^l)^(-counts[l]), truncated after u^L, via binomial series."""
    series = [1] + [0] * L
    for l, c in counts.items():
        if l > L or c == 0:
            continue
        # (1 - x)^(-c) = sum_k C(c + k - 1, k) x^k
        factor = [comb(c + k - 1, k) for k in range(L // l + 1)]
        out = [0] * (L + 1)
        for i, a in enumerate(series):
            if a:
                for k, f in enumerate(factor):
                    if i + k * l > L:
                        break
                    out[i + k * l] += a * f
        series = out
    return UniPoly(series)


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def prime_cycle_counts_from_walks(arcs: ArcList, max_length: int) -> dict[int, int]:
    """Prime cycle counts per length from closed non-backtracking walk counts.

    A closed walk of length L is a rotation of the d-th power of a prime
    cycle of length d | L, so N_L = sum_{d | L} d * pi_d; Mobius inversion
    recovers pi.
    """
    N = closed_walk_counts(arcs, max_length)
    out = {}
    for L in range(1, max_length + 1):
        total = sum(_mobius(L // d) * N[d - 1] for d in range(1, L + 1) if L % d == 0)
        if total % L:
            raise ArithmeticError(f"walk counts at length {L} are inconsistent")
        if total:
            out[L] = total // L
    return out


ENUMERATION_BUDGET = 2_000_000


def euler_truncation_check(g: Graph, max_length: int, budget: int = ENUMERATION_BUDGET) -> EulerCheck:
    """Compare the inverted determinant with the prime-cycle Euler product up to u^max_length.

    Factors with l(c) > max_length do not touch terms of degree <= max_length.
    Prime cycles are listed explicitly when that fits in ``budget``; dense
    multigraphs (a few loops already give billions of cycles by length 12)
    fall back to counting them through closed walks.  Neither route touches
    the determinant.
    """
    arcs = to_symmetric_digraph(g)
    counts = prime_cycle_counts_from_walks(arcs, max_length)
    method = "closed-walk count"
    if sum(counts.values()) <= budget:
        try:
            cycles = enumerate_prime_cycles(arcs, max_length, budget=budget)
        except EnumerationBudgetExceeded:
            pass
        else:
            counts = dict(sorted(Counter(c.length for c in cycles).items()))
            method = "enumeration"
    euler = euler_product_from_counts(counts, max_length)
    det_series = series_inverse(ihara_reciprocal(g), max_length)
    for k in range(max_length + 1):
        if euler[k] != det_series[k]:
            return EulerCheck(False, max_length, counts, method, k, euler[k], det_series[k])
    return EulerCheck(True, max_length, counts, method)


def multivariate_euler_check(arcs: ArcList, max_degree: int, cap: int = DEFAULT_SCALE_CAP) -> bool:
    """Total-degree truncation of 1/det(I - UT) against prod (1 - g(c))^-1."""
    n = len(arcs)
    det_inv = edge_zeta_reciprocal(arcs, cap=cap).series_inverse(max_degree)
    euler = MultiPoly.constant(n, 1)
    for c in enumerate_prime_cycles(arcs, max_degree):
        mono = g_monomial(c, n)
        # 1/(1 - x) = sum x^k, truncated
        geo = {}
        k = 0
        while k * c.length <= max_degree:
            geo[tuple(k * e for e in mono)] = 1
            k += 1
        euler = euler.mul_truncated(MultiPoly(n, geo), max_degree)
    return euler == det_inv.truncate(max_degree)


def closed_walk_counts(arcs: ArcList, max_length: int) -> list[int]:
    """Backtrackless tailless closed arc sequences of each length 1..max_length.

    Counted by propagating walk multiplicities from each start arc, without
    forming powers of ``T``.

    Compared against trace(T^L) in the tests.
    """
    succ = directed_edge_matrix(arcs).successors
    counts = [0] * (max_length + 1)
    for s in range(len(arcs)):
        frontier = Counter({s: 1})
        for L in range(1, max_length + 1):
            counts[L] += sum(c for a, c in frontier.items() if s in succ[a])
            nxt: Counter = Counter()
            for a, c in frontier.items():
                for b in succ[a]:
                    nxt[b] += c
            frontier = nxt
    return counts[1:]


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Multigraph isomorphism by joint colour refinement and backtracking."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees().values()) != sorted(h.degrees().values()):
        return False
    if g.edge_multiset() and Counter(g.edge_multiset().values()) != Counter(h.edge_multiset().values()):
        return False
    return find_isomorphism(g, h) is not None


def _joint_colours(g: Graph, h: Graph) -> tuple[dict[int, object], dict[int, object]] | None:
    """Refine both graphs with a shared palette so colours are comparable."""
    ag, ah = g.adjacency(), h.adjacency()
    cg = {v: (sum(ag[v].values()), ag[v][v]) for v in g.vertices}
    ch = {v: (sum(ah[v].values()), ah[v][v]) for v in h.vertices}
    rounds = 0
    while True:
        if Counter(cg.values()) != Counter(ch.values()):
            return None
        sg = {v: (cg[v], tuple(sorted((repr(cg[w]), k) for w, k in ag[v].items() if w != v))) for v in g.vertices}
        sh = {v: (ch[v], tuple(sorted((repr(ch[w]), k) for w, k in ah[v].items() if w != v))) for v in h.vertices}
        palette = {s: i for i, s in enumerate(sorted(set(sg.values()) | set(sh.values()), key=repr))}
        ng = {v: palette[sg[v]] for v in g.vertices}
        nh = {v: palette[sh[v]] for v in h.vertices}
        stable = len(set(ng.values())) == len(set(cg.values())) and rounds > 0
        cg, ch = ng, nh
        rounds += 1
        if stable:
            if Counter(cg.values()) != Counter(ch.values()):
                return None
            return cg, ch


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    if g.n != h.n or g.m != h.m:
        return None
    if g.n == 0:
        return {}
    cols = _joint_colours(g, h)
    if cols is None:
        return None
    cg, ch = cols
    ag, ah = g.adjacency(), h.adjacency()
    # order g's vertices: rarest colour first, then by connectivity to already placed ones
    freq = Counter(cg.values())
    order: list[int] = []
    remaining = set(g.vertices)
    while remaining:
        placed = set(order)
        v = min(
            remaining,
            key=lambda x: (-sum(1 for w in ag[x] if w in placed), freq[cg[x]], x),
        )
        order.append(v)
        remaining.discard(v)
    by_colour: dict[object, list[int]] = {}
    for w in h.vertices:
        by_colour.setdefault(ch[w], []).append(w)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in by_colour.get(cg[v], ()):
            if w in used:
                continue
            if ag[v][v] != ah[w][w]:
                continue
            if any(ag[v][x] != ah[w][mapping[x]] for x in order[:i]):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


# ---------------------------------------------------------------------------
# direct subgraph counts
# ---------------------------------------------------------------------------

def _degree_signature(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees().values()))


def brute_count_edge_induced(g: Graph, W: Graph) -> int:
    """Number of edge subsets R whose edge-induced subgraph is isomorphic to W.

    Subsets are grouped by their vertex set U (which an edge-induced subgraph
    determines), so only edges inside U are combined.
    """
    if any(d == 0 for d in W.degrees().values()):
        return 0
    mw, nw = W.m, W.n
    if mw > g.m or nw > g.n:
        return 0
    target_deg = Counter(W.degrees().values())
    total = 0
    for U in combinations(g.vertices, nw):
        uset = set(U)
        inside = [j for j, (a, b) in enumerate(g.edges) if a in uset and b in uset]
        if len(inside) < mw:
            continue
        for R in combinations(inside, mw):
            deg = Counter()
            for j in R:
                a, b = g.edges[j]
                deg[a] += 1
                deg[b] += 1
            if len(deg) != nw or Counter(deg.values()) != target_deg:
                continue
            sub = Graph(U, tuple(g.edges[j] for j in R))
            if are_isomorphic(sub, W):
                total += 1
    return total


def brute_count_vertex_induced(g: Graph, W: Graph) -> int:
    if W.n > g.n:
        return 0
    sig = _degree_signature(W)
    total = 0
    for U in combinations(g.vertices, W.n):
        sub = vertex_induced(g, U)
        if sub.m == W.m and _degree_signature(sub) == sig and are_isomorphic(sub, W):
            total += 1
    return total


def brute_clique_number(g: Graph) -> int:
    """Largest clique by Bron-Kerbosch with pivoting (loops ignored)."""
    nbrs = {v: {w for w in g.adjacency()[v] if w != v} for v in g.vertices}
    best = 0

    def expand(R: int, P: set[int], X: set[int]) -> None:
        nonlocal best
        if not P and not X:
            best = max(best, R)
            return
        if R + len(P) <= best:
            return
        pivot = max(P | X, key=lambda x: len(nbrs[x] & P))
        for v in list(P - nbrs[pivot]):
            expand(R + 1, P & nbrs[v], X & nbrs[v])
            P = P - {v}
            X = X | {v}

    expand(0, set(g.vertices), set())
    return best


def brute_hamiltonian_count(g: Graph) -> int:
    """Undirected Hamiltonian cycles of a simple graph, by DFS from the least vertex."""
    n = g.n
    if n < 3:
        return 0
    adj = {v: sorted(w for w in g.adjacency()[v] if w != v) for v in g.vertices}
    start = g.vertices[0]
    count = 0
    path = [start]
    seen = {start}

    def dfs(v: int) -> None:
        nonlocal count
        if len(path) == n:
            if start in adj[v]:
                count += 1
            return
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                path.append(w)
                dfs(w)
                path.pop()
                seen.discard(w)

    dfs(start)
    return count // 2  # each cycle is traced in both directions


def is_bipartite(g: Graph) -> bool:
    side: dict[int, int] = {}
    adj = g.adjacency()
    for s in g.vertices:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in side:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def is_chordal_lexbfs(g: Graph) -> bool:
    """Lexicographic BFS followed by a perfect-elimination-order test."""
    nbrs = {v: {w for w in g.adjacency()[v] if w != v} for v in g.vertices}
    labels: dict[int, list[int]] = {v: [] for v in g.vertices}
    order: list[int] = []
    unvisited = list(g.vertices)
    n = len(unvisited)
    while unvisited:
        v = max(unvisited, key=lambda x: (labels[x], -g.vertices.index(x)))
        unvisited.remove(v)
        order.append(v)
        for w in nbrs[v]:
            if w in unvisited:
                labels[w].append(n - len(order))
    # reverse of LexBFS order is a perfect elimination order iff chordal
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in nbrs[v] if pos[w] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda w: pos[w])
        if not set(earlier) - {parent} <= nbrs[parent]:
            return False
    return True


@dataclass(frozen=True)
class BruteCensus:
    holes: dict[int, int]
    antiholes: dict[int, int]

    def chordal(self) -> bool:
        return all(c == 0 for c in self.holes.values())

    def perfect(self) -> bool:
        odd = [k for k in self.holes if k % 2]
        return all(self.holes[k] == 0 for k in odd) and all(
            self.antiholes.get(k, 0) == 0 for k in self.antiholes if k % 2
        )


def brute_census(g: Graph, n: int | None = None) -> BruteCensus:
    """Induced cycles C_k (k >= 4) and induced cycle complements (k >= 5) by subset scan."""
    from .graph import cycle_graph

    n = g.n if n is None else n
    holes = {k: brute_count_vertex_induced(g, cycle_graph(k)) for k in range(4, n + 1)}
    antiholes = {k: brute_count_vertex_induced(g, complement(cycle_graph(k))) for k in range(5, n + 1)}
    return BruteCensus(holes, antiholes)


def brute_chromatic_number(g: Graph) -> int:
    """Least k admitting a proper colouring, by backtracking (loops ignored)."""
    verts = sorted(g.vertices, key=lambda v: -g.degree(v))
    nbrs = {v: {w for w in g.adjacency()[v] if w != v} for v in g.vertices}
    if not verts:
        return 0

    def colourable(k: int) -> bool:
        colour: dict[int, int] = {}

        def place(i: int) -> bool:
            if i == len(verts):
                return True
            v = verts[i]
            used = {colour[w] for w in nbrs[v] if w in colour}
            # new colours are interchangeable, so only try one unused colour
            for c in range(min(k, max(colour.values(), default=-1) + 2)):
                if c not in used:
                    colour[v] = c
                    if place(i + 1):
                        return True
                    del colour[v]
            return False

        return place(0)

    k = 1
    while not colourable(k):
        k += 1
    return k


def is_perfect_by_colouring(g: Graph) -> bool:
    """Every induced subgraph has chromatic number equal to clique number."""
    vs = list(g.vertices)
    for r in range(1, len(vs) + 1):
        for U in combinations(vs, r):
            h = vertex_induced(g, U)
            if brute_chromatic_number(h) != brute_clique_number(h):
                return False
    return True
