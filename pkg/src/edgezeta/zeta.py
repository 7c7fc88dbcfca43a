"""Directed edge matrix, reciprocal Ihara and edge zeta polynomials.

The directed edge matrix ``T`` is the single source of truth: the Ihara
reciprocal is ``det(I - uT)`` and the edge zeta reciprocal is
``det(I - UT)``.  Bass's three-term determinant is only a cross-check.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import ArcList, Graph, GraphError, to_symmetric_digraph
from .poly import (
    DEFAULT_SCALE_CAP,
    MultiPoly,
    ScaleCapExceeded,
    UniPoly,
    bareiss_det,
    berkowitz_sparse,
    product,
)


@dataclass(frozen=True)
class DirectedEdgeMatrix:
    """Sparse 0/1 matrix on arcs: ``successors[i]`` lists every j with t_ij = 1."""

    successors: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.successors)

    def dense(self) -> list[list[int]]:
        n = self.size
        rows = [[0] * n for _ in range(n)]
        for i, succ in enumerate(self.successors):
            for j in succ:
                rows[i][j] = 1
        return rows

    def nnz(self) -> int:
        return sum(len(s) for s in self.successors)


def directed_edge_matrix(arcs: ArcList) -> DirectedEdgeMatrix:
    """t_ij = 1 iff terminus(e_i) = origin(e_j) and e_i is not the inverse of e_j."""
    by_origin: dict[int, list[int]] = {}
    for j, (o, _t, _e) in enumerate(arcs.arcs):
        by_origin.setdefault(o, []).append(j)
    succ = []
    for i, (_o, t, _e) in enumerate(arcs.arcs):
        succ.append(tuple(j for j in by_origin.get(t, ()) if arcs.inv[j] != i))
    return DirectedEdgeMatrix(tuple(succ))


def ihara_reciprocal(g: Graph) -> UniPoly:
    """det(I - uT) by a direct division-free charpoly of the full matrix."""
    T = directed_edge_matrix(to_symmetric_digraph(g))
    rows = [{j: 1 for j in succ} for succ in T.successors]
    return UniPoly(berkowitz_sparse(rows))


# ---------------------------------------------------------------------------
# restricted determinants
# ---------------------------------------------------------------------------

def _prune(arcs: set[int], succ: Sequence[Sequence[int]], pred: Sequence[Sequence[int]]) -> set[int]:
    """Drop arcs whose row or column of the restricted T is zero, repeatedly.

    A zero row (or column) of ``I - uT`` outside the diagonal lets the
    determinant be expanded along it, so deleting that arc leaves
    ``det(I - uT)`` unchanged.
    """
    alive = set(arcs)
    out_deg = {a: sum(1 for b in succ[a] if b in alive) for a in alive}
    in_deg = {a: sum(1 for b in pred[a] if b in alive) for a in alive}
    stack = [a for a in alive if out_deg[a] == 0 or in_deg[a] == 0]
    while stack:
        a = stack.pop()
        if a not in alive:
            continue
        alive.discard(a)
        for b in succ[a]:
            if b in alive:
                in_deg[b] -= 1
                if in_deg[b] == 0:
                    stack.append(b)
        for b in pred[a]:
            if b in alive:
                out_deg[b] -= 1
                if out_deg[b] == 0:
                    stack.append(b)
    return alive


def _strong_components(alive: set[int], succ: Sequence[Sequence[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative, over the arcs in ``alive``."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in sorted(alive):
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in alive:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


class ZetaOracle:
    """Answers reciprocal Ihara polynomials of edge-subset specializations.

    The graph itself stays hidden.  Callers see the number of edge pairs
    ``m``, the endpoints of each edge pair's first arc (the arc/inverse-arc
    identification), and :meth:`query`.  Setting the variables of the arcs
    outside ``S`` to zero is realized by deleting their rows and columns
    from ``T``.

    Query results are memoized per strongly connected block of the
    restricted ``T``; every writer computes the same value, so concurrent
    writers are harmless.
    """

    def __init__(self, g: Graph) -> None:
        arcs = to_symmetric_digraph(g)
        self._arcs = arcs
        T = directed_edge_matrix(arcs)
        self._succ = T.successors
        pred: list[list[int]] = [[] for _ in range(len(arcs))]
        for i, s in enumerate(T.successors):
            for j in s:
                pred[j].append(i)
        self._pred = tuple(tuple(p) for p in pred)
        self._edges = tuple(range(arcs.m))
        self._cache: dict[frozenset[int], UniPoly] = {}
        self._lock = threading.Lock()
        self.stats = {"queries": 0, "blocks_computed": 0}

    # -- declared surface ------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edge_pairs(self) -> range:
        return range(self.m)

    def endpoints(self, j: int) -> tuple[int, int]:
        """(origin, terminus) of the first arc of edge pair ``j``."""
        a = 2 * self._edges[j]
        return self._arcs.origin(a), self._arcs.terminus(a)

    def query(self, S: Iterable[int] | None = None) -> UniPoly:
        """Reciprocal Ihara polynomial of the specialization keeping edge pairs ``S``.

        ``None`` keeps every edge pair.
        """
        if S is None:
            keep = self._edges
        else:
            keep = []
            for j in S:
                if not 0 <= j < self.m:
                    raise IndexError(f"edge pair {j} out of range 0..{self.m - 1}")
                keep.append(self._edges[j])
        self.stats["queries"] += 1
        arcset = {a for e in keep for a in (2 * e, 2 * e + 1)}
        alive = _prune(arcset, self._succ, self._pred)
        if not alive:
            return UniPoly.constant(1)
        factors = [self._block(comp) for comp in _strong_components(alive, self._succ)]
        return product(factors)

    def full(self) -> UniPoly:
        return self.query(None)

    def restrict(self, S: Iterable[int]) -> ZetaOracle:
        """Sub-oracle whose edge pairs are ``S`` (renumbered in the given order); shares the cache."""
        sub = object.__new__(ZetaOracle)
        sub._arcs = self._arcs
        sub._succ = self._succ
        sub._pred = self._pred
        sub._edges = tuple(self._edges[j] for j in S)
        sub._cache = self._cache
        sub._lock = self._lock
        sub.stats = self.stats
        return sub

    # -- internals --------------------------------------------------------

    def _block(self, comp: list[int]) -> UniPoly:
        key = frozenset(comp)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if len(comp) == 1:
            a = comp[0]
            p = UniPoly((1, -1)) if a in self._succ[a] else UniPoly.constant(1)
        else:
            pos = {a: i for i, a in enumerate(comp)}
            rows = [{pos[b]: 1 for b in self._succ[a] if b in pos} for a in comp]
            p = UniPoly(berkowitz_sparse(rows))
        with self._lock:
            self._cache[key] = p
            self.stats["blocks_computed"] += 1
        return p


def specialize(oracle: ZetaOracle, S: Iterable[int]) -> UniPoly:
    return oracle.query(S)


# ---------------------------------------------------------------------------
# edge zeta (multivariate)
# ---------------------------------------------------------------------------

def edge_zeta_reciprocal(arcs: ArcList, cap: int = DEFAULT_SCALE_CAP) -> MultiPoly:
    """det(I - UT) in one variable per arc; variable index = arc index."""
    n = len(arcs)
    if n > cap:
        raise ScaleCapExceeded(f"scale cap exceeded: {n} arc variables > cap {cap}")
    from .poly import multipoly_det

    T = directed_edge_matrix(arcs)
    one = MultiPoly.constant(n, 1)
    M: list[list[MultiPoly | int]] = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = one
    for i, succ in enumerate(T.successors):
        ui = MultiPoly.variable(n, i, -1)
        for j in succ:
            M[i][j] = M[i][j] + ui if isinstance(M[i][j], MultiPoly) else ui
    return multipoly_det(M, cap=cap)


def arc_variable_names(arcs: ArcList) -> list[str]:
    """``a<j>``/``b<j>`` for the two arcs of edge j (1-based, as in drawings)."""
    return [f"{'ab'[a & 1]}{a // 2 + 1}" for a in range(len(arcs))]


# ---------------------------------------------------------------------------
# cross-checks and coefficient facts
# ---------------------------------------------------------------------------

def bass_reciprocal(g: Graph) -> UniPoly:
    """(1 - u^2)^(m - n) * det(I - uA + u^2 (D - I)) for a loop-free multigraph.

    The determinant is recovered by exact evaluation at 2n + 1 integer points
    and Lagrange interpolation, independently of ``T``.
    """
    if g.has_loops():
        raise GraphError("unsupported for Bass cross-check: graph has loops")
    n, m = g.n, g.m
    idx = {v: i for i, v in enumerate(g.vertices)}
    A = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        A[idx[u]][idx[v]] += 1
        A[idx[v]][idx[u]] += 1
    deg = [sum(row) for row in A]
    points = list(range(2 * n + 1))
    values = []
    for x in points:
        M = [
            [(1 if i == j else 0) - x * A[i][j] + (x * x * (deg[i] - 1) if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        values.append(bareiss_det(M))
    det_poly = _interpolate(points, values)
    one_minus_u2 = UniPoly((1, 0, -1))
    if m >= n:
        return det_poly * one_minus_u2 ** (m - n)
    return det_poly.exact_quotient(one_minus_u2 ** (n - m))


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> UniPoly:
    """Newton divided differences; the result must have integer coefficients."""
    k = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form into monomial coefficients
    out = [Fraction(0)] * k
    basis = [Fraction(1)]
    for i in range(k):
        for d, b in enumerate(basis):
            out[d] += coef[i] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for d, b in enumerate(basis):
            nxt[d + 1] += b
            nxt[d] -= xs[i] * b
        basis = nxt
    if any(c.denominator != 1 for c in out):
        raise ArithmeticError("interpolated determinant is not integral")
    return UniPoly(c.numerator for c in out)


def coefficient(p: UniPoly, k: int) -> int:
    return p.coefficient(k)


def top_coefficient_formula(g: Graph) -> int:
    """Product of (d(v) - 1) over all vertices: the predicted coefficient of u^(2m)."""
    out = 1
    for d in g.degrees().values():
        out *= d - 1
    return out


def signed_top_coefficient(g: Graph) -> int:
    """(-1)^(m - n) * prod (d(v) - 1): the coefficient of u^(2m) for every multigraph.

    ``det(I - uT)`` has leading coefficient ``det(-T)``, which the Bass
    factorization evaluates to this signed product.
    """
    sign = -1 if (g.m - g.n) % 2 else 1
    return sign * top_coefficient_formula(g)
