"""Regularity, connectivity and edge count, read off oracle queries only.

Nothing in this module sees a graph; every fact comes from
:meth:`ZetaOracle.query`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .poly import root_multiplicity
from .zeta import ZetaOracle


class InconsistentZeta(RuntimeError):
    """Oracle answers contradict a structural fact they must satisfy."""


class Regularity(str, Enum):
    REGULAR = "regular"
    BIREGULAR_BIPARTITE = "biregular_bipartite"
    DEGREE2_ONE_SIDE = "degree2_one_side"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class RegularityVerdict:
    kind: Regularity
    k: int | None = None
    p: int | None = None
    q: int | None = None
    evidence: dict = field(default_factory=dict, compare=False)

    def is_regular(self, k: int | None = None) -> bool:
        return self.kind is Regularity.REGULAR and (k is None or self.k == k)

    def to_dict(self) -> dict:
        out: dict = {"class": self.kind.value}
        if self.k is not None:
            out["k"] = self.k
        if self.p is not None:
            out["p"], out["q"] = self.p, self.q
        ev = {}
        for key, val in self.evidence.items():
            if isinstance(val, Fraction):
                val = f"{val.numerator}/{val.denominator}"
            elif isinstance(val, list):
                val = [str(x) for x in val]
            elif isinstance(val, int) and not isinstance(val, bool):
                val = str(val)
            ev[key] = val
        out["evidence"] = ev
        return out

    def __str__(self) -> str:
        if self.kind is Regularity.REGULAR:
            return f"Regular({self.k})"
        if self.kind is Regularity.BIREGULAR_BIPARTITE:
            return f"BiregularBipartite({self.p},{self.q})"
        if self.kind is Regularity.DEGREE2_ONE_SIDE:
            return "Degree2OneSide"
        return "Inconclusive"


def edge_count(oracle: ZetaOracle) -> int:
    """Half the degree of the full reciprocal (exact for md2 graphs)."""
    d = max(oracle.full().degree, 0)
    if d % 2:
        raise InconsistentZeta(f"reciprocal zeta has odd degree {d}")
    return d // 2


def deletion_coefficients(oracle: ZetaOracle) -> list[int]:
    """c_{2m-2} of the reciprocal after deleting each edge pair in turn."""
    m = oracle.m
    every = list(oracle.edge_pairs)
    return [oracle.query(every[:j] + every[j + 1:]).coefficient(2 * m - 2) for j in every]


def _ratio(k: int) -> Fraction:
    return Fraction(k - 2, k - 1)


def classify_regularity(oracle: ZetaOracle) -> RegularityVerdict:
    """Regular(k), biregular bipartite (p, q), degree-2-one-side, or inconclusive.

    Deleting one edge of an md2 graph keeps the vertex count and lowers
    ``m - n`` by one, and the top coefficient carries the sign
    ``(-1)**(m - n)``.  The degree-ratio test is therefore applied to
    ``-c_{2m-2}(W - e) / c_{2m}(W)``.
    """
    m = oracle.m
    top = oracle.full().coefficient(2 * m)
    evidence: dict = {"c_2m": top}
    if m == 0 or top == 0:
        evidence["test"] = "top coefficient vanishes: not md2"
        return RegularityVerdict(Regularity.INCONCLUSIVE, evidence=evidence)
    dels = deletion_coefficients(oracle)
    evidence["deletion_coefficients"] = dels
    if top == 1:
        # a union of cycles; every deletion leaves a forest, so the ratio is 0
        evidence["ratio"] = Fraction(-dels[0], top) if len(set(dels)) == 1 else None
        evidence["test"] = "c_2m == 1"
        return RegularityVerdict(Regularity.REGULAR, k=2, evidence=evidence)
    if len(set(dels)) != 1:
        evidence["test"] = "deletion coefficients differ"
        return RegularityVerdict(Regularity.INCONCLUSIVE, evidence=evidence)
    raw = Fraction(dels[0], top)
    r = -raw
    evidence["raw_ratio"] = raw
    evidence["ratio"] = r
    bound = 2 * m + 2
    for k in range(3, bound + 1):
        if _ratio(k) ** 2 == r:
            evidence["test"] = "ratio == ((k-2)/(k-1))^2"
            return RegularityVerdict(Regularity.REGULAR, k=k, evidence=evidence)
    for p in range(3, bound + 1):
        rp = _ratio(p)
        for q in range(p + 1, bound + 1):
            if rp * _ratio(q) == r:
                evidence["test"] = "ratio == ((p-2)/(p-1))((q-2)/(q-1))"
                return RegularityVerdict(Regularity.BIREGULAR_BIPARTITE, p=p, q=q, evidence=evidence)
    if r == 0:
        evidence["test"] = "ratio == 0"
        return RegularityVerdict(Regularity.DEGREE2_ONE_SIDE, evidence=evidence)
    evidence["test"] = "no ratio matched"
    return RegularityVerdict(Regularity.INCONCLUSIVE, evidence=evidence)


def is_connected_regular(oracle: ZetaOracle, k: int, verdict: RegularityVerdict | None = None) -> bool:
    """Connectivity of a k-regular graph from the pole order of its zeta function.

    For k >= 3 the pole at 1/(k-1) is simple exactly when the graph is
    connected.  For k = 2 each cycle component contributes (1 - u^l)^2, so
    the test is multiplicity exactly 2 at u = 1.
    """
    verdict = verdict or classify_regularity(oracle)
    if not verdict.is_regular(k):
        raise ValueError(f"precondition violated: oracle classifies as {verdict}, not Regular({k})")
    p = oracle.full()
    if k == 2:
        return root_multiplicity(p, 1) == 2
    return root_multiplicity(p, Fraction(1, k - 1)) == 1
