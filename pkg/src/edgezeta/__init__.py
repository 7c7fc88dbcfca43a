"""Exact Ihara and edge zeta functions, and graph invariants read from them alone."""

from __future__ import annotations

from .counting import (
    C,
    Census,
    CountReport,
    K,
    Target,
    Cbar,
    analyze_oracle,
    clique_number,
    count_edge_induced,
    count_vertex_induced,
    hamiltonian_count,
    hole_antihole_census,
    is_chordal,
    is_perfect,
)
from .graph import Graph, GraphError, md2_core, to_symmetric_digraph
from .poly import MultiPoly, ScaleCapExceeded, UniPoly
from .structure import Regularity, RegularityVerdict, classify_regularity, edge_count, is_connected_regular
from .zeta import (
    ZetaOracle,
    bass_reciprocal,
    directed_edge_matrix,
    edge_zeta_reciprocal,
    ihara_reciprocal,
    signed_top_coefficient,
    specialize,
)

__version__ = "0.1.0"

__all__ = [
    "C",
    "Cbar",
    "Census",
    "CountReport",
    "Graph",
    "GraphError",
    "K",
    "MultiPoly",
    "Regularity",
    "RegularityVerdict",
    "ScaleCapExceeded",
    "Target",
    "UniPoly",
    "ZetaOracle",
    "analyze_oracle",
    "bass_reciprocal",
    "classify_regularity",
    "clique_number",
    "count_edge_induced",
    "count_vertex_induced",
    "directed_edge_matrix",
    "edge_count",
    "edge_zeta_reciprocal",
    "hamiltonian_count",
    "hole_antihole_census",
    "ihara_reciprocal",
    "is_chordal",
    "is_connected_regular",
    "is_perfect",
    "md2_core",
    "signed_top_coefficient",
    "specialize",
    "to_symmetric_digraph",
]
