"""Packing-chromatic criticality with per-deletion certificates.

Edge criticality is decided by single-edge deletions, which is equivalent
to full subgraph criticality for graphs without isolated vertices; inputs
with isolated vertices are rejected rather than silently extended.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import PreconditionError
from .graphs import Edge, Graph, delete_edge, delete_vertex, radius
from .packing import chi_rho

Deletion = Union[Edge, int]


@dataclass(frozen=True)
class CriticalityReport:
    """Verdict plus the full per-deletion table of packing chromatic values.

    ``witness`` names a deletion that fails to lower the value (present
    exactly when the graph is not critical).
    """

    base_chi_rho: int
    critical: bool
    witness: Optional[Deletion]
    table: tuple[tuple[Deletion, int], ...]


def is_edge_critical(G: Graph) -> CriticalityReport:
    """Does every single-edge deletion lower the packing chromatic number?"""
    if G.n == 0:
        raise PreconditionError("criticality undefined on the empty graph")
    if any(G.degree(v) == 0 for v in range(G.n)):
        raise PreconditionError("edge-criticality test requires no isolated vertices")
    base = chi_rho(G).value
    table = []
    witness = None
    for e in G.edges():
        val = chi_rho(delete_edge(G, e)).value
        table.append((e, val))
        if witness is None and val >= base:
            witness = e
    return CriticalityReport(base, witness is None, witness, tuple(table))


def is_vertex_critical(G: Graph) -> CriticalityReport:
    """Does every single-vertex deletion lower the packing chromatic number?"""
    if G.n < 2:
        raise PreconditionError("vertex-criticality test requires at least two vertices")
    base = chi_rho(G).value
    table = []
    witness = None
    for v in range(G.n):
        sub, _ = delete_vertex(G, v)
        val = chi_rho(sub).value
        table.append((v, val))
        if witness is None and val >= base:
            witness = v
    return CriticalityReport(base, witness is None, witness, tuple(table))


def has_leaf_violation(G: Graph) -> Optional[int]:
    """Fast necessary-condition filter for radius-1 graphs on >= 3 vertices:
    a critical graph there has no leaf, so any returned leaf certifies
    non-criticality."""
    if G.n < 3 or radius(G) != 1:
        raise PreconditionError("leaf filter applies to radius-1 graphs on >= 3 vertices")
    for v in range(G.n):
        if G.degree(v) == 1:
            return v
    return None
