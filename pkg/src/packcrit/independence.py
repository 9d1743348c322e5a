"""Exact maximum independent sets and independence-criticality checks.

The solver branches on a maximum-degree vertex (include/exclude) over
bitmask-encoded vertex sets, with memoization and a closed form for the
degree<=1 residue.  Witnesses are the lexicographically smallest maximum
independent sets, so every result is reproducible.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import PreconditionError
from .graphs import Edge, Graph, all_pairs_distances, is_connected, radius


class MisResult(NamedTuple):
    alpha: int
    witness: frozenset[int]


class AlphaCriticality(NamedTuple):
    critical: bool
    witness_edge: Optional[Edge]  # an edge whose removal keeps alpha, when not critical


def _mis_size(bits: Sequence[int], mask: int, memo: dict[int, int]) -> int:
    if mask == 0:
        return 0
    cached = memo.get(mask)
    if cached is not None:
        return cached
    # Pick a maximum-degree vertex within the mask; if everything has
    # degree <= 1 the residue is a disjoint union of edges and isolates.
    best_v, best_deg = -1, -1
    m = mask
    edge_halves = 0
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m ^= b
        d = (bits[v] & mask).bit_count()
        edge_halves += d
        if d > best_deg:
            best_deg = d
            best_v = v
    if best_deg <= 1:
        result = mask.bit_count() - edge_halves // 2
    else:
        vb = 1 << best_v
        excl = _mis_size(bits, mask ^ vb, memo)
        incl = 1 + _mis_size(bits, mask & ~(bits[best_v] | vb), memo)
        result = excl if excl >= incl else incl
    memo[mask] = result
    return result


def mis_size_bits(bits: Sequence[int], mask: int) -> int:
    """Maximum independent set size within ``mask`` for bitmask adjacency."""
    return _mis_size(bits, mask, {})


def _lexmin_witness(bits: Sequence[int], mask: int, size: int) -> frozenset[int]:
    memo: dict[int, int] = {}
    chosen = []
    cur = mask
    need = size
    v = 0
    while need and cur:
        vb = cur & -cur
        v = vb.bit_length() - 1
        rest = cur & ~(bits[v] | vb)
        if 1 + _mis_size(bits, rest, memo) == need:
            chosen.append(v)
            cur = rest
            need -= 1
        else:
            cur ^= vb
    return frozenset(chosen)


def _graph_bits(G: Graph) -> tuple[int, ...]:
    return G.adjacency_bits()


def alpha(G: Graph) -> int:
    """Independence number."""
    return mis_size_bits(_graph_bits(G), (1 << G.n) - 1)


def max_independent_set(G: Graph) -> MisResult:
    """Exact alpha with the lexicographically smallest witness set."""
    bits = _graph_bits(G)
    full = (1 << G.n) - 1
    a = mis_size_bits(bits, full)
    return MisResult(a, _lexmin_witness(bits, full, a))


def _alpha_without_edge(G: Graph, e: Edge) -> int:
    u, v = e
    bits = list(G.adjacency_bits())
    bits[u] &= ~(1 << v)
    bits[v] &= ~(1 << u)
    return mis_size_bits(bits, (1 << G.n) - 1)


def is_alpha_critical(G: Graph) -> AlphaCriticality:
    """Whether deleting any single edge raises alpha.

    Edgeless graphs are vacuously critical.  When not critical, the first
    (sorted) edge whose removal keeps alpha is returned as a witness.
    """
    a = alpha(G)
    for e in G.edges():
        if _alpha_without_edge(G, e) == a:
            return AlphaCriticality(False, e)
    return AlphaCriticality(True, None)


def haynes_check(G: Graph) -> bool:
    """Per-edge maximum-independent-set criterion equivalent to
    alpha-criticality: for each edge uv there is a maximum independent set
    containing u whose only contact with N(v) is u itself (and symmetrically).
    """
    bits = _graph_bits(G)
    full = (1 << G.n) - 1
    a = mis_size_bits(bits, full)

    def oriented(u: int, v: int) -> bool:
        allowed = full & ~(bits[u] | (1 << u)) & ~bits[v]
        return 1 + mis_size_bits(bits, allowed) == a

    return all(oriented(u, v) and oriented(v, u) for u, v in G.edges())


def mis_avoiding(G: Graph, forbidden: Iterable[int]) -> Optional[MisResult]:
    """A maximum independent set of G disjoint from ``forbidden``, if any."""
    bits = _graph_bits(G)
    full = (1 << G.n) - 1
    banned = 0
    for v in forbidden:
        banned |= 1 << v
    a = mis_size_bits(bits, full)
    allowed = full & ~banned
    if mis_size_bits(bits, allowed) != a:
        return None
    return MisResult(a, _lexmin_witness(bits, allowed, a))


def check_lemma_rad3(G: Graph) -> bool:
    """For an alpha-critical graph of radius >= 3: every vertex pair at
    distance exactly 3 admits a maximum independent set avoiding both.

    Raises PreconditionError when the hypothesis fails, as distinct from a
    False return, which would be a genuine property violation.
    """
    if G.n == 0 or not is_connected(G) or radius(G) < 3:
        raise PreconditionError("requires a connected graph of radius >= 3")
    if not is_alpha_critical(G).critical:
        raise PreconditionError("requires an alpha-critical graph")
    dm = all_pairs_distances(G)
    for x in range(G.n):
        for y in range(x + 1, G.n):
            if dm[x, y] == 3 and mis_avoiding(G, (x, y)) is None:
                return False
    return True
