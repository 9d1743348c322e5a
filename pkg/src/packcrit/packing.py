"""Packing colorings: verification, exact chromatic value, counting bounds.

A k-packing coloring partitions the vertices into classes X_1..X_k where
class X_i only holds vertices pairwise further apart than i.  The exact
solver deepens k starting from a counting lower bound and searches with
per-class capacity limits (the exact maximum i-packing sizes), distance-ball
conflict masks, and interchangeable-high-color symmetry breaking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import NamedTuple, Optional

from .errors import DisconnectedGraphError, PreconditionError
from .graphs import (
    Graph,
    all_pairs_distances,
    components,
    diameter,
    induced_subgraph,
    is_connected,
)
from .independence import mis_size_bits


@dataclass(frozen=True)
class PackingColoring:
    """Vertex -> color map witnessing a k-packing coloring.

    Colors are 1-based; ``k`` is the largest color and is always used by at
    least one vertex.
    """

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if not self.colors:
            raise ValueError("coloring of an empty vertex set")
        if any(not isinstance(c, int) or c < 1 for c in self.colors):
            raise ValueError("colors must be positive integers")
        if self.k != max(self.colors):
            raise ValueError(f"k={self.k} does not match max color {max(self.colors)}")

    @classmethod
    def from_colors(cls, colors) -> "PackingColoring":
        colors = tuple(colors)
        return cls(colors, max(colors) if colors else 0)


class PackingCheck(NamedTuple):
    ok: bool
    violation: Optional[tuple[int, int, int, float]]  # (color, u, v, distance)


class ChiRho(NamedTuple):
    value: int
    witness: PackingColoring


def verify_packing_coloring(G: Graph, coloring: PackingColoring) -> PackingCheck:
    """Check every color class is an i-packing; report the first violation.

    Unreachable pairs never conflict, so classes may span components.
    """
    if len(coloring.colors) != G.n:
        raise ValueError(f"coloring length {len(coloring.colors)} != vertex count {G.n}")
    if any(c < 1 for c in coloring.colors):
        raise ValueError("colors must be positive")
    dm = all_pairs_distances(G)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(coloring.colors):
        classes.setdefault(c, []).append(v)
    for i, members in sorted(classes.items()):
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                u, v = members[a], members[b]
                if dm[u, v] <= i:
                    return PackingCheck(False, (i, u, v, dm[u, v]))
    return PackingCheck(True, None)


def max_i_packing(G: Graph, i: int) -> int:
    """Exact maximum size of an i-packing (alpha of the i-th distance power)."""
    if G.n < 1:
        raise PreconditionError("i-packing size undefined on the empty graph")
    if i < 1:
        raise ValueError(f"packing index must be positive, got {i}")
    dm = all_pairs_distances(G)
    bits = []
    for v in range(G.n):
        row = dm.row(v)
        bits.append(sum(1 << u for u in range(G.n) if u != v and row[u] <= i))
    return mis_size_bits(bits, (1 << G.n) - 1)


def chi_rho_lower_bound(G: Graph) -> int:
    """Counting bound: classes below the diameter are capped by the exact
    i-packing maxima and every further class is a singleton."""
    if G.n == 0 or not is_connected(G):
        raise DisconnectedGraphError("lower bound requires a connected, non-empty graph")
    d = diameter(G)
    cap_sum = sum(max_i_packing(G, i) for i in range(1, d))
    return max(1, G.n - cap_sum + d - 1)


def diam2_formula(G: Graph) -> int:
    """|V| - alpha + 1, the exact packing chromatic number at diameter two."""
    if G.n == 0 or not is_connected(G):
        raise DisconnectedGraphError("formula requires a connected graph")
    if diameter(G) != 2:
        raise PreconditionError("formula applies only at diameter 2")
    return G.n - mis_size_bits(G.adjacency_bits(), (1 << G.n) - 1) + 1


def _search_k(G: Graph, dm, d: int, caps: list[int], k: int) -> Optional[list[int]]:
    """Find a k-packing coloring of connected G, or prove none exists.

    Vertices are assigned in non-increasing degree order.  Colors i < d
    check a precomputed distance-<=i ball mask and an exact class-size cap;
    colors >= d force singletons, and among the currently empty high colors
    only the smallest is ever tried (they are interchangeable).
    """
    n = G.n
    capf = [0] + [caps[i] if i < d else 1 for i in range(1, k + 1)]
    if sum(capf) < n:
        return None

    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    balls: list[list[int]] = [[0] * n for _ in range(min(d, k + 1))]
    for i in range(1, min(d, k + 1)):
        for v in range(n):
            row = dm.row(v)
            balls[i][v] = sum(1 << u for u in range(n) if u != v and row[u] <= i)

    colors = [0] * n
    class_bits = [0] * (k + 1)
    class_cnt = [0] * (k + 1)

    def dfs(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        vb = 1 << v
        seen_empty_high = False
        for i in range(1, k + 1):
            if class_cnt[i] >= capf[i]:
                continue
            if i >= d:
                if seen_empty_high:
                    continue
                seen_empty_high = True
            elif class_bits[i] & balls[i][v]:
                continue
            colors[v] = i
            class_bits[i] |= vb
            class_cnt[i] += 1
            if dfs(pos + 1):
                return True
            class_bits[i] ^= vb
            class_cnt[i] -= 1
            colors[v] = 0
        return False

    return list(colors) if dfs(0) else None


def _chi_rho_connected(G: Graph) -> tuple[int, list[int]]:
    if G.n == 1:
        return 1, [1]
    dm = all_pairs_distances(G)
    d = diameter(G)
    caps = [0] + [max_i_packing(G, i) for i in range(1, d)]
    lb = max(1, G.n - sum(caps[1:]) + d - 1)
    for k in count(lb):
        found = _search_k(G, dm, d, caps, k)
        if found is not None:
            return k, found
    raise AssertionError("unreachable: n distinct colors always succeed")


def chi_rho(G: Graph) -> ChiRho:
    """Exact packing chromatic number with a verifying witness coloring.

    On disconnected input the value is the maximum over components; the
    witness colors each component optimally and classes merge freely across
    components (cross-component distances are unbounded).
    """
    if G.n == 0:
        raise PreconditionError("packing chromatic number undefined on the empty graph")
    comps = components(G)
    if len(comps) == 1:
        value, cols = _chi_rho_connected(G)
        return ChiRho(value, PackingColoring.from_colors(cols))
    merged = [0] * G.n
    best = 0
    for comp in comps:
        sub, relabel = induced_subgraph(G, comp)
        value, cols = _chi_rho_connected(sub)
        best = max(best, value)
        for old, new in relabel.items():
            merged[old] = cols[new]
    return ChiRho(best, PackingColoring.from_colors(merged))
