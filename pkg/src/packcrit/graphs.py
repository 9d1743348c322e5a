"""Immutable simple-graph core: construction, metrics, and block structure.

Vertices are dense integers ``0..n-1``.  All operations are pure functions;
``Graph`` and ``DistanceMatrix`` never mutate after construction, so values
can be shared freely across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DisconnectedGraphError, GraphInputError

Edge = tuple[int, int]

#: Marker for pairs with no connecting path.  Strictly greater than every
#: finite distance, so packing-feasibility comparisons work unchanged.
UNREACHABLE = float("inf")


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class Graph:
    """Finite simple undirected graph on the vertex set ``{0, ..., n-1}``.

    Equality and hashing are by exact labeled structure (vertex count plus
    edge set), not by isomorphism.  Duplicate edges in the input collapse;
    self-loops and out-of-range endpoints are rejected.
    """

    __slots__ = ("n", "_adj", "_edges", "_hash", "_bits")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge {pair!r}: endpoint out of range for n={n}")
            if u == v:
                raise GraphInputError(f"edge {pair!r}: self-loop")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)
        self._edges = frozenset(_norm(u, v) for u in range(n) for v in adj[u] if u < v)
        self._hash = hash((n, self._edges))
        self._bits: Optional[tuple[int, ...]] = None

    # -- basic accessors ---------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._edges

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, sorted."""
        return sorted(self._edges)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self.n)

    def adjacency_bits(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmask; cached on first use."""
        if self._bits is None:
            self._bits = tuple(sum(1 << w for w in nbrs) for nbrs in self._adj)
        return self._bits

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self._edges)})"


def build_graph(n: int, edges: Iterable[Edge] = ()) -> Graph:
    """Construct a graph, validating endpoints and rejecting self-loops."""
    return Graph(n, edges)


class DistanceMatrix:
    """All-pairs shortest-path distances; ``UNREACHABLE`` across components."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: tuple[tuple[float, ...], ...]):
        self.n = len(rows)
        self.rows = rows

    def __getitem__(self, uv: Edge) -> float:
        u, v = uv
        return self.rows[u][v]

    def row(self, u: int) -> tuple[float, ...]:
        return self.rows[u]

    def is_reachable(self, u: int, v: int) -> bool:
        return self.rows[u][v] != UNREACHABLE


def _bfs_row(G: Graph, src: int) -> tuple[float, ...]:
    dist: list[float] = [UNREACHABLE] * G.n
    dist[src] = 0
    q = deque([src])
    while q:
        v = q.popleft()
        dv = dist[v]
        for w in G.neighbors(v):
            if dist[w] == UNREACHABLE:
                dist[w] = dv + 1
                q.append(w)
    return tuple(dist)


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    """BFS-exact distances for every vertex pair."""
    return DistanceMatrix(tuple(_bfs_row(G, v) for v in range(G.n)))


# -- metrics ---------------------------------------------------------------


def eccentricity(G: Graph, u: int) -> int:
    """Maximum distance from ``u``; requires a connected, non-empty graph."""
    if G.n == 0:
        raise DisconnectedGraphError("eccentricity undefined on the empty graph")
    row = _bfs_row(G, u)
    ecc = max(row)
    if ecc == UNREACHABLE:
        raise DisconnectedGraphError("eccentricity undefined: graph is disconnected")
    return int(ecc)


def _eccentricities(G: Graph) -> list[int]:
    if G.n == 0:
        raise DisconnectedGraphError("metric undefined on the empty graph")
    out = []
    for v in range(G.n):
        ecc = max(_bfs_row(G, v))
        if ecc == UNREACHABLE:
            raise DisconnectedGraphError("metric undefined: graph is disconnected")
        out.append(int(ecc))
    return out


def radius(G: Graph) -> int:
    return min(_eccentricities(G))


def diameter(G: Graph) -> int:
    return max(_eccentricities(G))


def center(G: Graph) -> frozenset[int]:
    """Vertices of minimum eccentricity."""
    eccs = _eccentricities(G)
    rad = min(eccs)
    return frozenset(v for v in range(G.n) if eccs[v] == rad)


# -- deletions -------------------------------------------------------------


def delete_edge(G: Graph, e: Edge) -> Graph:
    e = _norm(*e)
    if not G.has_edge(*e):
        raise GraphInputError(f"edge {e!r} not in graph")
    return Graph(G.n, (f for f in G.edges() if f != e))


def delete_vertex(G: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove ``v`` and relabel the remaining vertices to ``0..n-2``.

    Returns the new graph together with the old->new relabeling map.
    """
    if not (0 <= v < G.n):
        raise GraphInputError(f"vertex {v} not in graph")
    relabel = {}
    nxt = 0
    for u in range(G.n):
        if u != v:
            relabel[u] = nxt
            nxt += 1
    edges = [(relabel[a], relabel[b]) for (a, b) in G.edges() if v not in (a, b)]
    return Graph(G.n - 1, edges), relabel


def induced_subgraph(G: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vs``, relabeled densely; returns old->new map."""
    keep = sorted(set(vs))
    relabel = {u: i for i, u in enumerate(keep)}
    kset = set(keep)
    edges = [(relabel[a], relabel[b]) for (a, b) in G.edges() if a in kset and b in kset]
    return Graph(len(keep), edges), relabel


# -- connectivity ----------------------------------------------------------


def components(G: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest member.  Empty graph: []."""
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in G.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(G: Graph) -> bool:
    """True when the graph has at most one component (vacuously for n=0)."""
    return len(components(G)) <= 1


# -- articulation structure -------------------------------------------------


def _dfs_structure(G: Graph):
    """Iterative DFS lowlink pass shared by cut-vertex/bridge/block code.

    Returns (disc, low, parent, root_children, finish_stack) where
    finish_stack lists (child, parent) tree edges in finish order.
    """
    n = G.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    root_children = [0] * n
    finish: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, iter(G.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = v
                    if v == root:
                        root_children[root] += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(G.neighbors(w))))
                    advanced = True
                    break
                if w != parent[v] and disc[w] < low[v]:
                    low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    finish.append((v, p))
    return disc, low, parent, root_children, finish


def cut_vertices(G: Graph) -> frozenset[int]:
    """Articulation points (over all components)."""
    disc, low, parent, root_children, finish = _dfs_structure(G)
    cuts = set()
    for child, p in finish:
        if parent[p] == -1:
            continue  # root handled by child count below
        if low[child] >= disc[p]:
            cuts.add(p)
    for v in range(G.n):
        if parent[v] == -1 and root_children[v] >= 2:
            cuts.add(v)
    return frozenset(cuts)


def bridges(G: Graph) -> frozenset[Edge]:
    """Cut edges (over all components)."""
    disc, low, parent, _children, finish = _dfs_structure(G)
    return frozenset(_norm(child, p) for child, p in finish if low[child] > disc[p])


@dataclass(frozen=True)
class Block:
    """A maximal subgraph without a cut vertex, as a vertex set plus its
    induced edges.  Isolated vertices form edgeless singleton blocks."""

    vertices: frozenset[int]
    edges: frozenset[Edge]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def is_k2(self) -> bool:
        return len(self.vertices) == 2 and len(self.edges) == 1

    @property
    def is_cycle(self) -> bool:
        return len(self.vertices) >= 3 and len(self.edges) == len(self.vertices)

    @property
    def is_complete(self) -> bool:
        k = len(self.vertices)
        return len(self.edges) == k * (k - 1) // 2


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices, and the bipartite block-cut tree.

    ``tree_edges`` pairs a block index with each cut vertex it contains;
    every edge of the graph lies in exactly one block.
    """

    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    tree_edges: tuple[tuple[int, int], ...]

    def blocks_at(self, v: int) -> list[Block]:
        return [b for b in self.blocks if v in b.vertices]


def block_decomposition(G: Graph) -> BlockDecomposition:
    """Decompose a connected graph into its blocks.

    Edge-stack variant of the lowlink DFS: when a child subtree cannot reach
    above its attachment point, the edges accumulated since the tree edge to
    that child form one block.
    """
    if G.n == 0 or not is_connected(G):
        raise DisconnectedGraphError("block decomposition requires a connected, non-empty graph")
    n = G.n
    if n == 1:
        return BlockDecomposition((Block(frozenset({0}), frozenset()),), frozenset(), ())

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    estack: list[Edge] = []
    raw_blocks: list[list[Edge]] = []
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    stack = [(root, iter(G.neighbors(root)))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                estack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, iter(G.neighbors(w))))
                advanced = True
                break
            if w != parent[v] and disc[w] < disc[v]:
                estack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    blk = []
                    while True:
                        e = estack.pop()
                        blk.append(e)
                        if e == (p, v):
                            break
                    raw_blocks.append(blk)

    blocks = []
    for blk in raw_blocks:
        vs = frozenset(x for e in blk for x in e)
        blocks.append(Block(vs, frozenset(_norm(*e) for e in blk)))
    blocks.sort(key=lambda b: sorted(b.vertices))

    counts: dict[int, int] = {}
    for b in blocks:
        for v in b.vertices:
            counts[v] = counts.get(v, 0) + 1
    cuts = frozenset(v for v, c in counts.items() if c >= 2)
    tree = tuple(
        (i, v) for i, b in enumerate(blocks) for v in sorted(b.vertices) if v in cuts
    )
    return BlockDecomposition(tuple(blocks), cuts, tree)


# -- structural predicates ---------------------------------------------------


def is_tree(G: Graph) -> bool:
    """Connected and acyclic (the one-vertex graph counts)."""
    return G.n >= 1 and G.edge_count == G.n - 1 and is_connected(G)


def is_cactus(G: Graph) -> bool:
    """Connected with every block a cycle or a K2.  Trees qualify."""
    if G.n == 0 or not is_connected(G):
        return False
    if G.n == 1:
        return True
    return all(b.is_k2 or b.is_cycle for b in block_decomposition(G).blocks)


def is_block_graph(G: Graph) -> bool:
    """Connected with every block complete."""
    if G.n == 0 or not is_connected(G):
        return False
    if G.n == 1:
        return True
    return all(b.is_complete for b in block_decomposition(G).blocks)


def universal_vertices(G: Graph) -> frozenset[int]:
    """Vertices adjacent to every other vertex."""
    return frozenset(v for v in range(G.n) if G.degree(v) == G.n - 1 and G.n >= 2)


def leaves(G: Graph) -> frozenset[int]:
    """Vertices of degree exactly one."""
    return frozenset(v for v in range(G.n) if G.degree(v) == 1)
