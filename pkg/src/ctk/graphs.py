"""Simple undirected graphs with degree and connection-number machinery.

Vertices are dense integer ids 0..n-1.  Graphs are immutable once built;
every constructor goes through build_graph so the invariants (no loops,
no parallel edges, symmetric adjacency) hold everywhere downstream.
"""
from __future__ import annotations

from typing import Iterable, Iterator


class Graph:
    """Immutable simple graph: vertex count plus sorted adjacency tuples."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...]):
        self.n = n
        self.adj = adj

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
    """Build a validated Graph from an edge list.

    n defaults to max endpoint + 1 (isolated trailing vertices need an
    explicit n).  Rejects self-loops, duplicate edges, non-integer or
    negative ids, and endpoints outside 0..n-1.
    """
    edge_list = list(edges)
    for e in edge_list:
        u, v = e
        if not isinstance(u, int) or not isinstance(v, int):
            raise ValueError(f"non-integer vertex id in edge {e!r}")
        if u < 0 or v < 0:
            raise ValueError(f"negative vertex id in edge {e!r}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
    if n is None:
        n = max((max(u, v) for u, v in edge_list), default=-1) + 1
    elif n < 0:
        raise ValueError("vertex count must be non-negative")
    seen: set[tuple[int, int]] = set()
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_list:
        if u >= n or v >= n:
            raise ValueError(f"edge ({u}, {v}) endpoint outside 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in nbrs))


def degrees(g: Graph) -> tuple[int, ...]:
    """Degree of every vertex, indexed by vertex id."""
    return tuple(len(a) for a in g.adj)


def connection_numbers(g: Graph) -> tuple[int, ...]:
    """Number of vertices at distance exactly two from each vertex.

    Computed as the union of the neighbors' neighborhoods minus the
    closed neighborhood; equivalent to counting distance-2 vertices by
    BFS, which the tests use as the independent oracle.
    """
    taus = []
    for v in range(g.n):
        second: set[int] = set()
        for w in g.adj[v]:
            second.update(g.adj[w])
        second.difference_update(g.adj[v])
        second.discard(v)
        taus.append(len(second))
    return tuple(taus)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (vacuous for n=0)."""
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def is_tree(g: Graph) -> bool:
    """True iff the graph is connected with exactly n - 1 edges (n >= 1)."""
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_triangle_and_quadrangle_free(g: Graph) -> bool:
    """True iff the graph contains no 3-cycle and no 4-cycle.

    A triangle exists iff some adjacent pair shares a neighbor; a
    quadrangle exists iff some pair shares two neighbors.
    """
    sets = [set(a) for a in g.adj]
    for u in range(g.n):
        su = sets[u]
        for v in range(u + 1, g.n):
            common = len(su & sets[v])
            if common >= 2:
                return False
            if common >= 1 and v in su:
                return False
    return True


def is_path_graph(g: Graph) -> bool:
    """True iff the graph is a path (single vertex counts)."""
    if not is_tree(g):
        return False
    if g.n <= 2:
        return True
    degs = sorted(degrees(g))
    return degs[0] == degs[1] == 1 and degs[2] == degs[-1] == 2


def is_star_graph(g: Graph) -> bool:
    """True iff the graph is a star (one center adjacent to all others)."""
    if not is_tree(g):
        return False
    return g.n <= 2 or max(degrees(g)) == g.n - 1


def is_complete_graph(g: Graph) -> bool:
    """True iff every vertex pair is adjacent."""
    return g.m == g.n * (g.n - 1) // 2


def _centroids(g: Graph) -> list[int]:
    """Centroid vertex (or adjacent pair) minimizing the largest component
    left by the vertex's removal."""
    n = g.n
    if n == 1:
        return [0]
    order = [0]
    parent = [-1] * n
    seen = [False] * n
    seen[0] = True
    for u in order:
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    size = [1] * n
    max_child = [0] * n
    for u in reversed(order[1:]):
        p = parent[u]
        size[p] += size[u]
        if size[u] > max_child[p]:
            max_child[p] = size[u]
    best = n + 1
    cents: list[int] = []
    for v in range(n):
        weight = max(n - size[v], max_child[v])
        if weight < best:
            best = weight
            cents = [v]
        elif weight == best:
            cents.append(v)
    return cents


def _rooted_levels(g: Graph, root: int) -> tuple[int, ...]:
    """Canonical level sequence of the tree rooted at root.

    The sequence lists vertex depths in preorder with sibling subtrees
    visited in descending lexicographic order of their own sequences,
    which makes it the maximal level sequence over all child orderings.
    """

    def walk(v: int, parent: int) -> tuple[int, ...]:
        subs = sorted((walk(w, v) for w in g.adj[v] if w != parent), reverse=True)
        out = [0]
        for s in subs:
            out.extend(d + 1 for d in s)
        return tuple(out)

    return walk(root, -1)


def canonical_tree_code(g: Graph) -> tuple[int, ...]:
    """Canonical level sequence identifying the tree up to isomorphism.

    Rooted at the centroid; a bicentroidal tree takes the lexicographically
    larger of its two centroid rootings.  Equal codes iff isomorphic.
    """
    if not is_tree(g):
        raise ValueError("canonical codes are defined for trees only")
    return max(_rooted_levels(g, r) for r in _centroids(g))
