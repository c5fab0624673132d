"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

from collections import deque

from hypothesis import strategies as st

from ctk import Graph, build_graph


def path_graph(n: int) -> Graph:
    return build_graph([(i, i + 1) for i in range(n - 1)], n=n)


def star_graph(n: int) -> Graph:
    return build_graph([(0, i) for i in range(1, n)], n=n)


def cycle_graph(n: int) -> Graph:
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)], n=n)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_connection_numbers(g: Graph) -> tuple[int, ...]:
    """Independent distance-2 counter: full BFS from every vertex."""
    return tuple(
        sum(1 for d in bfs_distances(g, v) if d == 2) for v in range(g.n)
    )


@st.composite
def random_trees(draw: st.DrawFn, min_size: int = 1, max_size: int = 10):
    """Random labeled tree: each vertex i >= 1 attaches to a random
    earlier vertex, then labels are shuffled by a drawn permutation."""
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    perm = draw(st.permutations(range(n)))
    edges = []
    for i in range(1, n):
        parent = draw(st.integers(min_value=0, max_value=i - 1))
        edges.append((perm[i], perm[parent]))
    return build_graph(edges, n=n)


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def isomorphic(a: Graph, b: Graph) -> bool:
    import networkx as nx

    return nx.is_isomorphic(to_networkx(a), to_networkx(b))
