"""Degree- and connection-number-based topological indices.

Index names follow the usual abbreviations: m1/m2 are the first and
second Zagreb indices, zc1/zc2 the first and second Zagreb connection
indices, and zc1star the modified first Zagreb connection index.  Every
index that has both a vertex form and an edge form is implemented twice
and cross-checked in index_report.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .graphs import (
    Graph,
    connection_numbers,
    degrees,
    is_triangle_and_quadrangle_free,
)

PhiFunction = Union[str, Callable[[int, int], float]]


def first_zagreb(g: Graph) -> int:
    """Sum of squared vertex degrees."""
    return sum(d * d for d in degrees(g))


def first_zagreb_edge(g: Graph) -> int:
    """Sum of endpoint degrees over all edges; equals first_zagreb."""
    deg = degrees(g)
    return sum(deg[u] + deg[v] for u, v in g.edges())


def second_zagreb(g: Graph) -> int:
    """Sum of endpoint degree products over all edges."""
    deg = degrees(g)
    return sum(deg[u] * deg[v] for u, v in g.edges())


def modified_connection_zagreb(g: Graph) -> int:
    """Sum of degree times connection number over all vertices."""
    deg = degrees(g)
    tau = connection_numbers(g)
    return sum(d * t for d, t in zip(deg, tau))


def modified_connection_zagreb_edge(g: Graph) -> int:
    """Sum of endpoint connection numbers over all edges.

    Equal to the vertex form for every graph: each vertex contributes
    its connection number once per incident edge.
    """
    tau = connection_numbers(g)
    return sum(tau[u] + tau[v] for u, v in g.edges())


def first_connection_zagreb(g: Graph) -> int:
    """Sum of squared connection numbers."""
    return sum(t * t for t in connection_numbers(g))


def second_connection_zagreb(g: Graph) -> int:
    """Sum of endpoint connection-number products over all edges."""
    tau = connection_numbers(g)
    return sum(tau[u] * tau[v] for u, v in g.edges())


def bond_incident_connection(g: Graph, phi: PhiFunction):
    """Generic bond-incident-connection index.

    Sums phi(tau_u, tau_v) over unordered connection-number pairs of
    edges, weighted by how often each pair occurs.  phi is either a
    named builtin ("sum" or "product") or a callback, which must be
    symmetric and non-negative on every occurring pair.
    """
    if phi == "sum":
        fn = lambda a, b: a + b
        builtin = True
    elif phi == "product":
        fn = lambda a, b: a * b
        builtin = True
    elif callable(phi):
        fn = phi
        builtin = False
    else:
        raise ValueError(f"phi must be 'sum', 'product', or a callable, got {phi!r}")
    _, _, conn_pairs = partition_counts(g)
    total = 0
    for (a, b), count in sorted(conn_pairs.items()):
        value = fn(a, b)
        if not builtin:
            if value != fn(b, a):
                raise ValueError(f"phi is asymmetric on pair ({a}, {b})")
            if value < 0:
                raise ValueError(f"phi is negative on pair ({a}, {b})")
        total += count * value
    return total


def partition_counts(
    g: Graph,
) -> tuple[dict[int, int], dict[tuple[int, int], int], dict[tuple[int, int], int]]:
    """Vertex counts by degree plus edge counts by endpoint degree pair
    and by endpoint connection-number pair (pairs stored with a <= b)."""
    deg = degrees(g)
    tau = connection_numbers(g)
    by_degree: dict[int, int] = {}
    for d in deg:
        by_degree[d] = by_degree.get(d, 0) + 1
    degree_pairs: dict[tuple[int, int], int] = {}
    conn_pairs: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        dk = (deg[u], deg[v]) if deg[u] <= deg[v] else (deg[v], deg[u])
        degree_pairs[dk] = degree_pairs.get(dk, 0) + 1
        tk = (tau[u], tau[v]) if tau[u] <= tau[v] else (tau[v], tau[u])
        conn_pairs[tk] = conn_pairs.get(tk, 0) + 1
    return by_degree, degree_pairs, conn_pairs


@dataclass(frozen=True)
class IndexReport:
    """All indices of one graph plus the partition counts behind them."""

    n: int
    m: int
    m1: int
    m2: int
    zc1star: int
    zc1: int
    zc2: int
    degree_counts: dict[int, int]
    degree_edge_counts: dict[tuple[int, int], int]
    connection_edge_counts: dict[tuple[int, int], int]
    triangle_quadrangle_free: bool


def index_report(g: Graph) -> IndexReport:
    """Compute every index once, cross-checking vertex and edge forms."""
    m1 = first_zagreb(g)
    if m1 != first_zagreb_edge(g):
        raise RuntimeError("first Zagreb vertex and edge forms disagree")
    zc1star = modified_connection_zagreb(g)
    if zc1star != modified_connection_zagreb_edge(g):
        raise RuntimeError("modified connection Zagreb vertex and edge forms disagree")
    by_degree, degree_pairs, conn_pairs = partition_counts(g)
    if sum(by_degree.values()) != g.n:
        raise RuntimeError("degree counts do not cover all vertices")
    return IndexReport(
        n=g.n,
        m=g.m,
        m1=m1,
        m2=second_zagreb(g),
        zc1star=zc1star,
        zc1=first_connection_zagreb(g),
        zc2=second_connection_zagreb(g),
        degree_counts=by_degree,
        degree_edge_counts=degree_pairs,
        connection_edge_counts=conn_pairs,
        triangle_quadrangle_free=is_triangle_and_quadrangle_free(g),
    )
