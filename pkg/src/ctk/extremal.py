"""Extremal tree families and brute-force search over enumerated trees.

The named families are the witnesses for the extreme values of the
degree-weighted connection sum over trees with maximum degree four:
the path minimizes it, and for each order a family of caterpillar-like
trees built from degree-4 vertices maximizes it.  Membership in the
maximizing families is a degree-profile condition, so a family can
contain several non-isomorphic trees of the same order; the
constructors return one canonical member and the classifier tests
membership.
"""
from __future__ import annotations

from dataclasses import dataclass

from .enumeration import (
    ScaleGuardError,
    TreeCode,
    enumerate_trees,
    scale_guard_limit,
    tree_from_levels,
)
from .graphs import Graph, build_graph, degrees, is_tree
from .indices import (
    first_connection_zagreb,
    first_zagreb,
    modified_connection_zagreb,
    second_connection_zagreb,
    second_zagreb,
)

OBJECTIVES = {
    "zc1star": modified_connection_zagreb,
    "m1": first_zagreb,
    "m2": second_zagreb,
    "zc1": first_connection_zagreb,
    "zc2": second_connection_zagreb,
}

FAMILIES = ("path", "star", "complete", "ct0", "ct1", "ct2")

_CT_MIN_ORDER = {"ct0": 9, "ct1": 7, "ct2": 8}
_CT_RESIDUE = {"ct0": 0, "ct1": 1, "ct2": 2}


def _ct_edges(kind: str, n: int) -> list[tuple[int, int]]:
    """One member of the requested maximizing family: a spine of
    degree-4 vertices padded with leaves, ending in the family's
    distinguishing vertex (degree 2 with one leaf for ct0, degree 3
    with two leaves for ct1, nothing extra for ct2)."""
    spine = {"ct0": (n - 3) // 3, "ct1": (n - 4) // 3, "ct2": (n - 2) // 3}[kind]
    edges = []
    nxt = spine

    def add_leaves(v: int, k: int) -> None:
        nonlocal nxt
        for _ in range(k):
            edges.append((v, nxt))
            nxt += 1

    for v in range(spine - 1):
        edges.append((v, v + 1))
    for v in range(spine):
        first = v == 0
        last = v == spine - 1
        if kind == "ct2":
            add_leaves(v, 3 if (first or last) else 2)
        else:
            # the tail vertex consumes one slot on the last spine vertex
            add_leaves(v, 3 if first else 2)
    if kind != "ct2":
        tail = nxt
        nxt += 1
        edges.append((spine - 1, tail))
        add_leaves(tail, 2 if kind == "ct1" else 1)
    return edges


def construct_family(kind: str, n: int) -> Graph:
    """Build the named family member on n vertices.

    Kinds: path (n >= 1), star (n >= 2), complete (n >= 1), and the
    maximizing tree families ct0 (n >= 9, n divisible by 3), ct1
    (n >= 7, n = 1 mod 3), ct2 (n >= 8, n = 2 mod 3).
    """
    if kind not in FAMILIES:
        raise ValueError(f"unknown family {kind!r}, expected one of {FAMILIES}")
    if not isinstance(n, int):
        raise ValueError(f"vertex count must be an integer, got {n!r}")
    if kind == "path":
        if n < 1:
            raise ValueError(f"path needs n >= 1, got {n}")
        return build_graph([(i, i + 1) for i in range(n - 1)], n=n)
    if kind == "star":
        if n < 2:
            raise ValueError(f"star needs n >= 2, got {n}")
        return build_graph([(0, i) for i in range(1, n)], n=n)
    if kind == "complete":
        if n < 1:
            raise ValueError(f"complete graph needs n >= 1, got {n}")
        return build_graph(
            [(i, j) for i in range(n) for j in range(i + 1, n)], n=n
        )
    lo = _CT_MIN_ORDER[kind]
    res = _CT_RESIDUE[kind]
    if n < lo or n % 3 != res:
        raise ValueError(
            f"{kind} needs n >= {lo} with n = {res} mod 3, got {n}"
        )
    return build_graph(_ct_edges(kind, n), n=n)


def classify_max_family(g: Graph) -> str | None:
    """Name the maximizing family g belongs to, or None.

    Membership is structural: a tree with maximum degree four whose
    degree profile is all 1s and 4s except for either nothing (ct2),
    one degree-2 vertex with a pendent neighbor (ct0), or one degree-3
    vertex with two pendent neighbors (ct1), at the family's minimum
    order or above.
    """
    if not is_tree(g) or g.n < 7:
        return None
    degs = degrees(g)
    if max(degs) > 4:
        return None
    twos = [v for v in range(g.n) if degs[v] == 2]
    threes = [v for v in range(g.n) if degs[v] == 3]
    if not twos and not threes:
        return "ct2" if g.n >= 8 else None
    if len(twos) == 1 and not threes:
        v = twos[0]
        if g.n >= 9 and any(degs[u] == 1 for u in g.neighbors(v)):
            return "ct0"
        return None
    if len(threes) == 1 and not twos:
        v = threes[0]
        if sum(1 for u in g.neighbors(v) if degs[u] == 1) >= 2:
            return "ct1"
        return None
    return None


def closed_form(n: int, which: str) -> int:
    """Exact predicted value of the degree-weighted connection sum.

    which = "min_tree": the minimum over trees of order n >= 5 (the
    path's value).  which = "star": the star's value for n >= 2.
    which = "max_chemical": the maximum over trees of order n >= 7
    with maximum degree four.
    """
    if which == "min_tree":
        if n < 5:
            raise ValueError(f"min_tree closed form needs n >= 5, got {n}")
        return 4 * n - 10
    if which == "star":
        if n < 2:
            raise ValueError(f"star closed form needs n >= 2, got {n}")
        return (n - 1) * (n - 2)
    if which == "max_chemical":
        if n < 7:
            raise ValueError(f"max_chemical closed form needs n >= 7, got {n}")
        if n % 3 in (0, 1):
            return 10 * (n - 4)
        return 2 * (5 * n - 19)
    raise ValueError(f"unknown closed form {which!r}")


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    max_degree: int | None
    objective: str
    direction: str
    value: int
    witnesses: tuple[TreeCode, ...]


def brute_force_extremal(
    n: int,
    objective: str = "zc1star",
    direction: str = "min",
    max_degree: int | None = 4,
    force: bool = False,
) -> ExtremalResult:
    """Scan every tree of order n (maximum degree capped when given)
    and report the extreme objective value with all attaining trees.

    Orders above scale_guard_limit() are refused unless force is set.
    """
    if objective not in OBJECTIVES:
        raise ValueError(
            f"unknown objective {objective!r}, expected one of {sorted(OBJECTIVES)}"
        )
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    limit = scale_guard_limit()
    if n > limit and not force:
        raise ScaleGuardError(
            f"order {n} exceeds the scale guard ({limit}); "
            "set force or raise CTK_SCALE_GUARD"
        )
    func = OBJECTIVES[objective]
    best: int | None = None
    witnesses: list[TreeCode] = []
    for code in enumerate_trees(n, max_degree):
        value = func(tree_from_levels(code))
        if best is None:
            best = value
            witnesses = [code]
            continue
        if (direction == "min" and value < best) or (
            direction == "max" and value > best
        ):
            best = value
            witnesses = [code]
        elif value == best:
            witnesses.append(code)
    if best is None:
        raise ValueError(
            f"no trees of order {n} with degree cap {max_degree}"
        )
    witnesses.sort(reverse=True)
    return ExtremalResult(
        n=n,
        max_degree=max_degree,
        objective=objective,
        direction=direction,
        value=best,
        witnesses=tuple(witnesses),
    )
