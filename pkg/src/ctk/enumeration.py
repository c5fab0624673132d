"""Exhaustive enumeration of non-isomorphic trees with a degree cap.

Trees are exchanged as canonical level sequences: the first entry is 0
for the root, every later entry is the depth of the next vertex in
preorder, and the sequence is the lexicographically greatest one over
all centroid rootings and sibling orders.  Two trees are isomorphic
exactly when their sequences are equal.

The generator builds each canonical sequence once, composing memoized
canonical subtree codes under a centroid: a tree on n vertices either
has a unique centroid whose branches each hold at most (n-1)//2
vertices, or (n even) splits on a central edge into two halves of
exactly n/2.  An independent brute-force oracle decodes every labeled
tree on up to nine vertices and canonicalizes it, for cross-checking.
"""
from __future__ import annotations

import os
from typing import Iterable, Iterator

from .graphs import Graph, build_graph

TreeCode = tuple[int, ...]

DEFAULT_SCALE_GUARD = 14


class ScaleGuardError(ValueError):
    """Raised when an exhaustive search is asked to exceed the scale guard."""


def scale_guard_limit() -> int:
    """Vertex-count ceiling for exhaustive searches.

    Defaults to DEFAULT_SCALE_GUARD; the CTK_SCALE_GUARD environment
    variable overrides it.
    """
    raw = os.environ.get("CTK_SCALE_GUARD")
    if raw is None:
        return DEFAULT_SCALE_GUARD
    try:
        limit = int(raw)
    except ValueError:
        raise ValueError(
            f"CTK_SCALE_GUARD must be an integer, got {raw!r}"
        ) from None
    if limit < 1:
        raise ValueError("CTK_SCALE_GUARD must be positive")
    return limit


def _check_levels(seq: TreeCode) -> None:
    for d in seq:
        if not isinstance(d, int):
            raise ValueError(f"level entries must be integers, got {d!r}")
    if seq[0] != 0:
        raise ValueError(f"level sequence must start with 0, got {seq[0]}")
    for i in range(1, len(seq)):
        if not 1 <= seq[i] <= seq[i - 1] + 1:
            raise ValueError(
                f"level {seq[i]} at position {i} does not follow {seq[i - 1]}"
            )


def tree_from_levels(levels: Iterable[int]) -> Graph:
    """Decode a level sequence into the tree it denotes.

    Vertex i is the i-th entry; each non-root vertex attaches to the
    most recent earlier vertex one level up.
    """
    seq = tuple(levels)
    if not seq:
        raise ValueError("level sequence is empty")
    _check_levels(seq)
    edges = []
    last = [0] * len(seq)
    for v in range(1, len(seq)):
        d = seq[v]
        edges.append((last[d - 1], v))
        last[d] = v
    return build_graph(edges, n=len(seq))


def format_levels(code: TreeCode) -> str:
    return " ".join(str(d) for d in code)


def parse_levels(text: str) -> TreeCode:
    tokens = text.split()
    if not tokens:
        raise ValueError("level sequence is empty")
    try:
        seq = tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"level sequence has a non-integer token: {text!r}") from None
    _check_levels(seq)
    return seq


def _check_args(n: int, max_degree: int | None) -> None:
    if not isinstance(n, int):
        raise ValueError(f"vertex count must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if max_degree is not None:
        if not isinstance(max_degree, int):
            raise ValueError(f"degree cap must be an integer, got {max_degree!r}")
        if max_degree < 1:
            raise ValueError(f"degree cap must be at least 1, got {max_degree}")


def _suffix_max_len(pool: list[TreeCode]) -> list[int]:
    smax = [0] * len(pool)
    best = 0
    for i in range(len(pool) - 1, -1, -1):
        if len(pool[i]) > best:
            best = len(pool[i])
        smax[i] = best
    return smax


def _compose(
    pool: list[TreeCode],
    smax: list[int],
    budget: int,
    slots: int,
    start: int,
    prefix: list[int],
    out: list[TreeCode],
) -> None:
    """Append every code formed by extending prefix with a non-increasing
    choice of blocks from pool[start:] totalling budget vertices, using
    at most slots blocks.  Pool is descending, so output is too."""
    if budget == 0:
        out.append(tuple(prefix))
        return
    if slots == 0:
        return
    for i in range(start, len(pool)):
        blk = pool[i]
        size = len(blk)
        if size > budget:
            continue
        if budget - size > (slots - 1) * smax[i]:
            continue
        prefix.extend(blk)
        _compose(pool, smax, budget - size, slots - 1, i, prefix, out)
        del prefix[len(prefix) - size:]


def _hang_table(max_size: int, kid_cap: int) -> tuple[list[list[TreeCode]], list[TreeCode]]:
    """Canonical codes of rooted trees in which every vertex, root
    included, has at most kid_cap children (the shape a subtree takes
    when hung below an edge).  Returns per-size lists, each descending,
    and the combined pool of depth-shifted blocks, descending."""
    table: list[list[TreeCode]] = [[] for _ in range(max_size + 1)]
    if max_size >= 1:
        table[1] = [(0,)]
    pool: list[TreeCode] = [(1,)]
    for s in range(2, max_size + 1):
        out: list[TreeCode] = []
        _compose(pool, _suffix_max_len(pool), s - 1, kid_cap, 0, [0], out)
        table[s] = out
        pool.extend(tuple(d + 1 for d in code) for code in out)
        pool.sort(reverse=True)
    return table, pool


def _split_blocks(code: TreeCode) -> list[TreeCode]:
    blocks: list[TreeCode] = []
    cur: list[int] = []
    for d in code[1:]:
        if d == 1 and cur:
            blocks.append(tuple(cur))
            cur = []
        cur.append(d)
    if cur:
        blocks.append(tuple(cur))
    return blocks


def _join_halves(root_half: TreeCode, hung_half: TreeCode) -> TreeCode:
    """Code of the bicentral tree rooted at root_half's root, with the
    other half hanging as one more branch."""
    blocks = _split_blocks(root_half)
    blocks.append(tuple(d + 1 for d in hung_half))
    blocks.sort(reverse=True)
    out = [0]
    for blk in blocks:
        out.extend(blk)
    return tuple(out)


def enumerate_trees(n: int, max_degree: int | None = None) -> Iterator[TreeCode]:
    """Yield the canonical level sequence of every tree on n vertices
    whose maximum degree is at most max_degree (unbounded when None),
    in descending lexicographic order.

    Each isomorphism class is produced exactly once.  The stream is
    materialized internally, so memory grows with the class count; the
    caller is responsible for honoring scale_guard_limit().
    """
    _check_args(n, max_degree)
    if n == 0:
        return
    if n == 1:
        yield (0,)
        return
    if n == 2:
        yield (0, 1)
        return
    if max_degree == 1:
        return
    deg = max_degree if max_degree is not None else n - 1
    half = (n - 1) // 2
    table, pool = _hang_table(n // 2, deg - 1)

    codes: list[TreeCode] = []
    pool_uni = [blk for blk in pool if len(blk) <= half]
    _compose(
        pool_uni,
        _suffix_max_len(pool_uni),
        n - 1,
        min(deg, n - 1),
        0,
        [0],
        codes,
    )
    if n % 2 == 0:
        halves = table[n // 2]
        for i in range(len(halves)):
            for j in range(i, len(halves)):
                a, b = halves[i], halves[j]
                codes.append(max(_join_halves(a, b), _join_halves(b, a)))
    codes.sort(reverse=True)
    yield from codes


def prufer_oracle(n: int, max_degree: int | None = None) -> set[TreeCode]:
    """Canonical codes of all degree-capped trees on n vertices, found
    the slow way: decode every one of the n**(n-2) labeled trees and
    canonicalize.  Independent of enumerate_trees by construction.
    Limited to n <= 9 so a packed code fits one machine word.
    """
    _check_args(n, max_degree)
    if n < 1 or n > 9:
        raise ValueError(f"oracle supports 1 <= n <= 9, got {n}")
    if n == 1:
        return {(0,)}
    if n == 2:
        return {(0, 1)}
    if max_degree == 1:
        return set()
    # heavy imports deferred: the jit compile only pays off when called
    import numpy as np

    from . import _prufer

    cap = max_degree - 1 if max_degree is not None else n
    packed = np.unique(_prufer.packed_codes(n, cap))
    shifts = [4 * (n - 1 - i) for i in range(n)]
    return {tuple(int((v >> s) & 15) for s in shifts) for v in packed}
