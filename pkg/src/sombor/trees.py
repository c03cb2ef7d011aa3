"""Free-tree enumeration by canonical level sequences.

Each free tree is produced once, as the level sequence (preorder depths) of
its canonical rooted form, following Wright, Richmond, Odlyzko and McKay
(1986). Successors are generated in constant amortised time, with no
isomorphism testing.
"""

from __future__ import annotations

from typing import Iterator

from .errors import SizeUnsupported
from .graph import Graph, from_edge_list

MAX_TREE_ORDER = 12

# Number of free trees on n = 0..12 vertices.
FREE_TREE_COUNTS = (1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)


def levels_to_tree(levels: list[int]) -> Graph:
    """Tree whose preorder depth sequence is ``levels`` (root at depth 0)."""
    edges = []
    stack: list[int] = []  # stack[d] = latest vertex seen at depth d
    for v, depth in enumerate(levels):
        del stack[depth:]
        if depth:
            edges.append((stack[depth - 1], v))
        stack.append(v)
    return from_edge_list(len(levels), edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Successor in the reverse-lexicographic order of rooted level sequences."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split into the first principal subtree and the rest (both re-rooted at depth 0)."""
    try:
        m = levels.index(1, 2)
    except ValueError:
        m = len(levels)
    first = [d - 1 for d in levels[1:m]]
    rest = [0] + levels[m:]
    return first, rest


def _canonical_or_skip(levels: list[int]) -> list[int] | None:
    """Return ``levels`` if it is a canonical free-tree root, else jump ahead.

    A sequence is canonical when the first subtree is no taller than the rest
    of the tree and, at equal heights, is not larger (by size, then
    lexicographically) than the rest.
    """
    first, rest = _split(levels)
    h_first, h_rest = max(first), max(rest)
    ok = h_rest >= h_first
    if ok and h_rest == h_first:
        if len(first) > len(rest) or (len(first) == len(rest) and first > rest):
            ok = False
    if ok:
        return levels
    p = len(first)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        f2, _ = _split(nxt)
        tail = list(range(1, max(f2) + 2))
        nxt[-len(tail):] = tail
    return nxt


def level_sequences(n: int) -> Iterator[list[int]]:
    if not 1 <= n <= MAX_TREE_ORDER:
        raise SizeUnsupported(f"tree enumeration supports 1 <= n <= {MAX_TREE_ORDER}, got {n}")
    if n <= 2:
        yield list(range(n))
        return
    # Start from the path rooted at its centre.
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _canonical_or_skip(levels)
        if levels is not None:
            yield levels
            levels = _next_rooted(levels)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative of every free tree on ``n`` vertices (1 <= n <= 12)."""
    for levels in level_sequences(n):
        yield levels_to_tree(levels)
