"""Exhaustive backtracking search for proper list edge-colorings.

Ground truth for desk-scale instances; deliberately independent of the
engine (no shared bookkeeping, no chains).  Edges are tried in id order
and colors in ascending order, pruning on endpoint clashes.
"""

from __future__ import annotations

from typing import Optional

from .errors import TooLargeError
from .graph import Multigraph
from .lists import ListAssignment

DEFAULT_LIMIT = 10


def exhaustive_color(
    g: Multigraph, lists: ListAssignment, limit: int = DEFAULT_LIMIT
) -> Optional[list[int]]:
    """Some proper list edge-coloring if one exists, else None."""
    if g.m > limit:
        raise TooLargeError(g.m, limit)
    order = [sorted(lists.lists[e]) for e in range(g.m)]
    colors: list[Optional[int]] = [None] * g.m
    used = [set() for _ in range(g.n)]

    def extend(e: int) -> bool:
        if e == g.m:
            return True
        u, v = g.endpoints[e]
        for c in order[e]:
            if c in used[u] or c in used[v]:
                continue
            colors[e] = c
            used[u].add(c)
            used[v].add(c)
            if extend(e + 1):
                return True
            colors[e] = None
            used[u].remove(c)
            used[v].remove(c)
        return False

    return list(colors) if extend(0) else None
