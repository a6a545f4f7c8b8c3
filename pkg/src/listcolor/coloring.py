"""Partial list edge-colorings with maintained used/available sets.

The structure keeps, per vertex, a map from used color to the edge
carrying it and the set of still-available common colors, plus two running
totals: the sum of available-set sizes and the degree-weighted count of
uncolored incidences.  The pair of totals is the lexicographic potential
that certifies progress of the augmenting engine, so both are maintained
in O(1) per color change and re-derivable from scratch by ``verify``.

One actor mutates a coloring at a time; ``copy`` produces an independent
snapshot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import (
    COLOR_CLASH,
    COLOR_NOT_IN_LIST,
    START_NOT_BLANK,
    ColorNotInListError,
    EdgeBlankError,
    EdgeNotBlankError,
    ImproperAssignmentError,
    NotShiftableError,
)
from .graph import Multigraph
from .lists import ListAssignment


class Potential(NamedTuple):
    """(sum of available-set sizes, degree-weighted uncolored incidences).

    Tuples compare lexicographically, which is exactly the order the
    termination argument uses.
    """

    a: int
    d: int


@dataclass(frozen=True)
class Finding:
    kind: str  # "ImproperAssignment" | "ColorNotInList" | "CacheMismatch"
    detail: str


class PartialColoring:
    __slots__ = (
        "g",
        "lists",
        "color",
        "used_edge",
        "available",
        "uncolored",
        "a_total",
        "d_total",
        "ops",
    )

    def __init__(self, g: Multigraph, lists: ListAssignment):
        self.g = g
        self.lists = lists
        self.color: list[Optional[int]] = [None] * g.m
        self.used_edge: list[dict[int, int]] = [{} for _ in range(g.n)]
        self.available: list[set[int]] = [set(lists.common[x]) for x in range(g.n)]
        self.uncolored: set[int] = set(range(g.m))
        self.a_total = sum(len(s) for s in self.available)
        self.d_total = sum(g.degree(u) + g.degree(v) for u, v in g.endpoints)
        self.ops = 0  # approximate count of elementary set operations

    def charge(self, k: int) -> None:
        self.ops += k

    def copy(self) -> "PartialColoring":
        new = object.__new__(PartialColoring)
        new.g = self.g
        new.lists = self.lists
        new.color = list(self.color)
        new.used_edge = [dict(d) for d in self.used_edge]
        new.available = [set(s) for s in self.available]
        new.uncolored = set(self.uncolored)
        new.a_total = self.a_total
        new.d_total = self.d_total
        new.ops = 0
        return new

    def potential(self) -> Potential:
        return Potential(self.a_total, self.d_total)

    def used(self, x: int):
        """View of the used-color set at x."""
        return self.used_edge[x].keys()

    # -- single-edge updates ------------------------------------------------

    def assign(self, e: int, c: int) -> None:
        if self.color[e] is not None:
            raise EdgeNotBlankError(f"edge {e} already colored")
        if c not in self.lists.lists[e]:
            raise ColorNotInListError(f"color {c} not in list of edge {e}")
        u, v = self.g.endpoints[e]
        if c in self.used_edge[u] or c in self.used_edge[v]:
            raise ImproperAssignmentError(f"color {c} already used at an end of edge {e}")
        self.color[e] = c
        for w in (u, v):
            self.used_edge[w][c] = e
            avail = self.available[w]
            if c in avail:
                avail.remove(c)
                self.a_total -= 1
        self.uncolored.remove(e)
        self.d_total -= self.g.degree(u) + self.g.degree(v)
        self.ops += 2

    def unassign(self, e: int) -> None:
        c = self.color[e]
        if c is None:
            raise EdgeBlankError(f"edge {e} already blank")
        self.color[e] = None
        u, v = self.g.endpoints[e]
        for w in (u, v):
            del self.used_edge[w][c]
            if c in self.lists.common[w]:
                self.available[w].add(c)
                self.a_total += 1
        self.uncolored.add(e)
        self.d_total += self.g.degree(u) + self.g.degree(v)
        self.ops += 2

    def is_happy(self, e: int) -> Optional[int]:
        """Smallest color legally extendable onto blank edge e, or None."""
        if self.color[e] is not None:
            raise EdgeNotBlankError(f"edge {e} is not blank")
        u, v = self.g.endpoints[e]
        best = None
        for c in self.available[u]:
            if c not in self.used_edge[v] and (best is None or c < best):
                best = c
        for c in self.available[v]:
            if c not in self.used_edge[u] and (best is None or c < best):
                best = c
        self.ops += len(self.available[u]) + len(self.available[v])
        return best

    # -- chain shifts ---------------------------------------------------------

    def shift_violation(self, edges, targets):
        """First (index, reason) making the shift improper, else (None, None).

        ``targets[i]`` is the color edge ``edges[i]`` would receive (None for
        blank).  Does not mutate.
        """
        eset = set(edges)
        seen = set()
        for i, (e, c) in enumerate(zip(edges, targets)):
            if c is None:
                continue
            if c not in self.lists.lists[e]:
                return i, COLOR_NOT_IN_LIST
            for w in self.g.endpoints[e]:
                if (w, c) in seen:
                    return i, COLOR_CLASH
                seen.add((w, c))
                f = self.used_edge[w].get(c)
                if f is not None and f not in eset:
                    return i, COLOR_CLASH
        self.ops += len(edges)
        return None, None

    def apply_chain_shift(self, edges) -> tuple:
        """Move each chain edge's color one position back, blanking the last.

        Returns the tuple of previous colors for ``undo_chain_shift``.
        Raises NotShiftableError (state unchanged) if the start edge is
        colored or the shifted coloring would be improper or escape a list.
        """
        old = [self.color[e] for e in edges]
        if old[0] is not None:
            raise NotShiftableError(0, START_NOT_BLANK)
        targets = old[1:] + [None]
        i, reason = self.shift_violation(edges, targets)
        if i is not None:
            raise NotShiftableError(i, reason)
        for e, c in zip(edges, old):
            if c is not None:
                self.unassign(e)
        for e, c in zip(edges, targets):
            if c is not None:
                self.assign(e, c)
        return tuple(old)

    def undo_chain_shift(self, edges, old: tuple) -> None:
        for e in edges:
            if self.color[e] is not None:
                self.unassign(e)
        for e, c in zip(edges, old):
            if c is not None:
                self.assign(e, c)

    # -- verification ---------------------------------------------------------

    def verify(self) -> list[Finding]:
        """Recompute everything from the assignment alone; report mismatches."""
        findings = []
        g, lists = self.g, self.lists
        used = [dict() for _ in range(g.n)]
        for e, c in enumerate(self.color):
            if c is None:
                continue
            if c not in lists.lists[e]:
                findings.append(
                    Finding("ColorNotInList", f"edge {e} colored {c} outside its list")
                )
            for w in g.endpoints[e]:
                if c in used[w]:
                    findings.append(
                        Finding(
                            "ImproperAssignment",
                            f"color {c} on edges {used[w][c]} and {e} at vertex {w}",
                        )
                    )
                else:
                    used[w][c] = e
        for x in range(g.n):
            if used[x] != self.used_edge[x]:
                findings.append(Finding("CacheMismatch", f"used set at vertex {x}"))
            avail = set(lists.common[x]) - used[x].keys()
            if avail != self.available[x]:
                findings.append(Finding("CacheMismatch", f"available set at vertex {x}"))
        uncolored = {e for e, c in enumerate(self.color) if c is None}
        if uncolored != self.uncolored:
            findings.append(Finding("CacheMismatch", "uncolored edge set"))
        a = sum(len(set(lists.common[x]) - used[x].keys()) for x in range(g.n))
        d = sum(
            g.degree(x) * sum(1 for e in g.incidence[x] if self.color[e] is None)
            for x in range(g.n)
        )
        if (a, d) != (self.a_total, self.d_total):
            findings.append(
                Finding(
                    "CacheMismatch",
                    f"potential totals cached ({self.a_total}, {self.d_total})"
                    f" recomputed ({a}, {d})",
                )
            )
        return findings


def blank_coloring(g: Multigraph, lists: ListAssignment) -> PartialColoring:
    """All edges blank; every common color available at its vertex."""
    return PartialColoring(g, lists)


def check_edge_colors(g: Multigraph, lists, colors) -> list[Finding]:
    """Validate a plain color vector (None = blank) without building caches.

    ``lists`` may be None to skip list-membership checks.  Used by the CLI
    verifier and the oracle tests, so it shares no code with the engine's
    incremental bookkeeping.
    """
    findings = []
    used: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for e, c in enumerate(colors):
        if c is None:
            continue
        if lists is not None and c not in lists.lists[e]:
            findings.append(
                Finding("ColorNotInList", f"edge {e} colored {c} outside its list")
            )
        for w in g.endpoints[e]:
            if c in used[w]:
                findings.append(
                    Finding(
                        "ImproperAssignment",
                        f"color {c} on edges {used[w][c]} and {e} at vertex {w}",
                    )
                )
            else:
                used[w][c] = e
    return findings
