"""Chains, the Shift operation, alternating path chains, and their resolution.

A chain is a sequence of distinct edges in which consecutive edges share
exactly one vertex.  Shifting moves each edge's color one position toward
the front and blanks the last edge; the front edge must be blank.  Path
chains additionally walk distinct vertices after the first edge (the start
vertex may only reappear as the final vertex), and two-colored alternating
path chains are the repair tool of the whole engine:

``resolve_path`` takes an alternating path whose start edge misses one
path color at each endpoint and whose end vertex differs from its start
vertex, finds the longest prefix whose shift stays proper and inside the
lists, and then either colors the path's last edge (a happy outcome,
one more edge colored) or commits the prefix shift (a content outcome,
strictly smaller potential).  One of the two must apply; anything else
raises an internal assertion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import PartialColoring
from .errors import (
    START_NOT_BLANK,
    EdgeNotBlankError,
    LemmaViolationError,
    NotShiftableError,
    PreconditionViolatedError,
)
from .graph import Multigraph


@dataclass(frozen=True)
class Chain:
    edges: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.edges[0]

    @property
    def end(self) -> int:
        return self.edges[-1]

    @property
    def length(self) -> int:
        return len(self.edges)

    def prefix(self, j: int) -> "Chain":
        if not 1 <= j <= len(self.edges):
            raise ValueError(f"prefix length {j} out of range")
        return Chain(self.edges[:j])


def _check_chain_edges(g: Multigraph, edges) -> None:
    if not edges:
        raise ValueError("chain must contain at least one edge")
    if len(set(edges)) != len(edges):
        raise ValueError("chain edges must be distinct")
    for a, b in zip(edges, edges[1:]):
        shared = set(g.endpoints[a]) & set(g.endpoints[b])
        if len(shared) != 1:
            raise ValueError(
                f"consecutive chain edges {a}, {b} share {len(shared)} vertices"
            )


def build_chain(g: Multigraph, edges) -> Chain:
    edges = tuple(edges)
    _check_chain_edges(g, edges)
    return Chain(edges)


@dataclass(frozen=True)
class PathChain:
    """Chain whose edges after the first form a path.

    ``vertices`` is x_0..x_k with edge i joining x_i and x_{i+1}; x_1..x_k
    are distinct, and x_0 may coincide only with a later x_i.
    """

    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.edges[0]

    @property
    def end(self) -> int:
        return self.edges[-1]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def vstart(self) -> int:
        return self.vertices[0]

    @property
    def vend(self) -> int:
        return self.vertices[-1]

    def prefix(self, j: int) -> "PathChain":
        if not 1 <= j <= len(self.edges):
            raise ValueError(f"prefix length {j} out of range")
        return PathChain(self.edges[:j], self.vertices[: j + 1])


def build_path_chain(g: Multigraph, edges, vstart: int) -> PathChain:
    edges = tuple(edges)
    _check_chain_edges(g, edges)
    u, v = g.endpoints[edges[0]]
    if vstart not in (u, v):
        raise ValueError("vstart must be an endpoint of the first edge")
    vertices = [vstart, g.other_end(edges[0], vstart)]
    for e in edges[1:]:
        vertices.append(g.other_end(e, vertices[-1]))
    interior = vertices[1:]
    if len(set(interior)) != len(interior):
        raise ValueError("path chain vertices after the first must be distinct")
    if len(vertices) >= 3 and vertices[0] in vertices[1:3]:
        raise ValueError("start vertex may only coincide with a later vertex")
    return PathChain(edges, tuple(vertices))


@dataclass(frozen=True)
class FanChain:
    """Chain whose edges all share the pivot vertex."""

    edges: tuple[int, ...]
    pivot: int
    leaves: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.edges[0]

    @property
    def end(self) -> int:
        return self.edges[-1]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def vstart(self) -> int:
        return self.leaves[0]

    @property
    def vend(self) -> int:
        return self.leaves[-1]

    def prefix(self, j: int) -> "FanChain":
        if not 1 <= j <= len(self.edges):
            raise ValueError(f"prefix length {j} out of range")
        return FanChain(self.edges[:j], self.pivot, self.leaves[:j])


def build_fan_chain(g: Multigraph, edges, pivot: int) -> FanChain:
    edges = tuple(edges)
    _check_chain_edges(g, edges)
    leaves = []
    for e in edges:
        if pivot not in g.endpoints[e]:
            raise ValueError(f"edge {e} does not contain the pivot {pivot}")
        leaves.append(g.other_end(e, pivot))
    return FanChain(edges, pivot, tuple(leaves))


# -- dispatch outcomes shared by the fan modules and the engine ---------------


@dataclass(frozen=True)
class HappyEdge:
    edge: int
    color: int  # witness from the availability check; a valid extension
    branch: str = "happy-edge"


@dataclass(frozen=True)
class HappyFan:
    fan: FanChain
    color: int  # witness; the edge is recolorable after shifting the fan
    branch: str = "happy-fan"


@dataclass(frozen=True)
class ContentFan:
    fan: FanChain
    branch: str = "content-fan"


@dataclass(frozen=True)
class PathUnderPhi:
    path: PathChain
    alpha: int
    beta: int
    branch: str = "path-phi"


@dataclass(frozen=True)
class PathUnderPsi:
    fan: FanChain
    path: PathChain  # computed in the coloring obtained by shifting the fan
    alpha: int
    beta: int
    branch: str = "path-psi"


@dataclass(frozen=True)
class ResolveOutcome:
    kind: str  # "happy" | "content"
    chain: PathChain  # full path (happy) or the shifted prefix (content)
    color: Optional[int] = None  # color given to the path's end edge if happy


# -- operations ----------------------------------------------------------------


def shift(phi: PartialColoring, chain) -> PartialColoring:
    """A fresh coloring with the chain shifted; the input is untouched."""
    new = phi.copy()
    new.apply_chain_shift(chain.edges)
    return new


def alternating_path(
    phi: PartialColoring, e: int, alpha: int, beta: int
) -> PathChain:
    """Maximal two-colored path chain out of blank edge e.

    The endpoint missing ``alpha`` is the start vertex; the walk leaves the
    other endpoint along its alpha-colored edge and then alternates beta,
    alpha, ... for as long as the next color is present.  Properness makes
    every continuation unique and keeps the walked vertices distinct
    (checked, not assumed); the walk can return to the start vertex only as
    its final stop, since the start vertex has no alpha-colored edge.
    """
    if alpha == beta:
        raise PreconditionViolatedError("alternating colors must differ")
    if phi.color[e] is not None:
        raise EdgeNotBlankError(f"edge {e} is not blank")
    g = phi.g
    u, v = g.endpoints[e]
    if alpha in phi.available[u] and beta in phi.available[v]:
        x, y = u, v
    elif alpha in phi.available[v] and beta in phi.available[u]:
        x, y = v, u
    else:
        raise PreconditionViolatedError(
            f"edge {e}: colors {alpha}, {beta} not available at opposite endpoints"
        )
    edges = [e]
    vertices = [x, y]
    cur, need, follow = y, alpha, beta
    while True:
        nxt = phi.used_edge[cur].get(need)
        if nxt is None:
            break
        cur = g.other_end(nxt, cur)
        edges.append(nxt)
        vertices.append(cur)
        need, follow = follow, need
        phi.charge(1)
        if len(edges) > g.m:
            raise LemmaViolationError("alternating walk revisited an edge")
    interior = vertices[1:]
    if len(set(interior)) != len(interior):
        raise LemmaViolationError("alternating walk revisited a vertex")
    phi.charge(len(edges))
    return PathChain(tuple(edges), tuple(vertices))


def max_shiftable_prefix(phi: PartialColoring, path: PathChain) -> int:
    """Largest j such that shifting the first j edges stays proper and listed."""
    edges = path.edges
    if phi.color[edges[0]] is not None:
        raise NotShiftableError(0, START_NOT_BLANK)
    colors = [phi.color[e] for e in edges]
    for j in range(len(edges), 1, -1):
        targets = colors[1:j] + [None]
        if phi.shift_violation(edges[:j], targets) == (None, None):
            return j
    return 1  # shifting a single blank edge is the identity


def resolve_path(phi: PartialColoring, path: PathChain) -> ResolveOutcome:
    """Apply the happy-or-content dichotomy to an alternating path, in place.

    Requires the start edge blank and the path's start and end vertices
    distinct (the callers establish the availability conditions when they
    build the path).  Either the full path shifts and its end edge gets a
    color, or a proper prefix shifts and the potential strictly drops.
    """
    if phi.color[path.start] is not None:
        raise EdgeNotBlankError(f"edge {path.start} is not blank")
    if path.vstart == path.vend:
        raise PreconditionViolatedError("path start and end vertices coincide")
    k = path.length
    j = max_shiftable_prefix(phi, path)
    if j < min(3, k):
        raise LemmaViolationError(
            f"shiftable prefix {j} below guaranteed minimum {min(3, k)}"
        )
    before = phi.potential()
    blanks = len(phi.uncolored)
    prefix = path.prefix(j)
    phi.apply_chain_shift(prefix.edges)
    if j == k:
        c = phi.is_happy(path.end)
        if c is not None:
            phi.assign(path.end, c)
            if len(phi.uncolored) != blanks - 1:
                raise LemmaViolationError("happy path did not reduce blank count")
            return ResolveOutcome("happy", path, c)
    # The full shift left the end edge stuck, or a strict prefix was the
    # longest valid shift; the availability total must have dropped.
    if phi.potential() < before and len(phi.uncolored) == blanks:
        return ResolveOutcome("content", prefix)
    raise LemmaViolationError("path neither happy nor content")
