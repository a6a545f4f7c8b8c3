"""Fan construction and case dispatch for the floor(3 deg / 2) guarantee.

The fan here is short: either the blank edge alone (its higher-degree
endpoint has a color missing at the other end) or that edge plus the
pivot's edge carrying the smallest color available at the higher-degree
endpoint.  Classification distinguishes:

1. the two-edge fan frees a usable color at the far leaf (happy fan),
2. the shifted color leaves the far leaf's common set (content: the
   availability total drops),
3. the far leaf has smaller degree than the near one (content: the
   degree-weighted blank count drops),
4. otherwise both leaves' availabilities sit inside the pivot's used set;
   the guarantee forces them to intersect, and an alternating path from
   the blank edge (or, failing its end-vertex condition, from the shifted
   fan's end edge) hands the work to the path resolution.

Case 4's fallback disjunction is validated at run time, not assumed.
"""

from __future__ import annotations

from .chain import (
    ContentFan,
    FanChain,
    HappyEdge,
    HappyFan,
    PathUnderPhi,
    PathUnderPsi,
    alternating_path,
)
from .coloring import PartialColoring
from .errors import (
    AvailabilityEmptyError,
    EdgeNotBlankError,
    LemmaViolationError,
)


def _orient(phi: PartialColoring, e: int) -> tuple[int, int]:
    """Endpoints of e as (x, y) with deg(x) <= deg(y); index breaks ties."""
    u, v = phi.g.endpoints[e]
    if (phi.g.degree(u), u) <= (phi.g.degree(v), v):
        return u, v
    return v, u


def shannon_fan(phi: PartialColoring, e: int) -> FanChain:
    """The fan the dispatcher works on: (e) if the quick happy check fires,
    else (e, f) with f the pivot's edge colored min available at y."""
    if phi.color[e] is not None:
        raise EdgeNotBlankError(f"edge {e} is not blank")
    x, y = _orient(phi, e)
    avail_y = phi.available[y]
    phi.charge(len(avail_y))
    if any(c not in phi.used_edge[x] for c in avail_y):
        return FanChain((e,), x, (y,))
    if not avail_y:
        raise AvailabilityEmptyError(
            f"no available color at vertex {y}; the degree bound cannot hold"
        )
    eta = min(avail_y)
    phi.charge(len(avail_y))
    f = phi.used_edge[x].get(eta)
    if f is None:
        raise LemmaViolationError("available color at y not used at x after check")
    z = phi.g.other_end(f, x)
    return FanChain((e, f), x, (y, z))


def classify_shannon(phi: PartialColoring, e: int):
    """Dispatch the fan into one of the outcome kinds described above.

    Pure up to mutate-and-restore: building the case-4 fallback path needs
    the fan shifted, so it is applied to the live coloring and undone.
    """
    fan = shannon_fan(phi, e)
    x = fan.pivot
    y = fan.leaves[0]
    if fan.length == 1:
        witness = min(c for c in phi.available[y] if c not in phi.used_edge[x])
        return HappyEdge(e, witness, branch="happy-edge")
    f = fan.edges[1]
    z = fan.leaves[1]
    eta = phi.color[f]
    phi.charge(len(phi.available[z]))
    outside = [c for c in phi.available[z] if c not in phi.used_edge[x]]
    if outside:
        return HappyFan(fan, min(outside), branch="case1-happy-fan")
    if eta not in phi.lists.common[z]:
        return ContentFan(fan, branch="case2-content-fan")
    if phi.g.degree(z) < phi.g.degree(y):
        return ContentFan(fan, branch="case3-content-fan")
    # Final case: both availabilities inside used(x), so they intersect.
    inter = phi.available[y] & phi.available[z]
    phi.charge(min(len(phi.available[y]), len(phi.available[z])))
    if not inter:
        raise LemmaViolationError("final-case availability intersection is empty")
    if not phi.available[x]:
        raise LemmaViolationError("no available color at the pivot")
    beta = min(inter)
    alpha = min(phi.available[x])
    p1 = alternating_path(phi, e, alpha, beta)
    if p1.vstart != p1.vend:
        return PathUnderPhi(p1, alpha, beta, branch="final-path-phi")
    undo = phi.apply_chain_shift(fan.edges)
    try:
        p2 = alternating_path(phi, f, alpha, beta)
    finally:
        phi.undo_chain_shift(fan.edges, undo)
    if p2.vstart == p2.vend:
        raise LemmaViolationError("both fallback path candidates are circular")
    return PathUnderPsi(fan, p2, alpha, beta, branch="final-path-psi")
