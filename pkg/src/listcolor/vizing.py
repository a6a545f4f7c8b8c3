"""Fan construction and dispatch for the deg + mu guarantee.

The fan grows around a fixed pivot: repeatedly take the smallest color
still in the working set of the current leaf; if the pivot misses that
color the fan is immediately recolorable (happy), otherwise the pivot's
edge carrying it either extends the fan or closes it onto an earlier
index j.  Working sets start as the leaves' availability sets and shrink
by one per poll; since each leaf has at least its multiplicity many
available colors, a poll never sees an empty set.

Dispatch compares potentials directly: shift the full fan, then the
prefix ending at j, and commit whichever strictly improves; if neither
does, the availability total is provably unchanged by both shifts and an
alternating path from the shifted fan's end edge (full first, prefix as
fallback) must satisfy the path-resolution conditions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import (
    ContentFan,
    FanChain,
    HappyFan,
    PathUnderPsi,
    alternating_path,
)
from .coloring import PartialColoring
from .errors import (
    BetaEmptyError,
    EdgeNotBlankError,
    LemmaViolationError,
    PreconditionViolatedError,
)


@dataclass(frozen=True)
class VizingFanResult:
    fan: FanChain
    beta: int  # available at both the fan's end leaf and the prefix's end leaf
    j: int  # == fan.length exactly when the happy return fired


def vizing_fan(phi: PartialColoring, e: int, x: int) -> VizingFanResult:
    if phi.color[e] is not None:
        raise EdgeNotBlankError(f"edge {e} is not blank")
    g = phi.g
    if x not in g.endpoints[e]:
        raise PreconditionViolatedError(f"pivot {x} is not an endpoint of edge {e}")
    y = g.other_end(e, x)
    beta_sets = {}
    for z in g.neighbors(x):
        beta_sets[z] = set(phi.available[z])
        phi.charge(len(beta_sets[z]))
    nbr = dict(phi.used_edge[x])
    phi.charge(g.degree(x))
    index = {e: 0}
    edges = [e]
    leaves = [y]
    k = 0
    while k < g.degree(x):
        working = beta_sets[leaves[-1]]
        if not working:
            raise BetaEmptyError(f"working set of leaf {leaves[-1]} ran out")
        eta = min(working)
        working.remove(eta)
        phi.charge(len(working) + 1)
        if eta not in phi.used_edge[x]:
            fan = FanChain(tuple(edges), x, tuple(leaves))
            return VizingFanResult(fan, eta, k + 1)
        k += 1
        ek = nbr[eta]
        if ek in index:
            fan = FanChain(tuple(edges), x, tuple(leaves))
            return VizingFanResult(fan, eta, index[ek])
        index[ek] = k
        edges.append(ek)
        leaves.append(g.other_end(ek, x))
    raise LemmaViolationError("fan construction exhausted the pivot's degree")


def classify_vizing(phi: PartialColoring, e: int, x: int):
    """Happy fan, content fan (full or prefix), or a path under the shift.

    Mutate-and-restore: candidate shifts are applied to the live coloring
    to read their potentials (and to build the fallback paths) and undone
    before returning.
    """
    res = vizing_fan(phi, e, x)
    fan, beta = res.fan, res.beta
    if res.j == fan.length:
        return HappyFan(fan, beta, branch="happy-fan")
    prefix = fan.prefix(res.j)
    before = phi.potential()
    for cand, branch in ((fan, "content-fan-full"), (prefix, "content-fan-prefix")):
        undo = phi.apply_chain_shift(cand.edges)
        better = phi.potential() < before
        phi.undo_chain_shift(cand.edges, undo)
        if better:
            return ContentFan(cand, branch=branch)
    if not phi.available[x]:
        raise LemmaViolationError("no available color at the pivot")
    alpha = min(phi.available[x])
    last_error = None
    for cand, branch in ((fan, "path-psi-full"), (prefix, "path-psi-prefix")):
        undo = phi.apply_chain_shift(cand.edges)
        try:
            if phi.a_total != before.a:
                raise LemmaViolationError("fan shift changed the availability total")
            path = alternating_path(phi, cand.end, alpha, beta)
        finally:
            phi.undo_chain_shift(cand.edges, undo)
        if path.vstart != path.vend:
            return PathUnderPsi(cand, path, alpha, beta, branch=branch)
        last_error = branch
    raise LemmaViolationError(
        f"both fan path candidates are circular (last tried {last_error})"
    )
