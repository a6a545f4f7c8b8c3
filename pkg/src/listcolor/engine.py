"""Top-level coloring procedure: pick a blank edge, compute a chain, repair.

Each augmentation ends in exactly one of two ways: a happy outcome colors
one more edge, a content outcome keeps the blank count and strictly
lowers the potential.  Both strictly decrease the potential in the
lexicographic order, which bounds the number of steps and is asserted on
every single one; the bound derived from the potential's value range is
enforced as a hard budget, so nontermination is impossible and a budget
trip means a bug, not a hard instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import shannon, vizing
from .bipartite import koenig_path
from .chain import (
    ContentFan,
    HappyEdge,
    HappyFan,
    PathUnderPhi,
    PathUnderPsi,
    resolve_path,
)
from .coloring import PartialColoring, Potential, blank_coloring
from .errors import (
    BoundViolationError,
    InternalAssertionError,
    LemmaViolationError,
    StepBudgetExceededError,
)
from .graph import Multigraph
from .lists import ListAssignment, check_bound, MODES


@dataclass
class RunStats:
    happy_steps: int = 0
    content_steps: int = 0
    fan_shifts: int = 0
    path_shifts: int = 0
    potential_trace: list[Potential] = field(default_factory=list)
    max_chain_length: int = 0
    content_runs: list[int] = field(default_factory=list)  # lengths between happy steps
    max_augment_ops: int = 0
    _content_since_happy: int = 0

    @property
    def steps(self) -> int:
        return self.happy_steps + self.content_steps

    def _saw_chain(self, length: int) -> None:
        if length > self.max_chain_length:
            self.max_chain_length = length

    def _finish(self, happy: bool) -> None:
        if happy:
            self.happy_steps += 1
            self.content_runs.append(self._content_since_happy)
            self._content_since_happy = 0
        else:
            self.content_steps += 1
            self._content_since_happy += 1


@dataclass(frozen=True)
class TraceRecord:
    step: int
    kind: str  # happy-edge | fan-shift | path-shift-happy | path-shift-content
    branch: str
    chain: tuple[int, ...]
    phi_before: Potential
    phi_after: Potential


TraceSink = Optional[Callable[[TraceRecord], None]]


def _emit(trace: TraceSink, step, kind, branch, chain, before, after):
    if trace is not None:
        trace(TraceRecord(step, kind, branch, tuple(chain), before, after))


def _resolve_and_trace(phi, path, mode, branch, stats, trace, step, setup_note=""):
    before = phi.potential()
    outcome = resolve_path(phi, path)
    stats.path_shifts += 1
    stats._saw_chain(outcome.chain.length)
    kind = "path-shift-happy" if outcome.kind == "happy" else "path-shift-content"
    _emit(trace, step, kind, f"{mode}-{branch}{setup_note}", outcome.chain.edges,
          before, phi.potential())
    return outcome.kind == "happy"


def augment_once(
    phi: PartialColoring,
    e: int,
    mode: str,
    stats: RunStats,
    trace: TraceSink = None,
) -> str:
    """One repair step on blank edge e; returns "happy" or "content".

    Postcondition, asserted: either one more edge is colored or the blank
    count is unchanged and the potential strictly dropped.  In both cases
    the potential strictly drops.
    """
    if mode not in ("shannon", "vizing", "koenig"):
        raise ValueError(f"augment mode must name a guarantee, got {mode!r}")
    step = stats.steps
    before = phi.potential()
    blanks = len(phi.uncolored)
    ops_before = phi.ops

    if mode == "koenig":
        path = koenig_path(phi, e)
        happy = _resolve_and_trace(phi, path, mode, "path", stats, trace, step)
    else:
        if mode == "shannon":
            out = shannon.classify_shannon(phi, e)
        else:
            u, v = phi.g.endpoints[e]
            out = vizing.classify_vizing(phi, e, min(u, v))
        happy = _apply_outcome(phi, out, mode, stats, trace, step, before)

    after = phi.potential()
    if not after < before:
        raise LemmaViolationError(f"potential did not drop: {before} -> {after}")
    if happy:
        if len(phi.uncolored) != blanks - 1:
            raise LemmaViolationError("happy step did not color exactly one edge")
    else:
        if len(phi.uncolored) != blanks:
            raise LemmaViolationError("content step changed the blank count")
    stats._finish(happy)
    stats.potential_trace.append(after)
    ops = phi.ops - ops_before
    if ops > stats.max_augment_ops:
        stats.max_augment_ops = ops
    return "happy" if happy else "content"


def _apply_outcome(phi, out, mode, stats, trace, step, before) -> bool:
    if isinstance(out, HappyEdge):
        phi.assign(out.edge, phi.is_happy(out.edge))
        stats._saw_chain(1)
        _emit(trace, step, "happy-edge", f"{mode}-{out.branch}", (out.edge,),
              before, phi.potential())
        return True
    if isinstance(out, HappyFan):
        phi.apply_chain_shift(out.fan.edges)
        stats.fan_shifts += 1
        stats._saw_chain(out.fan.length)
        c = phi.is_happy(out.fan.end)
        if c is None:
            raise LemmaViolationError("fan end not recolorable after happy shift")
        phi.assign(out.fan.end, c)
        _emit(trace, step, "fan-shift", f"{mode}-{out.branch}", out.fan.edges,
              before, phi.potential())
        return True
    if isinstance(out, ContentFan):
        phi.apply_chain_shift(out.fan.edges)
        stats.fan_shifts += 1
        stats._saw_chain(out.fan.length)
        after = phi.potential()
        if not after < before:
            raise LemmaViolationError("content fan did not drop the potential")
        _emit(trace, step, "fan-shift", f"{mode}-{out.branch}", out.fan.edges,
              before, after)
        return False
    if isinstance(out, PathUnderPhi):
        return _resolve_and_trace(phi, out.path, mode, out.branch, stats, trace, step)
    if isinstance(out, PathUnderPsi):
        phi.apply_chain_shift(out.fan.edges)
        stats.fan_shifts += 1
        stats._saw_chain(out.fan.length)
        mid = phi.potential()
        if mid.a != before.a:
            raise LemmaViolationError("setup fan shift changed the availability total")
        _emit(trace, step, "fan-shift", f"{mode}-{out.branch}-setup", out.fan.edges,
              before, mid)
        return _resolve_and_trace(phi, out.path, mode, out.branch, stats, trace, step)
    raise InternalAssertionError(f"unknown outcome {out!r}")


def step_budget(g: Multigraph, lists: ListAssignment) -> tuple[int, int]:
    """(content budget from the potential's value range, happy budget m)."""
    n, delta = g.n, g.max_degree()
    return n * lists.max_common() + (delta * delta * n * n) // 2, g.m


def color_graph(
    g: Multigraph,
    lists: ListAssignment,
    mode: str,
    assume_bound: Optional[str] = None,
    trace: TraceSink = None,
) -> tuple[PartialColoring, RunStats]:
    """Color every edge from its list, or raise BoundViolationError upfront.

    ``mode`` selects the guarantee; ``explicit`` requires ``assume_bound``
    naming which of the three guarantees the supplied lists satisfy (it is
    verified, not trusted).  Returns the total coloring and run statistics.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if mode == "explicit":
        if assume_bound not in ("shannon", "vizing", "koenig"):
            raise ValueError("explicit mode requires assume_bound")
        effective = assume_bound
    else:
        effective = mode
    report = check_bound(g, lists, effective)
    if not report.ok:
        worst = report.failures()[0]
        raise BoundViolationError(worst.vertex, worst.required, worst.actual)

    phi = blank_coloring(g, lists)
    stats = RunStats()
    stats.potential_trace.append(phi.potential())
    content_budget, happy_budget = step_budget(g, lists)
    while phi.uncolored:
        if stats.content_steps > content_budget or stats.happy_steps > happy_budget:
            raise StepBudgetExceededError(
                f"steps {stats.steps} exceed budget {happy_budget} + {content_budget}"
            )
        e = min(phi.uncolored)
        augment_once(phi, e, effective, stats, trace)
    findings = phi.verify()
    if findings:
        raise InternalAssertionError(f"final verification failed: {findings[0]}")
    if stats.happy_steps != g.m:
        raise InternalAssertionError("happy step count does not match edge count")
    return phi, stats
