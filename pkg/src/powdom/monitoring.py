"""Power-domination monitoring and zero-forcing closures with step traces.

Traced closures run in synchronous rounds: every forcing available at the
start of a round is collected (scanning monitored vertices by increasing id,
smallest-id cause wins) and then applied together. Round ``i`` of the
monitored-set trace therefore equals the set ``X_i`` of vertices observed by
step ``i``. The untraced ``*_mask`` variants apply forcings as soon as they are
found; the fixed point is the same and they are what the solvers call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import InvalidParameterError
from .graph import Graph, bits, from_mask, is_connected_mask

DOMINATION = "domination"
PROPAGATION = "propagation"
INITIAL = "initial"


class Event(NamedTuple):
    v: int
    rule: str
    cause: int | None
    step: int


@dataclass(frozen=True)
class PropagationTrace:
    seed: frozenset[int]
    events: tuple[Event, ...]
    final: frozenset[int]
    order: int = field(repr=False)

    @property
    def complete(self) -> bool:
        return len(self.final) == self.order

    def step_sets(self) -> list[frozenset[int]]:
        """Cumulative vertex sets after each step, starting from the smallest step index."""
        if not self.events:
            return []
        out, acc = [], set()
        first, last = self.events[0].step, self.events[-1].step
        for step in range(first, last + 1):
            acc.update(e.v for e in self.events if e.step == step)
            out.append(frozenset(acc))
        return out

    def to_dict(self) -> dict:
        return {
            "set": sorted(self.seed),
            "events": [{"v": e.v, "rule": e.rule, "cause": e.cause, "step": e.step} for e in self.events],
            "monitored": sorted(self.final),
            "complete": self.complete,
        }


def _seed_mask(G: Graph, S: Iterable[int], what: str) -> int:
    mask = G.check_set(S)
    if not mask:
        raise InvalidParameterError(f"{what} must be nonempty")
    return mask


def _rounds(G: Graph, black: int, events: list[Event], step: int) -> int:
    adj = G.adj_masks
    while True:
        forced: dict[int, int] = {}
        for v in bits(black):
            white = adj[v] & ~black
            if white and not white & (white - 1):
                w = white.bit_length() - 1
                forced.setdefault(w, v)
        if not forced:
            return black
        for w in sorted(forced):
            events.append(Event(w, PROPAGATION, forced[w], step))
            black |= 1 << w
        step += 1


def monitored_set(G: Graph, S: Iterable[int]) -> PropagationTrace:
    """Vertices observed by ``S``: ``N[S]`` closed under the propagation rule."""
    seed = _seed_mask(G, S, "monitoring set")
    adj = G.adj_masks
    events = [Event(v, DOMINATION, None, 1) for v in bits(seed)]
    dominated = seed
    for s in bits(seed):
        dominated |= adj[s]
    for w in bits(dominated & ~seed):
        cause = (adj[w] & seed & -(adj[w] & seed)).bit_length() - 1
        events.append(Event(w, DOMINATION, cause, 1))
    events.sort(key=lambda e: e.v)
    final = _rounds(G, dominated, events, 2)
    return PropagationTrace(from_mask(seed), tuple(events), from_mask(final), G.n)


def zero_forcing_closure(G: Graph, Z: Iterable[int]) -> PropagationTrace:
    """Derived coloring of ``Z`` under the color-change rule; seeds are step 0."""
    seed = _seed_mask(G, Z, "zero forcing set")
    events = [Event(v, INITIAL, None, 0) for v in bits(seed)]
    final = _rounds(G, seed, events, 1)
    return PropagationTrace(from_mask(seed), tuple(events), from_mask(final), G.n)


def force_mask(adj: tuple[int, ...], black: int, descending: bool = False) -> int:
    """Zero-forcing closure of bitmask ``black`` over adjacency masks ``adj``."""
    changed = True
    while changed:
        changed = False
        order = sorted(bits(black), reverse=True) if descending else bits(black)
        for v in order:
            white = adj[v] & ~black
            if white and not white & (white - 1):
                black |= white
                changed = True
    return black


def monitor_mask(adj: tuple[int, ...], seed: int, descending: bool = False) -> int:
    dominated = seed
    for s in bits(seed):
        dominated |= adj[s]
    return force_mask(adj, dominated, descending)


def propagation_steps(G: Graph, X: Iterable[int]) -> list[frozenset[int]]:
    """Step sets by the union-of-closed-neighborhoods formulation.

    ``X_1 = N[X]`` and ``X_{i+1}`` is the union of ``N[v]`` over ``v`` in
    ``X_i`` with at most one neighbor outside ``X_i``; iteration stops at the
    first repeat.
    """
    adj = G.adj_masks
    current = _seed_mask(G, X, "monitoring set")
    for v in bits(current):
        current |= adj[v]
    steps = [current]
    while True:
        nxt = 0
        for v in bits(current):
            closed = adj[v] | (1 << v)
            outside = closed & ~current
            if not outside & (outside - 1):
                nxt |= closed
        if nxt == current:
            return [from_mask(x) for x in steps]
        current = nxt
        steps.append(current)


def is_power_dominating(G: Graph, S: Iterable[int]) -> bool:
    seed = _seed_mask(G, S, "monitoring set")
    return monitor_mask(G.adj_masks, seed) == G.full_mask


def is_connected_power_dominating(G: Graph, S: Iterable[int]) -> bool:
    seed = _seed_mask(G, S, "monitoring set")
    return is_connected_mask(G, seed) and monitor_mask(G.adj_masks, seed) == G.full_mask


def is_zero_forcing(G: Graph, Z: Iterable[int]) -> bool:
    seed = _seed_mask(G, Z, "zero forcing set")
    return force_mask(G.adj_masks, seed) == G.full_mask


def is_connected_zero_forcing(G: Graph, Z: Iterable[int]) -> bool:
    seed = _seed_mask(G, Z, "zero forcing set")
    return is_connected_mask(G, seed) and force_mask(G.adj_masks, seed) == G.full_mask

