"""Exact minimum solvers for the seven domination and forcing invariants.

Candidates are the k-subsets of ``0..n-1`` in lexicographic order, k rising
from 1; the first feasible subset is the witness. With ``threads > 1`` each
k-level is split by smallest member across worker processes and the
lexicographically smallest feasible subset is kept, so the answer does not
depend on scheduling.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import DisconnectedInputError, InvalidParameterError, NoFeasibleSetError, SizeLimitError
from .graph import Graph, is_connected, to_mask
from .monitoring import PropagationTrace, force_mask, monitor_mask, monitored_set, zero_forcing_closure

DEFAULT_HARD_LIMIT = 40


class InvariantKind(str, enum.Enum):
    DS = "ds"
    CDS = "cds"
    TDS = "tds"
    PDS = "pds"
    CPDS = "cpds"
    ZFS = "zfs"
    CZFS = "czfs"

    @property
    def needs_connected_graph(self) -> bool:
        return self in _CONNECTED_GRAPH_KINDS

    @property
    def connected_set(self) -> bool:
        return self in (InvariantKind.CDS, InvariantKind.CPDS, InvariantKind.CZFS)

    @classmethod
    def parse(cls, text: str | InvariantKind) -> InvariantKind:
        if isinstance(text, InvariantKind):
            return text
        try:
            return cls(text.lower())
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise InvalidParameterError(f"unknown invariant {text!r} (expected one of {names})") from None


_CONNECTED_GRAPH_KINDS = frozenset(
    {InvariantKind.CDS, InvariantKind.TDS, InvariantKind.CPDS, InvariantKind.CZFS}
)


@dataclass(frozen=True)
class SolveResult:
    kind: InvariantKind
    value: int
    witness: frozenset[int]
    explored: int
    trace: PropagationTrace | None = None


@dataclass(frozen=True)
class CapExceeded:
    """The minimum is larger than the requested cap; ``lower_bound`` is ``cap + 1``."""

    kind: InvariantKind
    lower_bound: int
    explored: int


def _feasible_mask(adj: tuple[int, ...], full: int, kind: InvariantKind, mask: int) -> bool:
    if kind.connected_set and not _connected(adj, mask):
        return False
    if kind in (InvariantKind.DS, InvariantKind.CDS):
        out = mask
        for v in _bits(mask):
            out |= adj[v]
        return out == full
    if kind is InvariantKind.TDS:
        out = 0
        for v in _bits(mask):
            out |= adj[v]
        return out == full
    if kind in (InvariantKind.PDS, InvariantKind.CPDS):
        return monitor_mask(adj, mask) == full
    return force_mask(adj, mask) == full


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _connected(adj: tuple[int, ...], mask: int) -> bool:
    seen = frontier = mask & -mask
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= adj[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def feasible(G: Graph, kind: InvariantKind | str, S: Iterable[int]) -> bool:
    kind = InvariantKind.parse(kind)
    mask = G.check_set(S)
    if not mask:
        raise InvalidParameterError("candidate set must be nonempty")
    return _feasible_mask(G.adj_masks, G.full_mask, kind, mask)


def _validate(G: Graph, kind: InvariantKind, hard_limit: int) -> None:
    if G.n == 0:
        raise InvalidParameterError("graph has no vertices")
    if G.n > hard_limit:
        raise SizeLimitError(f"graph has {G.n} vertices, exact search limit is {hard_limit}")
    if kind.needs_connected_graph and not is_connected(G):
        raise DisconnectedInputError(f"{kind.value} requires a connected graph")


def _lex_rank(combo: tuple[int, ...], n: int) -> int:
    """Position of ``combo`` among ``combinations(range(n), len(combo))``."""
    k = len(combo)
    rank, prev = 0, -1
    for i, c in enumerate(combo):
        for skipped in range(prev + 1, c):
            rank += comb(n - skipped - 1, k - i - 1)
        prev = c
    return rank


def _levels_before(n: int, k: int) -> int:
    return sum(comb(n, j) for j in range(1, k))


def _scan_chunk(adj: tuple[int, ...], kind: InvariantKind, k: int, first: int,
                find_all: bool) -> list[tuple[int, ...]]:
    n = len(adj)
    full = (1 << n) - 1
    found = []
    for rest in combinations(range(first + 1, n), k - 1):
        combo = (first, *rest)
        if _feasible_mask(adj, full, kind, to_mask(combo)):
            found.append(combo)
            if not find_all:
                break
    return found


def _scan_level(adj: tuple[int, ...], kind: InvariantKind, k: int, find_all: bool,
                pool: ProcessPoolExecutor | None) -> list[tuple[int, ...]]:
    n = len(adj)
    firsts = range(n - k + 1)
    if pool is None:
        out = []
        for first in firsts:
            out.extend(_scan_chunk(adj, kind, k, first, find_all))
            if out and not find_all:
                break
        return out
    futures = [pool.submit(_scan_chunk, adj, kind, k, first, find_all) for first in firsts]
    out = []
    for fut in futures:
        out.extend(fut.result())
        if out and not find_all:
            break
    for fut in futures:
        fut.cancel()
    return out


def _search(G: Graph, kind: InvariantKind, cap: int | None, find_all: bool,
            threads: int) -> tuple[int, list[tuple[int, ...]]] | int:
    """Return ``(k, witnesses)`` for the minimum k, or the level reached if ``cap`` ran out."""
    top = G.n if cap is None else min(cap, G.n)
    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for k in range(1, top + 1):
            found = _scan_level(G.adj_masks, kind, k, find_all, pool)
            if found:
                return k, found
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return top


def _trace_for(G: Graph, kind: InvariantKind, witness: frozenset[int]) -> PropagationTrace | None:
    if kind in (InvariantKind.PDS, InvariantKind.CPDS):
        return monitored_set(G, witness)
    if kind in (InvariantKind.ZFS, InvariantKind.CZFS):
        return zero_forcing_closure(G, witness)
    return None


def min_invariant(G: Graph, kind: InvariantKind | str, cap: int | None = None, *,
                  threads: int = 1, hard_limit: int = DEFAULT_HARD_LIMIT,
                  trace: bool = False) -> SolveResult | CapExceeded:
    """Minimum feasible set of ``kind`` in ``G``.

    Returns :class:`CapExceeded` when ``cap`` is given and no feasible set of
    size ``<= cap`` exists. ``explored`` counts candidates in canonical order
    up to and including the witness, which is independent of ``threads``.
    """
    kind = InvariantKind.parse(kind)
    _validate(G, kind, hard_limit)
    if cap is not None and cap < 1:
        raise InvalidParameterError(f"cap must be positive, got {cap}")
    outcome = _search(G, kind, cap, False, threads)
    if isinstance(outcome, int):
        if cap is not None and cap < G.n:
            return CapExceeded(kind, cap + 1, _levels_before(G.n, cap + 1))
        raise NoFeasibleSetError(f"{G.name or 'graph'} has no {kind.value} set")
    k, (combo, *_) = outcome
    witness = frozenset(combo)
    explored = _levels_before(G.n, k) + _lex_rank(combo, G.n) + 1
    return SolveResult(kind, k, witness, explored, _trace_for(G, kind, witness) if trace else None)


def all_minimum_witnesses(G: Graph, kind: InvariantKind | str, *, threads: int = 1,
                          hard_limit: int = DEFAULT_HARD_LIMIT) -> list[frozenset[int]]:
    """Every feasible set of minimum size, sorted lexicographically by member list."""
    kind = InvariantKind.parse(kind)
    _validate(G, kind, hard_limit)
    outcome = _search(G, kind, None, True, threads)
    if isinstance(outcome, int):
        raise NoFeasibleSetError(f"{G.name or 'graph'} has no {kind.value} set")
    return [frozenset(c) for c in outcome[1]]


@lru_cache(maxsize=4096)
def _cached_value(G: Graph, kind: InvariantKind, hard_limit: int) -> int:
    result = min_invariant(G, kind, hard_limit=hard_limit)
    return result.value


def invariant(G: Graph, kind: InvariantKind | str, hard_limit: int = DEFAULT_HARD_LIMIT) -> int:
    """Memoized minimum value; graphs compare by adjacency so equal graphs share entries."""
    return _cached_value(G, InvariantKind.parse(kind), hard_limit)

