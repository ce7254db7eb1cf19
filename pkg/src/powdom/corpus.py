"""Small-graph corpora: exhaustive labeled graphs, isomorphism classes, seeded random graphs."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

from .graph import Graph, is_connected


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on vertices ``0..n-1`` (``2^(n choose 2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if code >> i & 1])


def _canonical_code(n: int, edges: list[tuple[int, int]]) -> tuple:
    best = None
    for perm in permutations(range(n)):
        code = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or code < best:
            best = code
    return best


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs of order ``n`` (``n <= 5``)."""
    if n > 5:
        raise ValueError("isomorphism classes are only enumerated up to 5 vertices")
    seen: dict[tuple, Graph] = {}
    for G in all_labeled_graphs(n):
        if not is_connected(G):
            continue
        key = _canonical_code(n, G.edges())
        if key not in seen:
            seen[key] = Graph(n, key)
    ordered = sorted(seen.values(), key=lambda g: (g.m, g.edges()))
    return tuple(g.relabeled(f"G{n}.{i}") for i, g in enumerate(ordered))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Rejection-sample a connected ``G(n, p)``; ``p`` defaults to a draw from [0.3, 0.9]."""
    while True:
        q = rng.uniform(0.3, 0.9) if p is None else p
        G = random_graph(n, q, rng)
        if is_connected(G):
            return G
