"""Constructors for the named graph families.

Wheels and fans put the hub last: ``wheel(n)`` is ``C_n`` plus hub ``n`` and
``fan(n)`` is ``P_n`` plus hub ``n``, so both have ``n + 1`` vertices.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import InvalidParameterError
from .graph import Graph


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameterError(message)


def complete(n: int) -> Graph:
    _need(n >= 1, f"K_n needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2), name=f"K{n}")


def path(n: int) -> Graph:
    _need(n >= 1, f"P_n needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)), name=f"P{n}")


def cycle(n: int) -> Graph:
    _need(n >= 3, f"C_n needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def empty(n: int) -> Graph:
    _need(n >= 1, f"empty graph needs n >= 1, got {n}")
    return Graph(n, (), name=f"E{n}")


def wheel(n: int) -> Graph:
    _need(n >= 3, f"W_n needs rim length n >= 3, got {n}")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n + 1, rim + [(i, n) for i in range(n)], name=f"W{n}")


def fan(n: int) -> Graph:
    _need(n >= 2, f"F_n needs path length n >= 2, got {n}")
    spine = [(i, i + 1) for i in range(n - 1)]
    return Graph(n + 1, spine + [(i, n) for i in range(n)], name=f"F{n}")


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Parts occupy consecutive id blocks in the given order."""
    sizes = list(sizes)
    _need(len(sizes) >= 2, f"complete multipartite graph needs >= 2 parts, got {len(sizes)}")
    _need(all(s >= 1 for s in sizes), f"part sizes must be positive, got {sizes}")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    edges = [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
    return Graph(n, edges, name="K" + ",".join(map(str, sizes)))


def complete_bipartite(m: int, n: int) -> Graph:
    _need(m >= 1 and n >= 1, f"K_(m,n) needs m, n >= 1, got {m}, {n}")
    return complete_multipartite([m, n])


def star(n: int) -> Graph:
    """``K_{1,n}`` with center 0."""
    return complete_bipartite(1, n)
