"""Immutable simple undirected graphs on dense vertex ids ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex so that neighborhood
unions, subset tests and closures used by the exact solvers reduce to integer
arithmetic. Vertex sets cross the public API as ``frozenset[int]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidParameterError, InvalidVertexError

VertexSet = frozenset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class ProductVertexMap:
    """Row-major pairing ``(g, h) <-> g * h_order + h`` of a product's vertices."""

    g_order: int
    h_order: int

    def pair(self, g: int, h: int) -> int:
        if not (0 <= g < self.g_order and 0 <= h < self.h_order):
            raise InvalidVertexError(f"({g},{h}) outside {self.g_order}x{self.h_order}")
        return g * self.h_order + h

    def unpair(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.g_order * self.h_order:
            raise InvalidVertexError(f"vertex {v} outside product of order {self.g_order * self.h_order}")
        return divmod(v, self.h_order)


class Graph:
    """A simple undirected graph with vertices ``0..n-1``.

    Instances are immutable; ``pairing`` is set on graphs built by the product
    constructors so that witnesses can be reported as factor pairs.
    """

    __slots__ = ("_n", "_adj", "_m", "name", "pairing")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        name: str | None = None,
        pairing: ProductVertexMap | None = None,
    ):
        if n < 0:
            raise InvalidParameterError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if not adj[u] >> v & 1:
                m += 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._m = m
        self.name = name
        self.pairing = pairing

    @classmethod
    def from_masks(cls, masks: Iterable[int], name: str | None = None,
                   pairing: ProductVertexMap | None = None) -> Graph:
        """Build from per-vertex neighbor bitmasks (trusted: symmetric, loop-free)."""
        g = cls.__new__(cls)
        g._adj = tuple(masks)
        g._n = len(g._adj)
        g._m = sum(a.bit_count() for a in g._adj) // 2
        g.name = name
        g.pairing = pairing
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    @property
    def adj_masks(self) -> tuple[int, ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return from_mask(self._adj[v])

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise InvalidVertexError(f"vertex {v!r} not in 0..{self._n - 1}")

    def check_set(self, vertices: Iterable[int]) -> int:
        """Validate ``vertices`` against this graph and return them as a mask."""
        mask = 0
        for v in vertices:
            self._check(v)
            mask |= 1 << v
        return mask

    def relabeled(self, name: str | None) -> Graph:
        return Graph.from_masks(self._adj, name=name, pairing=self.pairing)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Graph{label} n={self._n} m={self._m}>"


def open_neighborhood(G: Graph, v: int) -> frozenset[int]:
    return G.neighbors(v)


def closed_neighborhood(G: Graph, A: Iterable[int]) -> frozenset[int]:
    return from_mask(closed_mask(G, G.check_set(A)))


def closed_mask(G: Graph, mask: int) -> int:
    out = mask
    adj = G.adj_masks
    for v in bits(mask):
        out |= adj[v]
    return out


def open_mask(G: Graph, mask: int) -> int:
    out = 0
    adj = G.adj_masks
    for v in bits(mask):
        out |= adj[v]
    return out


def induced_subgraph(G: Graph, A: Iterable[int]) -> Graph:
    """Subgraph induced by ``A``, relabeled ``0..|A|-1`` by increasing original id."""
    keep = sorted(from_mask(G.check_set(A)))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u in keep for v in bits(G.adj_mask(u)) if v in index and u < v]
    return Graph(len(keep), edges)


def is_connected_mask(G: Graph, mask: int) -> bool:
    """True iff ``mask`` is nonempty and induces a connected subgraph."""
    if not mask:
        return False
    adj = G.adj_masks
    seen = mask & -mask
    frontier = seen
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= adj[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(G: Graph) -> bool:
    return is_connected_mask(G, G.full_mask)


def components(G: Graph) -> list[frozenset[int]]:
    out = []
    left = G.full_mask
    adj = G.adj_masks
    while left:
        seen = frontier = left & -left
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & ~seen
            seen |= frontier
        out.append(from_mask(seen))
        left &= ~seen
    return out


def universal_vertices(G: Graph) -> frozenset[int]:
    return frozenset(v for v in G.vertices() if G.adj_mask(v).bit_count() == G.n - 1)


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for start in G.vertices():
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in bits(G.adj_mask(u)):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True
