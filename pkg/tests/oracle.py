"""Independent reference implementations for cross-checking the library.

Nothing here imports the solver or monitoring code: graphs are plain
``networkx`` graphs, sets are Python sets, and closures follow the
sequential one-vertex-at-a-time rule literally.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx


def to_nx(G) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def relabel_product(P: nx.Graph, h_order: int) -> nx.Graph:
    """networkx products label vertices ``(g, h)``; map them to row-major ids."""
    return nx.relabel_nodes(P, {(g, h): g * h_order + h for g, h in P.nodes})


def nx_product(kind: str, G, H) -> nx.Graph:
    op = {"cartesian": nx.cartesian_product, "tensor": nx.tensor_product,
          "lexicographic": nx.lexicographic_product}[kind]
    return relabel_product(op(to_nx(G), to_nx(H)), H.n)


def edge_set(g: nx.Graph) -> set[frozenset]:
    return {frozenset(e) for e in g.edges}


def force(g: nx.Graph, black: set) -> set:
    black = set(black)
    while True:
        for v in list(black):
            white = [w for w in g[v] if w not in black]
            if len(white) == 1:
                black.add(white[0])
                break
        else:
            return black


def monitored(g: nx.Graph, S) -> set:
    start = set(S)
    for v in S:
        start.update(g[v])
    return force(g, start)


def connected_set(g: nx.Graph, S) -> bool:
    return len(S) > 0 and nx.is_connected(g.subgraph(S))


def predicate(kind: str):
    def ds(g, S):
        return set(S).union(*(g[v] for v in S)) == set(g)

    def tds(g, S):
        return all(any(w in S for w in g[v]) for v in g)

    def pds(g, S):
        return monitored(g, S) == set(g)

    def zfs(g, S):
        return force(g, S) == set(g)

    base = {"ds": ds, "tds": tds, "pds": pds, "zfs": zfs,
            "cds": ds, "cpds": pds, "czfs": zfs}[kind]
    if kind.startswith("c"):
        return lambda g, S: connected_set(g, S) and base(g, S)
    return base


def brute_min(g: nx.Graph, kind: str) -> int:
    test = predicate(kind)
    nodes = sorted(g)
    for k in range(1, len(nodes) + 1):
        for S in combinations(nodes, k):
            if test(g, set(S)):
                return k
    raise ValueError(f"no {kind} set")
