"""Cartesian, tensor and lexicographic products.

Product vertex ``(g, h)`` gets id ``g * |V(H)| + h``; the resulting graph
carries the :class:`ProductVertexMap` in its ``pairing`` attribute.
"""

from __future__ import annotations

from .errors import InvalidParameterError
from .graph import Graph, ProductVertexMap, bits


def _wrap(name: str | None) -> str | None:
    if name is None:
        return None
    return f"({name})" if any(op in name for op in ("□", "×", "∘")) else name


def _label(G: Graph, H: Graph, op: str) -> str | None:
    if G.name is None or H.name is None:
        return None
    return f"{_wrap(G.name)}{op}{_wrap(H.name)}"


def _build(G: Graph, H: Graph, op: str, rule) -> Graph:
    if G.n < 1 or H.n < 1:
        raise InvalidParameterError("product factors must have at least one vertex")
    pairing = ProductVertexMap(G.n, H.n)
    masks = []
    for g in range(G.n):
        for h in range(H.n):
            masks.append(rule(g, h))
    return Graph.from_masks(masks, name=_label(G, H, op), pairing=pairing)


def _spread(mask_g: int, block: int, hn: int) -> int:
    """Place ``block`` (an H-mask) in every H-fiber whose G-vertex is in ``mask_g``."""
    out = 0
    for x in bits(mask_g):
        out |= block << (x * hn)
    return out


def cartesian(G: Graph, H: Graph) -> Graph:
    hn = H.n

    def rule(g: int, h: int) -> int:
        return (H.adj_mask(h) << (g * hn)) | _spread(G.adj_mask(g), 1 << h, hn)

    return _build(G, H, "□", rule)


def tensor(G: Graph, H: Graph) -> Graph:
    hn = H.n

    def rule(g: int, h: int) -> int:
        return _spread(G.adj_mask(g), H.adj_mask(h), hn)

    return _build(G, H, "×", rule)


def lexicographic(G: Graph, H: Graph) -> Graph:
    hn = H.n
    whole = (1 << hn) - 1

    def rule(g: int, h: int) -> int:
        return _spread(G.adj_mask(g), whole, hn) | (H.adj_mask(h) << (g * hn))

    return _build(G, H, "∘", rule)


def _pairing(P: Graph) -> ProductVertexMap:
    if P.pairing is None:
        raise InvalidParameterError("graph carries no product vertex map")
    return P.pairing


def h_fiber(P: Graph, g: int, pairing: ProductVertexMap | None = None) -> frozenset[int]:
    """Vertices ``{(g, h) : h in V(H)}``."""
    pm = pairing or _pairing(P)
    return frozenset(pm.pair(g, h) for h in range(pm.h_order))


def g_fiber(P: Graph, h: int, pairing: ProductVertexMap | None = None) -> frozenset[int]:
    """Vertices ``{(g, h) : g in V(G)}``."""
    pm = pairing or _pairing(P)
    return frozenset(pm.pair(g, h) for g in range(pm.g_order))
