"""Edge-list text format.

::

    # comment
    p <n> <m>
    e <u> <v>        (0 <= u < v < n, one line per edge)
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphFormatError
from .graph import Graph


def format_graph(G: Graph) -> str:
    lines = [f"p {G.n} {G.m}"] + [f"e {u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str, name: str | None = None) -> Graph:
    n = expected = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "p" or len(parts) != 3:
                raise GraphFormatError("expected header 'p <n> <m>'", lineno)
            n, expected = _ints(parts[1:], lineno)
            if n < 0 or expected < 0:
                raise GraphFormatError("negative count in header", lineno)
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise GraphFormatError(f"expected 'e <u> <v>', got {line!r}", lineno)
        u, v = _ints(parts[1:], lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < v < n):
            raise GraphFormatError(f"edge ({u},{v}) must satisfy 0 <= u < v < {n}", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u},{v})", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing header 'p <n> <m>'")
    if len(edges) != expected:
        raise GraphFormatError(f"header declares {expected} edges, found {len(edges)}")
    return Graph(n, edges, name=name)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"non-integer field in {' '.join(tokens)!r}", lineno) from None


def load_graph(path: str | Path) -> Graph:
    path = Path(path)
    return parse_graph_text(path.read_text(), name=path.stem)


def save_graph(G: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(G))
