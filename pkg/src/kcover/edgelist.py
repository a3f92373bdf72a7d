"""Edge-list text format.

One header line ``n m``, then ``m`` lines ``u v``. Saving emits edges with
``u < v`` in ascending lexicographic order, so the text is canonical.
"""
from __future__ import annotations

from pathlib import Path

from .errors import (
    DuplicateEdgeError,
    EdgeListParseError,
    SelfLoopError,
    VertexRangeError,
)
from .graph import Graph


def _ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise EdgeListParseError(f"expected two integers, got {line!r}", lineno)
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListParseError(f"non-integer token in {line!r}", lineno) from None
    return a, b


def load_edge_list(text: str) -> Graph:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise EdgeListParseError("missing 'n m' header")
    lineno, header = lines[0]
    n, m = _ints(header, lineno)
    if n < 1 or m < 0:
        raise EdgeListParseError(f"invalid header n={n} m={m}", lineno)
    if len(lines) - 1 != m:
        raise EdgeListParseError(f"header declares {m} edges, found {len(lines) - 1}", lineno)
    rows = [0] * n
    for lineno, line in lines[1:]:
        u, v = _ints(line, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) out of range 0..{n - 1}", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        if rows[u] >> v & 1:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})", lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def save_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines)


def read_graph(path: str | Path) -> Graph:
    return load_edge_list(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(save_edge_list(g) + "\n", encoding="utf-8")
