"""Undirected simple graphs stored as adjacency bit rows.

Row ``u`` is a Python int whose bit ``v`` is set iff ``uv`` is an edge.
Unions and intersections of neighborhoods are then single ``|`` / ``&``
operations and cardinalities a single ``int.bit_count()``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Iterable, Sequence

from .errors import DomainError


def bits(indexes: Iterable[int]) -> int:
    value = 0
    for idx in indexes:
        value |= 1 << idx
    return value


def iter_bits(value: int):
    """Yield the indexes of set bits in ascending order."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


def popcount(value: int) -> int:
    return value.bit_count()


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_rows", "_m", "_degrees")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1:
            raise DomainError(f"graph needs at least one vertex, got n={n}")
        if len(rows) != n:
            raise DomainError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in rows)
        for u, row in enumerate(rows):
            if row & ~full:
                raise DomainError(f"row {u} has bits outside 0..{n - 1}")
            if row >> u & 1:
                raise DomainError(f"self-loop at vertex {u}")
        for u, row in enumerate(rows):
            for v in iter_bits(row):
                if not rows[v] >> u & 1:
                    raise DomainError(f"asymmetric adjacency between {u} and {v}")
        self._n = n
        self._rows = rows
        self._degrees = tuple(r.bit_count() for r in rows)
        self._m = sum(self._degrees) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << u) for u in range(n)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self._degrees[u]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        out = []
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self._n):
            raise DomainError(f"vertex {u} out of range 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class SeedDecomposition:
    """The split of V around a maximum-degree vertex ``u0``: ``S = N(u0)``, ``T = V \\ S``."""

    u0: int
    delta: int
    S: int
    T: int

    @property
    def T_size(self) -> int:
        return self.T.bit_count()


def neighborhood(g: Graph, u: int) -> int:
    g._check_vertex(u)
    return g.rows[u]


def average_degree(g: Graph) -> Fraction:
    """Density ``c`` with average degree ``c * n``, i.e. ``2m / n**2`` exactly."""
    return Fraction(2 * g.m, g.n * g.n)


def max_degree_seed(g: Graph) -> SeedDecomposition:
    degs = g.degrees
    delta = max(degs)
    u0 = degs.index(delta)
    S = g.rows[u0]
    return SeedDecomposition(u0=u0, delta=delta, S=S, T=g.vertex_mask & ~S)


def union_mask(g: Graph, vertices: Iterable[int]) -> int:
    acc = 0
    rows = g.rows
    for u in vertices:
        g._check_vertex(u)
        acc |= rows[u]
    return acc


def union_coverage(g: Graph, vertices: Iterable[int]) -> int:
    """Size of the union of the neighborhoods of ``vertices`` (repeats allowed, empty gives 0)."""
    return union_mask(g, vertices).bit_count()


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [full & ~row & ~(1 << u) for u, row in enumerate(g.rows)])
