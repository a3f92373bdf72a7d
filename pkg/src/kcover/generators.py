"""Seeded constructors for the graph families used in the checks."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

import numpy as np

from .errors import DomainError, GenerationFailed
from .graph import Graph, complement

DEFAULT_RETRIES = 1000


def _rows_from_matrix(adj: np.ndarray) -> list[int]:
    n = adj.shape[0]
    # little-endian packing so bit v of row u is adj[u, v]
    packed = np.packbits(adj, axis=1, bitorder="little")
    return [int.from_bytes(packed[u].tobytes(), "little") for u in range(n)]


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): every unordered pair is an edge independently with probability ``p``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph(n, _rows_from_matrix(upper | upper.T))


def ceil_sqrt(x: Fraction) -> int:
    """Smallest integer ``t >= 0`` with ``t*t >= x``, exact for rationals."""
    if x < 0:
        raise DomainError(f"negative radicand {x}")
    t = isqrt(x.numerator // x.denominator)
    while t * t < x:
        t += 1
    return t


def clique_size_for(n: int, c: Fraction) -> int:
    """``ceil(sqrt(c) * n) + 1``."""
    return ceil_sqrt(c * n * n) + 1


def gen_clique_plus_isolated(n: int, c: Fraction | int | str) -> Graph:
    """Clique on vertices ``0..ceil(sqrt(c)n)``, all other vertices isolated.

    Its density is at least ``c`` while no union of neighborhoods exceeds the
    clique size, which makes the square-root branch of the bound nearly tight.
    """
    c = Fraction(c)
    if not (0 <= c <= 1):
        raise DomainError(f"target density must lie in [0, 1], got {c}")
    q = clique_size_for(n, c)
    if q > n:
        raise DomainError(f"clique of size {q} does not fit in {n} vertices")
    clique = (1 << q) - 1
    rows = [clique ^ (1 << u) if u < q else 0 for u in range(n)]
    g = Graph(n, rows)
    assert Fraction(2 * g.m, n * n) >= c
    return g


def _pair_stubs(n: int, d: int, rng: np.random.Generator) -> list[set[int]] | None:
    """One attempt at a simple d-regular pairing; None on a dead end."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    stubs = [u for u in range(n) for _ in range(d)]
    while stubs:
        rng.shuffle(stubs)
        leftover = []
        for a, b in zip(stubs[::2], stubs[1::2]):
            if a == b or b in nbrs[a]:
                leftover.extend((a, b))
            else:
                nbrs[a].add(b)
                nbrs[b].add(a)
        if len(leftover) == len(stubs):
            # no progress: dead end once no valid pair remains among the stubs
            ends = sorted(set(leftover))
            if all(v == u or v in nbrs[u] for u in ends for v in ends):
                return None
        stubs = leftover
    return nbrs


def gen_regular(n: int, d: int, seed: int, retries: int = DEFAULT_RETRIES) -> Graph:
    """Uniform-ish random d-regular graph by stub pairing with rejection of loops and repeats."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not (0 <= d < n):
        raise DomainError(f"degree must satisfy 0 <= d < n, got d={d}, n={n}")
    if (n * d) % 2:
        raise DomainError(f"no {d}-regular graph on {n} vertices: n*d is odd")
    # dense targets are built as complements of sparse ones
    if d > (n - 1) // 2:
        return complement(gen_regular(n, n - 1 - d, seed, retries))
    if d == 0:
        return Graph.empty(n)
    rng = np.random.default_rng(seed)
    for _ in range(retries):
        nbrs = _pair_stubs(n, d, rng)
        if nbrs is not None:
            return Graph(n, [sum(1 << v for v in s) for s in nbrs])
    raise GenerationFailed(f"no simple {d}-regular graph on {n} vertices after {retries} attempts")
