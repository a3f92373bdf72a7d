"""Solvers for k-neighborhood coverage.

All solvers return a :class:`CoverageSolution` whose ``covered`` field is the
size of the union of the chosen neighborhoods. Ties always go to the smaller
vertex id, or the lexicographically smaller tuple.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .errors import BudgetExceeded, DomainError, VerificationError
from .graph import Graph, iter_bits, max_degree_seed, union_coverage

DEFAULT_BUDGET = 10**8


class Method(str, enum.Enum):
    EXACT = "exact"
    GREEDY = "greedy"
    DERANDOMIZED = "derandomized"
    MONTE_CARLO = "monte_carlo"


@dataclass(frozen=True)
class CoverageSolution:
    vertices: tuple[int, ...]
    covered: int
    method: Method
    # conditional expectation before each derandomized pick, then the realized T-coverage
    expectations: tuple[Fraction, ...] = field(default=(), compare=False)

    @property
    def k(self) -> int:
        return len(self.vertices)


def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")


def _solution(g: Graph, vertices, method: Method, **extra) -> CoverageSolution:
    vertices = tuple(int(v) for v in vertices)
    return CoverageSolution(vertices, union_coverage(g, vertices), method, **extra)


def exact_best(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> CoverageSolution:
    """Maximum union over all k-subsets of distinct vertices, by exhaustive search.

    Repeats never enlarge a union, so distinct subsets suffice; for ``k > n``
    the answer is every vertex, padded by repeating the last one. Raises
    :class:`BudgetExceeded` when ``C(n, k)`` exceeds ``budget``.
    """
    _check_k(k)
    n = g.n
    if k > n:
        best = exact_best(g, n, budget)
        return CoverageSolution(best.vertices + (n - 1,) * (k - n), best.covered, Method.EXACT)
    needed = comb(n, k)
    if needed > budget:
        raise BudgetExceeded(needed, budget)

    rows = g.rows
    ceiling = 0
    for r in rows:
        ceiling |= r
    ceiling = ceiling.bit_count()
    best_count = -1
    best_tuple: tuple[int, ...] = ()
    prefix: list[int] = []

    def search(start: int, depth: int, acc: int) -> bool:
        nonlocal best_count, best_tuple
        last = n - depth
        if depth == 1:
            # first maximum in a lexicographic scan wins ties
            v = max(range(start, last + 1), key=lambda w: (acc | rows[w]).bit_count())
            count = (acc | rows[v]).bit_count()
            if count > best_count:
                best_count = count
                best_tuple = (*prefix, v)
            return best_count == ceiling
        for v in range(start, last + 1):
            prefix.append(v)
            done = search(v + 1, depth - 1, acc | rows[v])
            prefix.pop()
            if done:
                return True
        return False

    search(0, k, 0)
    return CoverageSolution(best_tuple, best_count, Method.EXACT)


def greedy_best(g: Graph, k: int) -> CoverageSolution:
    """Pick k vertices one at a time, each adding the most new coverage."""
    _check_k(k)
    rows = g.rows
    acc = 0
    picked = []
    for _ in range(k):
        v = max(range(g.n), key=lambda w: (rows[w] & ~acc).bit_count())
        picked.append(v)
        acc |= rows[v]
    return _solution(g, picked, Method.GREEDY)


def _weights(g: Graph, power: int) -> list[int]:
    """``(n - d(u))**power``, i.e. ``(1 - d(u)/n)**power`` scaled by ``n**power``."""
    n = g.n
    return [(n - d) ** power for d in g.degrees]


def conditional_expectation_exact(g: Graph, uncovered: int, r: int) -> Fraction:
    """Expected number of T-vertices covered after ``r`` more uniform picks.

    ``uncovered`` is the bitset of T-vertices not yet covered; a vertex ``u`` stays
    uncovered by one uniform pick with probability ``1 - d(u)/n``.
    """
    if r < 0:
        raise DomainError(f"remaining picks must be nonnegative, got {r}")
    t_size = max_degree_seed(g).T_size
    w = _weights(g, r)
    miss = sum(w[u] for u in iter_bits(uncovered))
    return t_size - Fraction(miss, g.n**r)


def conditional_expectation(g: Graph, uncovered: int, r: int) -> float:
    return float(conditional_expectation_exact(g, uncovered, r))


def proof_derandomized(g: Graph, k: int) -> CoverageSolution:
    """Max-degree seed followed by k-1 picks chosen by conditional expectations.

    Each pick maximizes the expected final T-coverage given that the remaining
    picks are uniform. The expectation is evaluated exactly (scaled to integers),
    so the per-step non-decrease is asserted without rounding slack.
    """
    _check_k(k)
    n = g.n
    rows = g.rows
    seed = max_degree_seed(g)
    t_size = seed.T_size
    uncovered = seed.T
    picked = [seed.u0]
    trace = []
    for r in range(k - 1, 0, -1):
        w_now = _weights(g, r)
        miss_now = sum(w_now[u] for u in iter_bits(uncovered))
        trace.append(t_size - Fraction(miss_now, n**r))

        w_next = _weights(g, r - 1)
        total = sum(w_next[u] for u in iter_bits(uncovered))
        best_v, best_gain = 0, -1
        for v in range(n):
            gain = sum(w_next[u] for u in iter_bits(uncovered & rows[v]))
            if gain > best_gain:
                best_v, best_gain = v, gain
        # E after the pick is t_size - (total - best_gain) / n**(r-1); compare scaled by n**r
        if (total - best_gain) * n > miss_now:
            raise VerificationError(f"conditional expectation decreased at pick {k - r}")
        picked.append(best_v)
        uncovered &= ~rows[best_v]
    trace.append(Fraction(t_size - uncovered.bit_count()))
    sol = _solution(g, picked, Method.DERANDOMIZED, expectations=tuple(trace))
    if sol.covered != seed.delta + t_size - uncovered.bit_count():
        raise VerificationError("derandomized coverage disagrees with recount")
    return sol


def monte_carlo(g: Graph, k: int, trials: int, seed: int) -> CoverageSolution:
    """Best of ``trials`` samples: the max-degree vertex plus k-1 uniform vertices."""
    _check_k(k)
    if trials < 1:
        raise DomainError(f"trials must be at least 1, got {trials}")
    u0 = max_degree_seed(g).u0
    rows = g.rows
    rng = np.random.default_rng(seed)
    draws = rng.integers(0, g.n, size=(trials, k - 1))
    best, best_count = None, -1
    base = rows[u0]
    for sample in draws.tolist():
        acc = base
        for v in sample:
            acc |= rows[v]
        count = acc.bit_count()
        if count > best_count:
            best, best_count = sample, count
    return _solution(g, [u0, *best], Method.MONTE_CARLO)


SOLVERS = {
    Method.EXACT: exact_best,
    Method.GREEDY: greedy_best,
    Method.DERANDOMIZED: proof_derandomized,
    Method.MONTE_CARLO: monte_carlo,
}
