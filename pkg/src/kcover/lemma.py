"""Numerical campaigns for the inequality ``F(s) >= min{G(c), sqrt(c)}`` and the k=2 averaging identity."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from collections.abc import Iterable, Sequence

import numpy as np

from .bounds import P_poly, Q_poly, bound_A, gc_sqrtc_equivalence
from .errors import DomainError, VerificationError
from .graph import Graph, complement

IDENTITY_TOL = 1e-12
KNIFE_EDGE = 1e-12


@dataclass
class LemmaSweepReport:
    k_range: tuple[int, int]
    c_points: int
    s_points: int
    tolerance: float
    min_margin: float
    argmin: tuple[float, float, int]
    evaluations: int
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def c_grid(points: int) -> np.ndarray:
    """``points`` equally spaced values strictly inside (0, 1)."""
    if points < 1:
        raise DomainError("c-grid needs at least one point")
    return np.arange(1, points + 1, dtype=float) / (points + 1)


def s_positions(points: int) -> np.ndarray:
    """Relative positions in [0, 1] along ``[c, sqrt(c)]``; a single point sits at ``s = c``."""
    if points < 1:
        raise DomainError("s-grid needs at least one point")
    if points == 1:
        return np.zeros(1)
    return np.linspace(0.0, 1.0, points)


def margins(c: np.ndarray, s: np.ndarray, k: int) -> np.ndarray:
    """``F(s) - min{G(c), sqrt(c)}`` elementwise (``s > 0``)."""
    F = s + (1 - (1 - s) ** (k - 1)) / s * (c - s * s)
    return F - np.minimum(1 - (1 - c) ** k, np.sqrt(c))


def sweep_lemma(
    k_range: Iterable[int],
    c_points: int,
    s_points: int,
    tolerance: float,
    positions: Sequence[float] | None = None,
) -> LemmaSweepReport:
    """Evaluate the margin on a (c, s) grid for every k and collect points below ``-tolerance``.

    ``positions`` overrides the relative placement of s-points in ``[c, sqrt(c)]``.
    """
    ks = list(k_range)
    if not ks:
        raise DomainError("empty k range")
    if tolerance < 0:
        raise DomainError(f"tolerance must be nonnegative, got {tolerance}")
    cs = c_grid(c_points)
    t = np.asarray(positions, dtype=float) if positions is not None else s_positions(s_points)
    C = cs[:, None]
    S = C + (np.sqrt(C) - C) * t[None, :]
    C = np.broadcast_to(C, S.shape)

    best = (math.inf, (math.nan, math.nan, 0))
    violations = []
    for k in ks:
        M = margins(C, S, k)
        i, j = np.unravel_index(np.argmin(M), M.shape)
        if M[i, j] < best[0]:
            best = (float(M[i, j]), (float(C[i, j]), float(S[i, j]), k))
        for i, j in zip(*np.nonzero(M < -tolerance)):
            violations.append({"c": float(C[i, j]), "s": float(S[i, j]), "k": k, "margin": float(M[i, j])})
    return LemmaSweepReport(
        k_range=(min(ks), max(ks)),
        c_points=c_points,
        s_points=len(t),
        tolerance=tolerance,
        min_margin=best[0],
        argmin=best[1],
        evaluations=len(ks) * S.size,
        violations=violations,
    )


def case1_boundary(c: float, k: int) -> float | None:
    """``P(1 - sqrt(c))`` when ``G(c) <= sqrt(c)``, else None (case does not apply).

    Checks ``P(x0) (sqrt(c) - c) = sqrt(c) - G(c)``, the identity with the
    denominator ``1 - c - x0`` cleared.
    """
    r = math.sqrt(c)
    g = bound_A(c, k)
    if g > r:
        return None
    value = P_poly(1 - r, c, k)
    if abs(value * (r - c) - (r - g)) > IDENTITY_TOL:
        raise VerificationError(f"P boundary identity fails at c={c}, k={k}")
    return value


def case2_boundary(c: float, k: int) -> float:
    """``Q(1 - c)``, checked against its closed form and against the sign equivalence."""
    r = math.sqrt(c)
    value = Q_poly(1 - c, c, k)
    closed = (1 - (1 - c) ** (k - 1) * (1 + r)) / r
    if abs(value - closed) > IDENTITY_TOL:
        raise VerificationError(f"Q(1-c) disagrees with closed form at c={c}, k={k}")
    if abs(bound_A(c, k) - r) > KNIFE_EDGE:
        lhs, rhs = gc_sqrtc_equivalence(c, k)
        if not (lhs == rhs == (value >= 0)):
            raise VerificationError(f"sign of Q(1-c) does not match G(c) >= sqrt(c) at c={c}, k={k}")
    return value


def sign_flips(values: Iterable[float]) -> list[tuple[int, int]]:
    """Strict sign transitions ``(from, to)`` along a sequence, zeros skipped."""
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return [(a, b) for a, b in zip(signs, signs[1:]) if a != b]


def descartes_profile(c: float, k: int, points: int = 200) -> tuple[list, list]:
    """Sign flips of P and Q scanning x upward over ``[1 - sqrt(c), 1 - c]``."""
    xs = np.linspace(1 - math.sqrt(c), 1 - c, points)
    return (
        sign_flips(P_poly(float(x), c, k) for x in xs),
        sign_flips(Q_poly(float(x), c, k) for x in xs),
    )


def k2_pair_identity(g: Graph) -> tuple[int, int]:
    """Both sides of ``sum_{pairs} |N_H(u) & N_H(v)| = sum_v C(d_H(v), 2)`` for ``H`` the complement."""
    if g.n < 2:
        raise DomainError("pair identity needs at least two vertices")
    rows = complement(g).rows
    left = 0
    for u in range(g.n):
        ru = rows[u]
        for v in range(u + 1, g.n):
            left += (ru & rows[v]).bit_count()
    right = sum(math.comb(r.bit_count(), 2) for r in rows)
    return left, right


def eq0_average_pair(g: Graph) -> Fraction:
    """Average common non-neighborhood size over unordered pairs, exactly."""
    if g.n < 2:
        raise DomainError("pair average needs at least two vertices")
    _, right = k2_pair_identity(g)
    return Fraction(right, math.comb(g.n, 2))


def min_pair_intersection(g: Graph) -> int:
    """Smallest ``|N_H(u) & N_H(v)|`` over distinct pairs, ``H`` the complement."""
    rows = complement(g).rows
    return min((rows[u] & rows[v]).bit_count() for u in range(g.n) for v in range(u + 1, g.n))


def regular_pair_average(n: int, d: int) -> Fraction:
    """``n C(n-1-d, 2) / C(n, 2)``, the pair average for a d-regular graph."""
    return Fraction(n * math.comb(n - 1 - d, 2), math.comb(n, 2))
