"""Closed-form quantities behind the coverage bound, and exact certificates.

The bound is ``min{(1 - (1-c)^k) n, sqrt(c) n}`` with ``c = 2|E| / n^2``.
Since ``sqrt(c) n = sqrt(2|E|)``, the square-root branch is decided exactly by
the integer comparison ``coverage**2 >= 2|E|``, and the other branch by a
rational comparison; certificates never touch floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Sequence
from typing import Literal, TypeVar

from .errors import DomainError
from .graph import Graph, average_degree, max_degree_seed, iter_bits

Num = TypeVar("Num", float, Fraction)

BindingSide = Literal["A", "B", "both", "vacuous"]


def _check_unit(x, name: str) -> None:
    if not (0 <= x <= 1):
        raise DomainError(f"{name} must lie in [0, 1], got {x}")


def bound_A(c: Num, k: int) -> Num:
    """``1 - (1 - c)**k``; exact for rational ``c``."""
    _check_unit(c, "c")
    return 1 - (1 - c) ** k


def bound_B_squared(g: Graph) -> int:
    """``(sqrt(c) n)**2``, which is just ``2|E|``."""
    return 2 * g.m


@dataclass(frozen=True)
class BoundCertificate:
    coverage: int
    n: int
    k: int
    A_times_n: Fraction
    B_sq: int
    verdict: bool
    binding_side: BindingSide | None

    @property
    def A_num(self) -> int:
        return self.A_times_n.numerator

    @property
    def A_den(self) -> int:
        return self.A_times_n.denominator


def certify_counts(coverage: int, n: int, k: int, two_m: int) -> BoundCertificate:
    """Certificate from bare integers, so a report can be re-audited without the graph."""
    if not (0 <= coverage <= n):
        raise DomainError(f"coverage {coverage} outside 0..{n}")
    c = Fraction(two_m, n * n)
    a_n = bound_A(c, k) * n
    pass_a = coverage >= a_n
    pass_b = coverage * coverage >= two_m
    side: BindingSide | None
    if two_m == 0:
        side = "vacuous"
    elif pass_a and pass_b:
        side = "both"
    elif pass_a:
        side = "A"
    elif pass_b:
        side = "B"
    else:
        side = None
    return BoundCertificate(
        coverage=coverage,
        n=n,
        k=k,
        A_times_n=a_n,
        B_sq=two_m,
        verdict=pass_a or pass_b,
        binding_side=side,
    )


def bound_certify(g: Graph, k: int, coverage: int) -> BoundCertificate:
    return certify_counts(coverage, g.n, k, bound_B_squared(g))


def f_concave(x: Num, k: int) -> Num:
    """``1 - (1 - x)**(k-1)``: chance a vertex of degree ``x n`` is hit by k-1 uniform picks."""
    _check_unit(x, "x")
    return 1 - (1 - x) ** (k - 1)


def F_eval(s: float, c: float, k: int) -> float:
    """Coverage fraction guaranteed by the max-degree seed at degree fraction ``s``.

    At ``s = 0`` the removable singularity is filled with its limit ``(k-1) c``.
    """
    if s == 0:
        return (k - 1) * c
    return s + (1 - (1 - s) ** (k - 1)) / s * (c - s * s)


def F_eval_exact(s: Fraction, c: Fraction, k: int) -> Fraction:
    s, c = Fraction(s), Fraction(c)
    if s == 0:
        return (k - 1) * c
    return s + (1 - (1 - s) ** (k - 1)) / s * (c - s * s)


def horner(coeffs: Sequence[Num], x: Num) -> Num:
    """Evaluate a polynomial given by ascending coefficients."""
    acc = coeffs[-1] * 0
    for a in reversed(coeffs):
        acc = acc * x + a
    return acc


def P_coeffs(c: Num, k: int) -> list[Num]:
    """Ascending coefficients of ``sum_{i<k} (1-c)^(k-1-i) x^i - sum_{i<k-1} x^i``."""
    q = 1 - c
    return [q ** (k - 1 - i) - 1 for i in range(k - 1)] + [q**0]


def P_poly(x: Num, c: Num, k: int) -> Num:
    return horner(P_coeffs(c, k), x)


def Q_coeffs(c: float, k: int) -> list[float]:
    """Ascending coefficients of ``sqrt(c) sum_{i<k-1} x^i - x^(k-1)``."""
    r = math.sqrt(c)
    return [r] * (k - 1) + [-1.0]


def Q_poly(x: float, c: float, k: int) -> float:
    return horner(Q_coeffs(c, k), x)


def sign_changes(coeffs: Sequence[float]) -> int:
    """Sign changes in a coefficient sequence, zeros skipped (Descartes' count)."""
    signs = [1 if a > 0 else -1 for a in coeffs if a != 0]
    if not signs:
        raise DomainError("sign changes undefined for an all-zero sequence")
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def eq1_slack(g: Graph) -> int:
    """``Delta^2 - sum_{v in S} d(v)`` for the max-degree seed; nonnegative since no degree exceeds Delta."""
    seed = max_degree_seed(g)
    degs = g.degrees
    return seed.delta**2 - sum(degs[v] for v in iter_bits(seed.S))


def expectation_lower_bound_exact(g: Graph, k: int) -> Fraction:
    seed = max_degree_seed(g)
    if seed.delta == 0:
        return Fraction(0)
    s = Fraction(seed.delta, g.n)
    c = average_degree(g)
    value = f_concave(s, k) / s * (c - s * s) * g.n
    return max(value, Fraction(0))


def expectation_lower_bound(g: Graph, k: int) -> float:
    """Lower bound on the expected T-coverage of k-1 uniform picks, clamped at zero."""
    return float(expectation_lower_bound_exact(g, k))


def gc_sqrtc_equivalence(c: float, k: int) -> tuple[bool, bool]:
    """Both sides of ``G(c) >= sqrt(c)  <=>  (1-c)^(k-1) (1 + sqrt(c)) <= 1``."""
    r = math.sqrt(c)
    return bound_A(c, k) >= r, (1 - c) ** (k - 1) * (1 + r) <= 1
