"""JSON shapes for reports (schema ``kcover/1``).

Rationals are written as ``"num/den"`` strings; floats next to them are
informational only. :func:`audit_certificate` re-derives a verdict from the
integers in a serialized certificate.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .bounds import BoundCertificate, certify_counts
from .coverage import CoverageSolution
from .graph import Graph, average_degree, max_degree_seed
from .lemma import LemmaSweepReport

SCHEMA = "kcover/1"


def rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def graph_stats(g: Graph) -> dict:
    c = average_degree(g)
    seed = max_degree_seed(g)
    s = Fraction(seed.delta, g.n)
    return {
        "n": g.n,
        "m": g.m,
        "c": rational(c),
        "c_float": float(c),
        "delta": seed.delta,
        "u0": seed.u0,
        "s": rational(s),
        "s_float": float(s),
    }


def certificate_dict(cert: BoundCertificate) -> dict:
    return {
        "coverage": cert.coverage,
        "n": cert.n,
        "k": cert.k,
        "A_times_n": rational(cert.A_times_n),
        "B_sq": cert.B_sq,
        "verdict": cert.verdict,
        "binding_side": cert.binding_side,
    }


def audit_certificate(d: dict) -> bool:
    """True iff the verdict and the A-side value in ``d`` follow from its integers."""
    fresh = certify_counts(d["coverage"], d["n"], d["k"], d["B_sq"])
    return (
        fresh.verdict == d["verdict"]
        and rational(fresh.A_times_n) == d["A_times_n"]
        and fresh.binding_side == d["binding_side"]
    )


def solution_dict(sol: CoverageSolution) -> dict:
    out = {
        "method": sol.method.value,
        "vertices": list(sol.vertices),
        "covered": sol.covered,
    }
    if sol.expectations:
        out["expectations"] = [rational(e) for e in sol.expectations]
    return out


def sweep_dict(rep: LemmaSweepReport) -> dict:
    c, s, k = rep.argmin
    return {
        "schema": SCHEMA,
        "kind": "sweep",
        "k_range": list(rep.k_range),
        "c_grid": {"count": rep.c_points, "open_interval": [0.0, 1.0]},
        "s_grid": {"count": rep.s_points, "interval": "[c, sqrt(c)]"},
        "tolerance": rep.tolerance,
        "evaluations": rep.evaluations,
        "min_margin": rep.min_margin,
        "argmin": {"c": c, "s": s, "k": k},
        "violations": rep.violations,
        "ok": rep.ok,
    }


def dumps(report: dict) -> str:
    """Canonical text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
