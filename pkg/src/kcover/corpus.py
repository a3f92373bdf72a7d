"""Batch verification over a seeded corpus of random and extremal graphs."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import bound_certify, eq1_slack, expectation_lower_bound_exact
from .coverage import exact_best, proof_derandomized
from .generators import gen_clique_plus_isolated, gen_gnp, gen_regular
from .graph import Graph, max_degree_seed, union_coverage
from .lemma import eq0_average_pair, k2_pair_identity, min_pair_intersection
from .report import SCHEMA, certificate_dict, rational

P_VALUES = tuple(i / 10 for i in range(1, 10))
CLIQUE_FAMILY = tuple((n, Fraction(c)) for n in (50, 100, 200) for c in ("1/16", "1/4", "1/2"))
REGULAR_FAMILY = ((8, 3), (12, 5), (16, 4), (20, 9), (32, 7), (40, 20), (48, 13), (64, 31))
COMPLETE_FAMILY = (2, 8, 16, 33)


@dataclass(frozen=True)
class InstanceSpec:
    index: int
    family: str
    n: int
    param: str
    seed: int | None = None

    def build(self) -> Graph:
        if self.family == "gnp":
            return gen_gnp(self.n, float(self.param), self.seed)
        if self.family == "clique-isolated":
            return gen_clique_plus_isolated(self.n, Fraction(self.param))
        if self.family == "regular":
            return gen_regular(self.n, int(self.param), self.seed)
        if self.family == "complete":
            return Graph.complete(self.n)
        if self.family == "empty":
            return Graph.empty(self.n)
        raise ValueError(f"unknown family {self.family!r}")

    def descriptor(self) -> dict:
        return {"index": self.index, "family": self.family, "n": self.n, "param": self.param, "seed": self.seed}


def build_corpus(count: int, n_range: tuple[int, int], seed: int, extremal: bool = False) -> list[InstanceSpec]:
    specs = []
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = P_VALUES[int(rng.integers(len(P_VALUES)))]
        specs.append(InstanceSpec(i, "gnp", n, repr(p), int(rng.integers(2**63))))
    if extremal:
        extra = [("clique-isolated", n, rational(c), None) for n, c in CLIQUE_FAMILY]
        extra += [("regular", n, str(d), seed + j) for j, (n, d) in enumerate(REGULAR_FAMILY)]
        extra += [("complete", n, "", None) for n in COMPLETE_FAMILY]
        extra += [("empty", n, "", None) for n in (2, 9)]
        for family, n, param, s in extra:
            specs.append(InstanceSpec(len(specs), family, n, param, s))
    return specs


def check_instance(spec: InstanceSpec, k_range: tuple[int, int], exact_max_n: int) -> dict:
    g = spec.build()
    seed = max_degree_seed(g)
    checks: dict[str, bool] = {}
    per_k = []
    for k in range(k_range[0], k_range[1] + 1):
        sol = proof_derandomized(g, k)
        cert = bound_certify(g, k, sol.covered)
        t_cov = sol.covered - seed.delta
        entry = {
            "k": k,
            "vertices": list(sol.vertices),
            "certificate": certificate_dict(cert),
            "recount_ok": union_coverage(g, sol.vertices) == sol.covered,
            "monotone_ok": all(a <= b for a, b in zip(sol.expectations, sol.expectations[1:])),
            "expectation_bound_ok": t_cov >= expectation_lower_bound_exact(g, k),
        }
        if g.n <= exact_max_n:
            best = exact_best(g, k)
            entry["exact"] = best.covered
            entry["dominance_ok"] = best.covered >= sol.covered
        per_k.append(entry)
    checks["certificates"] = all(e["certificate"]["verdict"] for e in per_k)
    checks["recount"] = all(e["recount_ok"] for e in per_k)
    checks["monotone"] = all(e["monotone_ok"] for e in per_k)
    checks["expectation_bound"] = all(e["expectation_bound_ok"] for e in per_k)
    if any("dominance_ok" in e for e in per_k):
        checks["dominance"] = all(e.get("dominance_ok", True) for e in per_k)

    slack = eq1_slack(g)
    checks["eq1_slack"] = slack >= 0
    if spec.family == "complete":
        checks["eq1_tight"] = slack == 0
    if g.n >= 2:
        left, right = k2_pair_identity(g)
        checks["pair_identity"] = left == right
        if len(set(g.degrees)) == 1:
            checks["pair_average"] = min_pair_intersection(g) <= eq0_average_pair(g)
    return {
        **spec.descriptor(),
        "m": g.m,
        "delta": seed.delta,
        "eq1_slack": slack,
        "per_k": per_k,
        "checks": checks,
        "ok": all(checks.values()),
    }


def _worker_count() -> int:
    raw = os.environ.get("KCOVER_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run(args):
    return check_instance(*args)


def run_verify(
    count: int,
    n_range: tuple[int, int],
    k_range: tuple[int, int],
    seed: int,
    exact_max_n: int = 16,
    extremal: bool = False,
) -> dict:
    specs = build_corpus(count, n_range, seed, extremal)
    jobs = [(s, k_range, exact_max_n) for s in specs]
    workers = _worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves submission order, so output is independent of scheduling
            instances = list(pool.map(_run, jobs, chunksize=16))
    else:
        instances = [_run(j) for j in jobs]

    check_names = sorted({name for inst in instances for name in inst["checks"]})
    counts = {
        name: {
            "pass": sum(1 for i in instances if i["checks"].get(name) is True),
            "fail": sum(1 for i in instances if i["checks"].get(name) is False),
        }
        for name in check_names
    }
    failures = [i["index"] for i in instances if not i["ok"]]
    return {
        "schema": SCHEMA,
        "kind": "verify",
        "params": {
            "count": count,
            "n_range": list(n_range),
            "k_range": list(k_range),
            "seed": seed,
            "exact_max_n": exact_max_n,
            "extremal": extremal,
        },
        "instances": instances,
        "summary": {
            "instances": len(instances),
            "certificates": sum(len(i["per_k"]) for i in instances),
            "checks": counts,
            "failures": len(failures),
            "failed_indexes": failures,
        },
        "ok": not failures,
    }
