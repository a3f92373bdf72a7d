"""The random-graph example is a statement about the average k-tuple, checked here at n = 300."""
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from kcover.generators import gen_gnp


def mean_union(g, k):
    # vertex w is missed by a k-subset iff all k picks avoid N(w)
    n = g.n
    hits = sum(comb(n, k) - comb(n - d, k) for d in g.degrees)
    return Fraction(hits, comb(n, k))


@pytest.fixture(scope="module")
def g300():
    return gen_gnp(300, 0.3, seed=1)


def test_mean_union_matches_enumeration(g300):
    rows = g300.rows
    direct = Fraction(sum((rows[a] | rows[b]).bit_count() for a, b in combinations(range(300), 2)), comb(300, 2))
    assert mean_union(g300, 2) == direct


@pytest.mark.parametrize("k", [2, 3])
def test_mean_union_near_random_graph_prediction(g300, k):
    predicted = (300 - k) * (1 - 0.7**k)
    assert abs(float(mean_union(g300, k)) - predicted) <= 0.05 * predicted
