"""Find k vertices whose neighborhoods cover min{(1-(1-c)^k) n, sqrt(c) n} vertices, and check why that works."""
from .bounds import BoundCertificate, bound_certify
from .coverage import CoverageSolution, Method, exact_best, greedy_best, monte_carlo, proof_derandomized
from .graph import Graph, SeedDecomposition, average_degree, complement, max_degree_seed, neighborhood, union_coverage

__all__ = [
    "BoundCertificate",
    "CoverageSolution",
    "Graph",
    "Method",
    "SeedDecomposition",
    "average_degree",
    "bound_certify",
    "complement",
    "exact_best",
    "greedy_best",
    "max_degree_seed",
    "monte_carlo",
    "neighborhood",
    "proof_derandomized",
    "union_coverage",
]
