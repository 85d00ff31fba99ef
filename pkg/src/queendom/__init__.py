"""Domination numbers of the three-dimensional queen graph: coverage strata,
symmetry reduction, bounds, exact solving with certificates, and an
independent verifier."""

from .board import BoardSpec, CellSet, build_adjacency, canonical_directions, closed_neighbourhood, line_through
from .solver import Limits, OptimalityCertificate, SolveResult, certify_infeasible, solve_exact
from .verifier import check_certificate, is_dominating

__all__ = [
    "BoardSpec",
    "CellSet",
    "Limits",
    "OptimalityCertificate",
    "SolveResult",
    "build_adjacency",
    "canonical_directions",
    "certify_infeasible",
    "check_certificate",
    "closed_neighbourhood",
    "is_dominating",
    "line_through",
    "solve_exact",
]
