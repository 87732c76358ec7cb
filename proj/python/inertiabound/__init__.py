"""Exact inertia bounds and non-tightness certificates for graph independence
numbers.

The heavy lifting happens in the C++ extension; everything here is re-exported
from it.  All arithmetic is exact (GMP rationals), so results are proofs, not
approximations.
"""

from ._core import (
    BudgetError,
    Graph,
    alpha,
    certify_not_tight,
    delete_edge,
    delete_vertex,
    grid_search_circulant,
    inertia,
    inertia_bound,
    is_alpha_critical,
    paley,
    random_edge_search,
    symbolic_determinant,
    triangles,
    verify_certificate,
)

__all__ = [
    "BudgetError",
    "Graph",
    "alpha",
    "certify_not_tight",
    "delete_edge",
    "delete_vertex",
    "grid_search_circulant",
    "inertia",
    "inertia_bound",
    "is_alpha_critical",
    "paley",
    "random_edge_search",
    "symbolic_determinant",
    "triangles",
    "verify_certificate",
]
