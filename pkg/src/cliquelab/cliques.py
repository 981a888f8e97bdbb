"""Exact clique computations: clique number with witness, k-clique
decision, maximal-clique enumeration, and the f-vector of the clique
complex (counts of complete subgraphs by size)."""

from dataclasses import dataclass
from typing import Iterator

from . import kernels
from .bits import indices_from_mask
from .errors import DomainError
from .graphs import Graph, is_clique_mask


@dataclass(frozen=True)
class CliqueReport:
    """omega = exact clique number; witness = one clique attaining it."""

    omega: int
    witness: frozenset[int]


def clique_number(g: Graph, node_budget: int | None = None) -> CliqueReport:
    """Exact maximum clique via branch-and-bound with a greedy-coloring
    bound.  omega >= 1 whenever n >= 1; omega = 0 only for n = 0.

    node_budget, if given, caps search nodes and raises
    BudgetExceededError when exhausted."""
    omega, wit = kernels.max_clique(g.n, g.rows, node_budget or 0)
    witness = frozenset(indices_from_mask(wit))
    assert is_clique_mask(g, wit) and len(witness) == omega
    return CliqueReport(omega, witness)


def has_clique(g: Graph, k: int, node_budget: int | None = None) -> bool:
    """True iff omega(g) >= k; terminates at the first k-clique found."""
    if k < 0:
        raise DomainError("k must be non-negative")
    return kernels.has_clique(g.n, g.rows, k, node_budget or 0)


def enumerate_maximal_cliques(g: Graph, cap: int | None = None) -> Iterator[frozenset[int]]:
    """Yield each inclusion-maximal clique exactly once.  cap bounds the
    number of cliques (EnumerationCapError beyond it)."""
    for mask in kernels.maximal_cliques(g.n, g.rows, cap or 0):
        yield frozenset(indices_from_mask(mask))


def maximal_clique_masks(g: Graph, cap: int | None = None) -> list[int]:
    """Maximal cliques as bitmasks (the raw kernel output)."""
    return kernels.maximal_cliques(g.n, g.rows, cap or 0)


def clique_f_vector(g: Graph) -> list[int]:
    """f_k = number of k-vertex subsets inducing a complete subgraph;
    f_0 = 1 for the empty set.  len(result) - 1 equals the clique number."""
    return kernels.clique_f_vector(g.n, g.rows)
