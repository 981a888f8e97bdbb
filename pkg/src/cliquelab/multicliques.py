"""Search for and count ordered s-tuples of pairwise disjoint r-cliques.

The exact searcher backtracks over parts in canonical order (the lowest
vertex of each successive part increases), so each unordered family is
visited once; ordered counts multiply by s!.  The greedy searcher peels
off a maximum clique, keeps its r lowest-indexed vertices, deletes them
and repeats: sound but incomplete, so a miss is not a proof of absence.
"""

import math
from dataclasses import dataclass

from . import kernels
from .bits import indices_from_mask
from .errors import BudgetExceededError, DomainError, EnumerationCapError
from .graphs import Graph, induced_subgraph, is_clique_mask

DEFAULT_COUNT_CAP = 10_000_000

EXACT = "exact"
GREEDY = "greedy"


@dataclass(frozen=True)
class MultiClique:
    """Ordered tuple of pairwise disjoint same-size vertex sets, each
    inducing a complete subgraph."""

    parts: tuple[frozenset[int], ...]
    r: int

    def validate(self, g: Graph) -> None:
        seen: set[int] = set()
        for part in self.parts:
            if len(part) != self.r:
                raise DomainError("part size differs from r")
            if seen & part:
                raise DomainError("parts are not pairwise disjoint")
            seen |= part
            if not is_clique_mask(g, _mask(part)):
                raise DomainError("a part does not induce a complete subgraph")


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _color_bound(rows, cand: int) -> int:
    """Number of greedy color classes of the graph induced on `cand`;
    an upper bound on its clique number."""
    classes = 0
    uncolored = cand
    while uncolored:
        classes += 1
        avail = uncolored
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            uncolored ^= b
            avail = (avail ^ b) & ~rows[v]
    return classes


class _Budget:
    __slots__ = ("nodes", "limit", "label")

    def __init__(self, limit, label):
        self.nodes = 0
        self.limit = limit
        self.label = label

    def tick(self):
        self.nodes += 1
        if self.limit and self.nodes > self.limit:
            if self.label == "budget":
                raise BudgetExceededError(f"multi-clique node budget {self.limit} exceeded")
            raise EnumerationCapError(f"multi-clique enumeration cap {self.limit} exceeded")


def _parts_search(rows, n, s, r, budget, on_complete):
    """Backtrack over part families in canonical order.  on_complete is
    called with the list of part masks whenever all s parts are placed;
    returning True stops the search (used by find)."""
    above = [(~((1 << (v + 1)) - 1)) & ((1 << n) - 1) for v in range(n)]
    full = (1 << n) - 1

    def extend_clique(cand, base_mask, need, avail, floor_v, parts):
        budget.tick()
        if need == 0:
            return place_parts(avail & ~base_mask, floor_v, parts + [base_mask])
        if cand.bit_count() < need:
            return False
        c = cand
        while c:
            b = c & -c
            c ^= b
            v = b.bit_length() - 1
            if extend_clique(c & rows[v], base_mask | b, need - 1, avail, floor_v, parts):
                return True
        return False

    def place_parts(avail, floor_v, parts):
        budget.tick()
        if len(parts) == s:
            return bool(on_complete(parts))
        remaining = s - len(parts)
        usable = avail if floor_v < 0 else avail & above[floor_v]
        if usable.bit_count() < remaining * r:
            return False
        if r >= 2 and _color_bound(rows, usable) < r:
            return False
        c = usable
        while c:
            b = c & -c
            c ^= b
            v = b.bit_length() - 1
            if (c | b).bit_count() < remaining * r:
                break
            if extend_clique(c & rows[v], b, r - 1, avail, v, parts):
                return True
        return False

    return place_parts(full, -1, [])


def find_multiclique(g: Graph, s: int, r: int, strategy: str = EXACT,
                     node_budget: int | None = None) -> MultiClique | None:
    """One s-tuple of disjoint r-cliques, or None.

    exact: complete backtracking; None is a proof that no witness exists.
    greedy: fast truncated-maximum-clique peeling; None proves nothing.
    """
    if s < 1 or r < 0:
        raise DomainError("need s >= 1 and r >= 0")
    if s * r > g.n:
        return None  # too few vertices for s disjoint r-sets
    if r == 0:
        return MultiClique(tuple(frozenset() for _ in range(s)), 0)
    if strategy == GREEDY:
        return _find_greedy(g, s, r)
    if strategy != EXACT:
        raise DomainError(f"unknown strategy {strategy!r}")

    budget = _Budget(node_budget, "budget")
    found: list[tuple[int, ...]] = []

    def accept(parts):
        found.append(tuple(parts))
        return True

    _parts_search(g.rows, g.n, s, r, budget, accept)
    if not found:
        return None
    parts = tuple(frozenset(indices_from_mask(m)) for m in found[0])
    mc = MultiClique(parts, r)
    mc.validate(g)
    return mc


def _find_greedy(g: Graph, s: int, r: int) -> MultiClique | None:
    avail = g.full_mask()
    parts = []
    for _ in range(s):
        sub, mapping = induced_subgraph(g, avail)
        omega, wit = kernels.max_clique(sub.n, sub.rows)
        if omega < r:
            return None
        chosen = sorted(mapping[v] for v in indices_from_mask(wit))[:r]
        parts.append(frozenset(chosen))
        avail &= ~_mask(chosen)
    mc = MultiClique(tuple(parts), r)
    mc.validate(g)
    return mc


def count_multicliques(g: Graph, s: int, r: int, cap: int | None = DEFAULT_COUNT_CAP) -> int:
    """Exact number of ordered s-tuples of pairwise disjoint r-cliques.
    Divisible by s! (permuting the parts of a witness permutes distinct
    tuples).  Intended for small graphs; the search cap guards runtime."""
    if s < 1 or r < 1:
        raise DomainError("need s >= 1 and r >= 1")
    if s * r > g.n:
        return 0
    budget = _Budget(cap, "cap")
    hits = [0]

    def accept(parts):
        hits[0] += 1
        return False  # keep enumerating

    _parts_search(g.rows, g.n, s, r, budget, accept)
    return hits[0] * math.factorial(s)
