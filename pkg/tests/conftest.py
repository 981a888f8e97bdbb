"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the package's own search code:
clique checks go through itertools over explicit vertex tuples, counts
enumerate tuples directly, and graphs are built bit by bit from a
python Random stream (not the package sampler).
"""

import itertools
import random

import pytest

from cliquelab.graphs import Graph, graph_from_rows


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return graph_from_rows(rows)


def all_graphs(n: int):
    """Every labeled graph on n vertices, as Graph objects."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        t = bits
        k = 0
        while t:
            if t & 1:
                i, j = pairs[k]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            t >>= 1
            k += 1
        yield graph_from_rows(rows)


def oracle_is_clique(g: Graph, vertices) -> bool:
    return all(g.rows[u] >> v & 1 for u, v in itertools.combinations(vertices, 2))


def oracle_omega(g: Graph) -> int:
    """All-subsets maximum clique size (exponential; n <= ~16)."""
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if oracle_is_clique(g, vs):
            best = max(best, len(vs))
    return best


def oracle_maximal_cliques(g: Graph) -> set[frozenset[int]]:
    cliques = [frozenset(vs) for k in range(g.n + 1)
               for vs in itertools.combinations(range(g.n), k)
               if oracle_is_clique(g, vs)]
    out = set()
    for c in cliques:
        if not any(c < d for d in cliques):
            out.add(c)
    return out


def oracle_count_multicliques(g: Graph, s: int, r: int) -> int:
    """Ordered tuples of pairwise disjoint r-cliques, enumerated
    directly."""
    rcl = [frozenset(c) for c in itertools.combinations(range(g.n), r)
           if oracle_is_clique(g, c)]
    count = 0
    for tup in itertools.permutations(rcl, s):
        seen: set[int] = set()
        ok = True
        for part in tup:
            if seen & part:
                ok = False
                break
            seen |= part
        if ok:
            count += 1
    return count


def oracle_tcs(g: Graph, s: int) -> int:
    """Exhaustive maximum of sum|V_l| - |inter V_l| over all s-tuples of
    clique subsets (empty allowed), via multisets."""
    cliques = [m for m in range(1 << g.n)
               if oracle_is_clique(g, [v for v in range(g.n) if m >> v & 1])]
    best = 0
    for tup in itertools.combinations_with_replacement(cliques, s):
        inter = tup[0]
        total = 0
        for m in tup:
            inter &= m
            total += m.bit_count()
        best = max(best, total - inter.bit_count())
    return best


@pytest.fixture
def rng():
    return random.Random(0xC11C)
