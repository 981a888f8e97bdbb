"""Sequential topological complexity of the flag-complex space of a
graph, via the clique-tuple formula

    TC_s = max over s-tuples (V_1..V_s) of cliques of
           sum |V_l|  -  |intersection of the V_l|.

Adding a vertex to any V_l raises the sum by 1 and the intersection by
at most 1, so the maximum is attained on tuples of maximal cliques; the
exact searcher therefore branches over multisets of maximal cliques
(the objective is permutation-invariant), with intersections tracked as
running bitmasks.  A brute-force oracle over ALL clique subsets (no
maximality assumption) guards that reduction at small n.

For s = 1 the tuple formula degenerates; the value is the clique number
(top dimension of the complex), reported with a maximum clique as
witness.
"""

from dataclasses import dataclass
from itertools import combinations

from .bits import indices_from_mask
from .cliques import clique_number, maximal_clique_masks
from .errors import DomainError
from .graphs import Graph, is_clique_mask


@dataclass(frozen=True)
class TcsReport:
    """value = TC_s; witness = clique tuple attaining it; hdim = clique
    number of the graph (top dimension of the complex)."""

    value: int
    witness: tuple[frozenset[int], ...]
    hdim: int


@dataclass(frozen=True)
class TcsBounds:
    """Deterministic sandwich (s-1)*C <= TC_s <= s*C, plus the
    informational almost-sure lower bound s*(C-1)."""

    lower: int
    upper: int
    aas_lower: int


def tcs_bruteforce(g: Graph, s: int) -> int:
    """Exhaustive maximum over all s-tuples of clique subsets, the empty
    set included.  Hard caps: n <= 8, s <= 4."""
    if g.n < 1 or g.n > 8:
        raise DomainError("brute force supports 1 <= n <= 8")
    if not 2 <= s <= 4:
        raise DomainError("brute force supports 2 <= s <= 4")
    cliques = [m for m in range(1 << g.n) if is_clique_mask(g, m)]  # includes 0
    sizes = {m: m.bit_count() for m in cliques}
    best = 0

    def rec(start: int, chosen_sum: int, inter: int, depth: int):
        nonlocal best
        if depth == s:
            value = chosen_sum - inter.bit_count()
            if value > best:
                best = value
            return
        for idx in range(start, len(cliques)):
            m = cliques[idx]
            rec(idx, chosen_sum + sizes[m], inter & m if depth else m, depth + 1)

    rec(0, 0, 0, 0)
    return best


def tcs_exact(g: Graph, s: int, clique_cap: int | None = None) -> TcsReport:
    """Exact TC_s by branch-and-bound over multisets of maximal cliques.

    clique_cap bounds the maximal-clique enumeration
    (EnumerationCapError beyond it)."""
    if g.n < 1:
        raise DomainError("need n >= 1")
    if s < 1:
        raise DomainError("need s >= 1")
    if s == 1:
        rep = clique_number(g)
        return TcsReport(rep.omega, (rep.witness,), rep.omega)

    masks = maximal_clique_masks(g, clique_cap)
    masks.sort(key=lambda m: -m.bit_count())
    sizes = [m.bit_count() for m in masks]
    hdim = sizes[0]
    count = len(masks)

    # seed: the all-equal tuple on a maximum clique gives (s-1)*hdim
    best = (s - 1) * hdim
    best_tuple = [masks[0]] * s

    def rec(i0: int, chosen: list[int], total: int, inter: int):
        nonlocal best, best_tuple
        depth = len(chosen)
        remaining = s - depth
        if remaining == 0:
            value = total - inter.bit_count()
            if value > best:
                best = value
                best_tuple = chosen.copy()
            return
        if inter == 0 and depth >= 1:
            # intersection already empty: filling up with the largest
            # allowed clique is optimal for the rest
            value = total + remaining * sizes[i0]
            if value > best:
                best = value
                best_tuple = chosen + [masks[i0]] * remaining
            return
        if remaining == 1:
            for j in range(i0, count):
                gain = sizes[j]
                if total + gain <= best:
                    break
                value = total + gain - (inter & masks[j]).bit_count()
                if value > best:
                    best = value
                    best_tuple = chosen + [masks[j]]
            return
        for i in range(i0, count):
            if total + remaining * sizes[i] <= best:
                break
            chosen.append(masks[i])
            rec(i, chosen, total + sizes[i], inter & masks[i] if depth else masks[i])
            chosen.pop()

    rec(0, [], 0, 0)
    witness = tuple(frozenset(indices_from_mask(m)) for m in best_tuple)
    for m in best_tuple:
        assert is_clique_mask(g, m)
    return TcsReport(best, witness, hdim)


def tcs_bounds(g: Graph, s: int) -> TcsBounds:
    """(s-1)*C(g) <= TC_s <= s*C(g) without computing TC_s; the lower
    bound is attained by the all-equal maximum-clique tuple, the upper
    is s times the complex dimension."""
    if s < 1:
        raise DomainError("need s >= 1")
    omega = clique_number(g).omega
    return TcsBounds(lower=(s - 1) * omega, upper=s * omega, aas_lower=s * (omega - 1))
