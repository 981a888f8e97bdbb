"""Pure-Python clique kernels on int-bitmask adjacency rows.

This is the fallback backend; cliquelab._ckernels implements the same
four entry points in Cython.  Both backends must return identical omega
values, identical clique counts, and identical maximal-clique streams
(witness masks of the maximum-clique search may differ between builds,
only their size and validity are contractual).

Maximum clique is branch-and-bound with a greedy-coloring upper bound
over bitset candidate sets; vertices are preordered by descending degree
(ties by index).  Maximal cliques use Bron-Kerbosch with the pivot of
maximum candidate-degree.  The clique counter walks the prefix-ordered
clique tree, one node per clique, so counts are exact whenever the walk
finishes.
"""

from .errors import BudgetExceededError, EnumerationCapError

BACKEND_NAME = "python"


def _degree_order(n, rows):
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    prows = [0] * n
    for i, v in enumerate(order):
        m = rows[v]
        pm = 0
        while m:
            b = m & -m
            m ^= b
            pm |= 1 << pos[b.bit_length() - 1]
        prows[i] = pm
    return order, prows


def _color_sequence(cand, prows):
    """Greedy coloring of the candidate set: returns (vertices, colors)
    with colors non-decreasing.  Same color class = independent set, so
    a clique inside `cand` meets each class at most once."""
    seq = []
    cols = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            uncolored ^= b
            avail = (avail ^ b) & ~prows[v]
            seq.append(v)
            cols.append(color)
    return seq, cols


def max_clique(n, rows, node_budget=0):
    """Exact maximum clique.  Returns (omega, witness_mask) in original
    vertex numbering.  node_budget > 0 caps branch-and-bound nodes."""
    if n == 0:
        return 0, 0
    order, prows = _degree_order(n, rows)
    best = 0
    best_mask = 0
    nodes = 0

    def expand(cand, cur, size):
        nonlocal best, best_mask, nodes
        nodes += 1
        if node_budget and nodes > node_budget:
            raise BudgetExceededError(f"max-clique node budget {node_budget} exceeded")
        if not cand:
            if size > best:
                best = size
                best_mask = cur
            return
        seq, cols = _color_sequence(cand, prows)
        for i in range(len(seq) - 1, -1, -1):
            if size + cols[i] <= best:
                return
            v = seq[i]
            b = 1 << v
            expand(cand & prows[v], cur | b, size + 1)
            cand ^= b

    expand((1 << n) - 1, 0, 0)
    # map witness back to original labels
    wit = 0
    m = best_mask
    while m:
        b = m & -m
        m ^= b
        wit |= 1 << order[b.bit_length() - 1]
    return best, wit


def has_clique(n, rows, k, node_budget=0):
    """True iff the graph contains a clique on k vertices; stops at the
    first witness."""
    if k <= 0:
        return True
    if k > n:
        return False
    if k == 1:
        return True
    order, prows = _degree_order(n, rows)
    target = k
    nodes = 0

    def expand(cand, size):
        nonlocal nodes
        nodes += 1
        if node_budget and nodes > node_budget:
            raise BudgetExceededError(f"clique-decision node budget {node_budget} exceeded")
        if size == target:
            return True
        seq, cols = _color_sequence(cand, prows)
        for i in range(len(seq) - 1, -1, -1):
            if size + cols[i] < target:
                return False
            v = seq[i]
            b = 1 << v
            if expand(cand & prows[v], size + 1):
                return True
            cand ^= b
        return False

    return expand((1 << n) - 1, 0)


def maximal_cliques(n, rows, cap=0):
    """All inclusion-maximal cliques as masks, each exactly once, in the
    deterministic order of pivoted Bron-Kerbosch.  cap > 0 bounds the
    number of emitted cliques."""
    out = []

    def bk(r_mask, p_mask, x_mask):
        if not p_mask and not x_mask:
            if cap and len(out) >= cap:
                raise EnumerationCapError(f"maximal-clique cap {cap} exceeded")
            out.append(r_mask)
            return
        # pivot: vertex of P|X with most candidates among its neighbors
        m = p_mask | x_mask
        pivot = -1
        pivot_deg = -1
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            d = (p_mask & rows[u]).bit_count()
            if d > pivot_deg:
                pivot_deg = d
                pivot = u
        ext = p_mask & ~rows[pivot]
        while ext:
            b = ext & -ext
            ext ^= b
            v = b.bit_length() - 1
            bk(r_mask | b, p_mask & rows[v], x_mask & rows[v])
            p_mask ^= b
            x_mask |= b

    bk(0, (1 << n) - 1, 0)
    return out


def clique_f_vector(n, rows):
    """Counts of complete vertex subsets by size, f_0..f_omega (f_0 = 1
    counts the empty set).  One tree node per clique, so any count that
    finishes fits in the node count."""
    counts = [0] * (n + 1)

    def rec(cand, depth):
        counts[depth] += 1
        while cand:
            b = cand & -cand
            cand ^= b
            rec(cand & rows[b.bit_length() - 1], depth + 1)

    rec((1 << n) - 1, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts
