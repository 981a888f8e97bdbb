# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled clique kernels on packed-word bitsets.

Entry points and results mirror cliquelab._pykernels exactly (same
algorithms, same deterministic orders); only the representation differs:
adjacency rows live in flat uint64 word arrays instead of Python ints.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

from cliquelab.errors import BudgetExceededError, EnumerationCapError

cdef extern from *:
    """
    #include <stdint.h>
    static inline int clq_popcnt(uint64_t x) { return __builtin_popcountll(x); }
    static inline int clq_ctz(uint64_t x) { return __builtin_ctzll(x); }
    """
    int clq_popcnt(unsigned long long x) nogil
    int clq_ctz(unsigned long long x) nogil

ctypedef unsigned long long u64

BACKEND_NAME = "compiled"


cdef inline bint _any_words(u64* w, int nw) nogil:
    cdef int k
    for k in range(nw):
        if w[k]:
            return True
    return False


cdef inline void _and_into(u64* dst, u64* a, u64* b, int nw) nogil:
    cdef int k
    for k in range(nw):
        dst[k] = a[k] & b[k]


cdef class _Search:
    """Word buffers plus branch-and-bound state for one kernel call."""
    cdef int n, nw
    cdef u64* adj          # n * nw adjacency words
    cdef u64* stack        # (n + 2) * nw per-depth candidate sets
    cdef u64* stack2       # (n + 2) * nw second per-depth buffer (BK: X)
    cdef u64* stack3       # (n + 2) * nw third per-depth buffer (BK: ext)
    cdef u64* cur          # nw current-clique mask
    cdef u64* best         # nw best-clique mask
    cdef u64* scratch      # 2 * nw coloring scratch
    cdef int* seq          # (n + 1) * n coloring vertex sequences
    cdef int* col          # (n + 1) * n coloring colors
    cdef long long nodes, budget
    cdef int best_size, target
    cdef bint found

    def __cinit__(self, int n, rows):
        cdef int nw = (n >> 6) + 1
        cdef int i
        self.n = n
        self.nw = nw
        self.adj = <u64*> calloc(max(n, 1) * nw, sizeof(u64))
        self.stack = <u64*> calloc((n + 2) * nw, sizeof(u64))
        self.stack2 = <u64*> calloc((n + 2) * nw, sizeof(u64))
        self.stack3 = <u64*> calloc((n + 2) * nw, sizeof(u64))
        self.cur = <u64*> calloc(nw, sizeof(u64))
        self.best = <u64*> calloc(nw, sizeof(u64))
        self.scratch = <u64*> calloc(2 * nw, sizeof(u64))
        self.seq = <int*> calloc((n + 1) * max(n, 1), sizeof(int))
        self.col = <int*> calloc((n + 1) * max(n, 1), sizeof(int))
        if (self.adj == NULL or self.stack == NULL or self.stack2 == NULL
                or self.stack3 == NULL or self.cur == NULL or self.best == NULL
                or self.scratch == NULL or self.seq == NULL or self.col == NULL):
            raise MemoryError()
        cdef bytes rb
        cdef const unsigned char* pb
        for i in range(n):
            rb = int(rows[i]).to_bytes(nw * 8, "little")
            pb = rb
            memcpy(self.adj + i * nw, pb, nw * 8)
        self.nodes = 0
        self.budget = 0
        self.best_size = 0
        self.target = 0
        self.found = False

    def __dealloc__(self):
        free(self.adj)
        free(self.stack)
        free(self.stack2)
        free(self.stack3)
        free(self.cur)
        free(self.best)
        free(self.scratch)
        free(self.seq)
        free(self.col)

    cdef void load_full_candidates(self):
        cdef int k
        for k in range(self.nw):
            self.stack[k] = 0
        for k in range(self.n):
            self.stack[k >> 6] |= (<u64>1) << (k & 63)

    cdef object mask_to_int(self, u64* w):
        cdef int k
        out = 0
        for k in range(self.nw):
            if w[k]:
                out |= int(w[k]) << (64 * k)
        return out


def _degree_order(int n, rows):
    order = sorted(range(n), key=lambda v: (-int(rows[v]).bit_count(), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    prows = []
    for v in order:
        m = int(rows[v])
        pm = 0
        while m:
            b = m & -m
            m ^= b
            pm |= 1 << pos[b.bit_length() - 1]
        prows.append(pm)
    return order, prows


cdef int _color_count(_Search bs, u64* cand, int* seq, int* col) nogil:
    """Greedy-color `cand`; fill seq/col (colors non-decreasing); return
    the number of colored vertices.  Same color class = independent set,
    so a clique inside `cand` meets each class at most once."""
    cdef int nw = bs.nw
    cdef u64* uncolored = bs.scratch
    cdef u64* avail = bs.scratch + nw
    cdef int k, v, color = 0, m = 0
    cdef u64 word
    for k in range(nw):
        uncolored[k] = cand[k]
    while _any_words(uncolored, nw):
        color += 1
        for k in range(nw):
            avail[k] = uncolored[k]
        while True:
            v = -1
            for k in range(nw):
                word = avail[k]
                if word:
                    v = (k << 6) + clq_ctz(word)
                    break
            if v < 0:
                break
            uncolored[v >> 6] &= ~((<u64>1) << (v & 63))
            avail[v >> 6] &= ~((<u64>1) << (v & 63))
            for k in range(nw):
                avail[k] &= ~bs.adj[v * nw + k]
            seq[m] = v
            col[m] = color
            m += 1
    return m


cdef int _mc_expand(_Search bs, int depth, int size) nogil:
    """Max-clique branch and bound; returns -1 when the node budget runs
    out, 0 otherwise.  bs.best holds the incumbent mask."""
    cdef int nw = bs.nw
    cdef u64* cand = bs.stack + depth * nw
    cdef u64* child = bs.stack + (depth + 1) * nw
    cdef int* seq = bs.seq + depth * bs.n
    cdef int* col = bs.col + depth * bs.n
    cdef int m, i, v, r
    cdef u64 bit
    bs.nodes += 1
    if bs.budget > 0 and bs.nodes > bs.budget:
        return -1
    if not _any_words(cand, nw):
        if size > bs.best_size:
            bs.best_size = size
            memcpy(bs.best, bs.cur, nw * 8)
        return 0
    m = _color_count(bs, cand, seq, col)
    for i in range(m - 1, -1, -1):
        if size + col[i] <= bs.best_size:
            return 0
        v = seq[i]
        bit = (<u64>1) << (v & 63)
        _and_into(child, cand, bs.adj + v * nw, nw)
        bs.cur[v >> 6] |= bit
        r = _mc_expand(bs, depth + 1, size + 1)
        bs.cur[v >> 6] &= ~bit
        if r < 0:
            return r
        cand[v >> 6] &= ~bit
    return 0


def max_clique(int n, rows, long long node_budget=0):
    """Exact maximum clique.  Returns (omega, witness_mask) in original
    vertex numbering.  node_budget > 0 caps branch-and-bound nodes."""
    if n == 0:
        return 0, 0
    order, prows = _degree_order(n, rows)
    cdef _Search bs = _Search(n, prows)
    bs.load_full_candidates()
    bs.budget = node_budget
    if _mc_expand(bs, 0, 0) < 0:
        raise BudgetExceededError(f"max-clique node budget {node_budget} exceeded")
    wit_perm = bs.mask_to_int(bs.best)
    wit = 0
    while wit_perm:
        b = wit_perm & -wit_perm
        wit_perm ^= b
        wit |= 1 << order[b.bit_length() - 1]
    return bs.best_size, wit


cdef int _hc_expand(_Search bs, int depth, int size) nogil:
    """Decision search for a clique of size bs.target; 1 = found,
    -1 = budget exceeded, 0 = exhausted."""
    cdef int nw = bs.nw
    cdef u64* cand = bs.stack + depth * nw
    cdef u64* child = bs.stack + (depth + 1) * nw
    cdef int* seq = bs.seq + depth * bs.n
    cdef int* col = bs.col + depth * bs.n
    cdef int m, i, v, r
    cdef u64 bit
    bs.nodes += 1
    if bs.budget > 0 and bs.nodes > bs.budget:
        return -1
    if size == bs.target:
        return 1
    m = _color_count(bs, cand, seq, col)
    for i in range(m - 1, -1, -1):
        if size + col[i] < bs.target:
            return 0
        v = seq[i]
        bit = (<u64>1) << (v & 63)
        _and_into(child, cand, bs.adj + v * nw, nw)
        r = _hc_expand(bs, depth + 1, size + 1)
        if r != 0:
            return r
        cand[v >> 6] &= ~bit
    return 0


def has_clique(int n, rows, int k, long long node_budget=0):
    """True iff the graph contains a clique on k vertices; stops at the
    first witness."""
    if k <= 0:
        return True
    if k > n:
        return False
    if k == 1:
        return True
    order, prows = _degree_order(n, rows)
    cdef _Search bs = _Search(n, prows)
    bs.load_full_candidates()
    bs.budget = node_budget
    bs.target = k
    cdef int r = _hc_expand(bs, 0, 0)
    if r < 0:
        raise BudgetExceededError(f"clique-decision node budget {node_budget} exceeded")
    return r == 1


cdef int _bk(_Search bs, int depth, list out, long long cap) except -2:
    cdef int nw = bs.nw
    cdef u64* p_mask = bs.stack + depth * nw
    cdef u64* x_mask = bs.stack2 + depth * nw
    cdef u64* ext = bs.stack3 + depth * nw
    cdef u64* child_p = bs.stack + (depth + 1) * nw
    cdef u64* child_x = bs.stack2 + (depth + 1) * nw
    cdef int k, u, v, d, pivot, pivot_deg, r
    cdef u64 word, bit
    if not _any_words(p_mask, nw) and not _any_words(x_mask, nw):
        if cap and len(out) >= cap:
            raise EnumerationCapError(f"maximal-clique cap {cap} exceeded")
        out.append(bs.mask_to_int(bs.cur))
        return 0
    # pivot: vertex of P|X with most candidates among its neighbors,
    # ties to the lowest index (matches the pure backend)
    pivot = -1
    pivot_deg = -1
    for k in range(nw):
        word = p_mask[k] | x_mask[k]
        while word:
            u = (k << 6) + clq_ctz(word)
            word &= word - 1
            d = 0
            for v in range(nw):
                d += clq_popcnt(p_mask[v] & bs.adj[u * nw + v])
            if d > pivot_deg:
                pivot_deg = d
                pivot = u
    for k in range(nw):
        ext[k] = p_mask[k] & ~bs.adj[pivot * nw + k]
    while True:
        v = -1
        for k in range(nw):
            word = ext[k]
            if word:
                v = (k << 6) + clq_ctz(word)
                break
        if v < 0:
            break
        bit = (<u64>1) << (v & 63)
        ext[v >> 6] &= ~bit
        _and_into(child_p, p_mask, bs.adj + v * nw, nw)
        _and_into(child_x, x_mask, bs.adj + v * nw, nw)
        bs.cur[v >> 6] |= bit
        r = _bk(bs, depth + 1, out, cap)
        bs.cur[v >> 6] &= ~bit
        if r != 0:
            return r
        p_mask[v >> 6] &= ~bit
        x_mask[v >> 6] |= bit
    return 0


def maximal_cliques(int n, rows, long long cap=0):
    """All inclusion-maximal cliques as masks, each exactly once, in the
    deterministic order of pivoted Bron-Kerbosch.  cap > 0 bounds the
    number of emitted cliques."""
    cdef _Search bs = _Search(n, rows)
    bs.load_full_candidates()
    out: list = []
    _bk(bs, 0, out, cap)
    return out


cdef void _fc(_Search bs, int depth, u64* counts) nogil:
    cdef int nw = bs.nw
    cdef u64* cand = bs.stack + depth * nw
    cdef u64* child = bs.stack + (depth + 1) * nw
    cdef int k, v
    cdef u64 word, bit
    counts[depth] += 1
    while True:
        v = -1
        for k in range(nw):
            word = cand[k]
            if word:
                v = (k << 6) + clq_ctz(word)
                break
        if v < 0:
            return
        bit = (<u64>1) << (v & 63)
        cand[v >> 6] &= ~bit
        _and_into(child, cand, bs.adj + v * nw, nw)
        _fc(bs, depth + 1, counts)


def clique_f_vector(int n, rows):
    """Counts of complete vertex subsets by size, f_0..f_omega (f_0 = 1
    counts the empty set).  One tree node per clique, so any count that
    finishes fits in the node count."""
    cdef _Search bs = _Search(n, rows)
    bs.load_full_candidates()
    cdef u64* counts = <u64*> calloc(n + 2, sizeof(u64))
    if counts == NULL:
        raise MemoryError()
    cdef int last = n
    try:
        _fc(bs, 0, counts)
        while last > 0 and counts[last] == 0:
            last -= 1
        result = [int(counts[k]) for k in range(last + 1)]
    finally:
        free(counts)
    return result
