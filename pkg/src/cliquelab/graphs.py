"""Simple undirected graphs with bitset adjacency rows, G(n,p) sampling,
and DIMACS edge-format I/O.

Vertices are 0-indexed everywhere in the Python API and 1-indexed in all
text formats and printed messages (DIMACS, CLI output).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .bits import iter_bits, mask_from_indices
from .errors import DomainError
from .rng import MASK64, splitmix64_bulk, splitmix64_stream


@dataclass(frozen=True)
class Graph:
    """Immutable graph on vertices 0..n-1; rows[i] is the neighbor bitmask
    of vertex i (symmetric, zero diagonal)."""

    n: int
    rows: tuple[int, ...]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            higher = self.rows[u] >> (u + 1)
            for d in iter_bits(higher):
                out.append((u, u + 1 + d))
        return out

    def full_mask(self) -> int:
        return (1 << self.n) - 1


def validate_graph(g: Graph) -> None:
    """Check adjacency symmetry and loop-freeness; raise DomainError if
    either fails.  O(n + E); used by tests and untrusted constructors."""
    if g.n < 0 or len(g.rows) != g.n:
        raise DomainError("row count does not match vertex count")
    full = g.full_mask()
    for u in range(g.n):
        row = g.rows[u]
        if row & ~full:
            raise DomainError(f"row {u + 1} has bits outside 1..{g.n}")
        if row >> u & 1:
            raise DomainError(f"self-loop at vertex {u + 1}")
        for v in iter_bits(row):
            if not g.rows[v] >> u & 1:
                raise DomainError(f"asymmetric edge ({u + 1},{v + 1})")


@dataclass(frozen=True)
class GnpParams:
    """Parameters of one G(n,p) draw.  p is an exact rational in [0,1];
    seed is a 64-bit unsigned integer."""

    n: int
    p: Fraction
    seed: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("n must be non-negative")
        p = Fraction(self.p)
        if not 0 <= p <= 1:
            raise DomainError("p must lie in [0, 1]")
        object.__setattr__(self, "p", p)
        if not 0 <= self.seed <= MASK64:
            raise DomainError("seed must be a 64-bit unsigned integer")


def _edge_threshold(p: Fraction) -> int:
    """Edge present iff a uniform 64-bit draw is < floor(p * 2**64).
    The bias against exact p is < 2**-64."""
    return (p.numerator << 64) // p.denominator


def sample_gnp(params: GnpParams) -> Graph:
    """Draw one graph from G(n,p).

    One SplitMix64 output is consumed per potential edge, in the fixed
    lexicographic order of pairs (i,j) with i<j, so the same (n,p,seed)
    yields a bit-identical graph on every platform and thread count.
    """
    n, p, seed = params.n, params.p, params.seed
    m = n * (n - 1) // 2
    if n == 0 or m == 0:
        return Graph(n, tuple([0] * n))
    thr = _edge_threshold(p)
    if thr >= 1 << 64:
        bools = np.ones(m, dtype=bool)
    elif thr <= 0:
        bools = np.zeros(m, dtype=bool)
    else:
        bools = splitmix64_bulk(seed, m) < np.uint64(thr)
    upper = np.zeros((n, n), dtype=bool)
    iu, ju = np.triu_indices(n, k=1)
    upper[iu, ju] = bools
    adj = upper | upper.T
    packed = np.packbits(adj, axis=1, bitorder="little")
    rows = tuple(int.from_bytes(packed[i].tobytes(), "little") for i in range(n))
    return Graph(n, rows)


def sample_gnp_reference(params: GnpParams) -> Graph:
    """Scalar-loop reference for sample_gnp; same stream, same graph.
    Kept as an independently-coded oracle for the vectorized sampler."""
    n, p = params.n, params.p
    thr = _edge_threshold(p)
    rows = [0] * n
    m = n * (n - 1) // 2
    draws = splitmix64_stream(params.seed, m)
    for i in range(n):
        for j in range(i + 1, n):
            if next(draws) < thr:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from 1-indexed endpoint pairs (as in the text
    formats).  Duplicate edges collapse; self-loops and out-of-range
    endpoints raise DomainError."""
    if n < 0:
        raise DomainError("n must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise DomainError(f"edge ({u},{v}) out of range 1..{n}")
        if u == v:
            raise DomainError(f"self-loop at vertex {u}")
        rows[u - 1] |= 1 << (v - 1)
        rows[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(rows))


def is_clique_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every pair of distinct vertices in the set is adjacent.
    Vacuously true for the empty set and singletons."""
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v + 1} out of range 1..{g.n}")
        mask |= 1 << v
    return is_clique_mask(g, mask)


def is_clique_mask(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if g.rows[v] & mask != mask ^ (1 << v):
            return False
    return True


def read_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format: optional 'c' comment lines, one header
    'p edge <n> <m>', then 'e <u> <v>' lines with 1-indexed endpoints."""
    n = None
    rows: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise DomainError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DomainError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise DomainError(f"line {lineno}: malformed problem line {line!r}")
            if n < 0:
                raise DomainError(f"line {lineno}: negative vertex count")
            rows = [0] * n
        elif parts[0] == "e":
            if n is None:
                raise DomainError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise DomainError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DomainError(f"line {lineno}: malformed edge line {line!r}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise DomainError(f"line {lineno}: edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise DomainError(f"line {lineno}: self-loop at vertex {u}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        else:
            raise DomainError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise DomainError("missing problem line 'p edge <n> <m>'")
    return Graph(n, tuple(rows))


def write_dimacs(g: Graph, comment: str | None = None) -> str:
    """Serialize to DIMACS edge format (1-indexed, edges sorted)."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    for u, v in edges:
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    """Graph induced on the vertices of `mask`, compactly renumbered.
    Returns (subgraph, mapping) with mapping[new_index] = old_index."""
    mapping = list(iter_bits(mask))
    pos = {v: i for i, v in enumerate(mapping)}
    rows = []
    for v in mapping:
        rows.append(mask_from_indices(pos[u] for u in iter_bits(g.rows[v] & mask)))
    return Graph(len(mapping), tuple(rows)), mapping


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple((full ^ (1 << i)) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def edgeless_graph(n: int) -> Graph:
    return Graph(n, tuple([0] * n))


def graph_from_rows(rows: Sequence[int]) -> Graph:
    """Trusted constructor from precomputed adjacency masks."""
    return Graph(len(rows), tuple(rows))
