"""Fast self-check suite behind the `verify` CLI subcommand.

Each check re-derives a handful of module invariants from scratch
(independent brute-force oracles where available) and returns True or
False; the CLI prints one line per check and exits 0 only if all pass.
The pytest suite runs the same families of checks at much larger sizes.
"""

import itertools
import random
from fractions import Fraction

from . import _pykernels, analytic, kernels
from .cliques import clique_f_vector, clique_number, enumerate_maximal_cliques
from .graphs import (GnpParams, complete_graph, cycle_graph, edgeless_graph, graph_from_rows,
                     is_clique_set, read_dimacs, sample_gnp, sample_gnp_reference, write_dimacs)
from .montecarlo import ExperimentConfig, run_window
from .multicliques import count_multicliques, find_multiclique
from .rng import splitmix64_stream
from .scalars import EXACT, LOG, relative_gap
from .tcs import tcs_bruteforce, tcs_exact

HALF = Fraction(1, 2)


def _random_graph(rng: random.Random, n: int, p: float = 0.5):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return graph_from_rows(rows)


def _brute_omega(g) -> int:
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if all(g.rows[u] >> v & 1 for i, u in enumerate(vs) for v in vs[i + 1 :]):
            best = max(best, len(vs))
    return best


def check_splitmix_reference_vector() -> bool:
    expected = [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]
    return list(splitmix64_stream(1234567, 5)) == expected


def check_sampler_bulk_vs_reference() -> bool:
    for seed in (0, 1, 2**63, 123456789):
        params = GnpParams(40, Fraction(3, 10), seed)
        if sample_gnp(params) != sample_gnp_reference(params):
            return False
    return True


def check_sampler_determinism_and_extremes() -> bool:
    a = sample_gnp(GnpParams(50, HALF, 777))
    b = sample_gnp(GnpParams(50, HALF, 777))
    if a != b:
        return False
    if sample_gnp(GnpParams(10, Fraction(1), 5)).edge_count() != 45:
        return False
    return sample_gnp(GnpParams(10, Fraction(0), 5)).edge_count() == 0


def check_dimacs_round_trip() -> bool:
    rng = random.Random(11)
    for _ in range(10):
        g = _random_graph(rng, rng.randint(0, 12))
        if read_dimacs(write_dimacs(g)) != g:
            return False
    return True


def check_clique_oracle_n5() -> bool:
    for bits in range(1 << 10):
        rows = [0] * 5
        k = 0
        for i in range(5):
            for j in range(i + 1, 5):
                if bits >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
        g = graph_from_rows(rows)
        if clique_number(g).omega != _brute_omega(g):
            return False
    return True


def check_f_vector_consistency() -> bool:
    rng = random.Random(13)
    for _ in range(40):
        g = _random_graph(rng, rng.randint(1, 18))
        fv = clique_f_vector(g)
        rep = clique_number(g)
        if fv[0] != 1 or len(fv) - 1 != rep.omega or fv[-1] <= 0:
            return False
    return True


def check_maximal_cliques_valid() -> bool:
    rng = random.Random(17)
    for _ in range(25):
        g = _random_graph(rng, rng.randint(1, 16))
        full = g.full_mask()
        for clique in enumerate_maximal_cliques(g):
            if not is_clique_set(g, clique):
                return False
            mask = 0
            for v in clique:
                mask |= 1 << v
            common = full & ~mask
            for v in clique:
                common &= g.rows[v]
            if common:
                return False  # an extending vertex exists
    return True


def check_backend_parity() -> bool:
    rng = random.Random(19)
    for _ in range(15):
        g = _random_graph(rng, rng.randint(1, 40))
        if kernels.max_clique(g.n, g.rows)[0] != _pykernels.max_clique(g.n, g.rows)[0]:
            return False
        if kernels.maximal_cliques(g.n, g.rows) != _pykernels.maximal_cliques(g.n, g.rows):
            return False
        if kernels.clique_f_vector(g.n, g.rows) != _pykernels.clique_f_vector(g.n, g.rows):
            return False
    return True


def check_multiclique_count_find() -> bool:
    rng = random.Random(23)
    import math as _math
    for _ in range(60):
        n = rng.randint(2, 7)
        g = _random_graph(rng, n)
        s = rng.randint(1, 3)
        r = rng.randint(1, 3)
        if s * r > n:
            continue
        c = count_multicliques(g, s, r)
        if c % _math.factorial(s):
            return False
        if (find_multiclique(g, s, r) is not None) != (c > 0):
            return False
    return True


def check_analytic_values() -> bool:
    ok = abs(analytic.z_value(1024, HALF) - 15.241534) < 1e-5
    ok &= analytic.clique_target_r(1024, HALF, HALF) == 14
    ok &= analytic.d_size(2, 2) == 26
    a0 = analytic.zero_matrix(2, 2)
    ok &= analytic.weight_F(8, 2, 2, a0).as_fraction() == Fraction(1, 70)
    ok &= analytic.second_moment_ratio(4, HALF, 2, 2).as_fraction() == 2
    for n in (4, 6, 8, 10):
        ok &= analytic.sum_F_over_D(n, 2, 2).as_fraction() == 1
    ok &= abs(analytic.lambda_max(2, HALF) - 0.043963) < 1e-5
    ok &= abs(analytic.stirling_c(100, 1, 4) - 0.36772) < 1e-4
    tz = analytic.t_zero_check(1000, HALF, 2, 2)
    ok &= tz.holds and abs(tz.t0.to_float() - 0.98407) < 1e-4
    return bool(ok)


def check_ratio_identities() -> bool:
    n, p, r, s = 12, HALF, 2, 2
    for A in analytic.enumerate_D(s, r):
        rs, cs = A.row_sums(), A.col_sums()
        for i in range(s):
            for j in range(s):
                t_a = analytic.weight_T(n, p, r, s, A)
                if rs[i] + 1 <= r and cs[j] + 1 <= r:
                    direct = analytic.weight_T(n, p, r, s, A.bumped(i, j)) / t_a
                    if analytic.increment_ratio(n, p, r, s, A, i, j) != direct:
                        return False
                if rs[i] + 2 <= r and cs[j] + 2 <= r:
                    t1 = analytic.weight_T(n, p, r, s, A.bumped(i, j))
                    t2 = analytic.weight_T(n, p, r, s, A.bumped(i, j, 2))
                    direct = (t2 * t_a) / (t1 * t1)
                    if analytic.convexity_ratio(n, p, r, s, A, i, j) != direct:
                        return False
    return True


def check_exact_log_agreement() -> bool:
    for (n, r, s) in ((8, 2, 2), (10, 3, 2), (12, 2, 3)):
        e = analytic.second_moment_ratio(n, HALF, r, s, EXACT)
        l = analytic.second_moment_ratio(n, HALF, r, s, LOG)
        if relative_gap(e, l) > 1e-10:
            return False
    return True


def check_tcs_oracle() -> bool:
    rng = random.Random(29)
    for _ in range(40):
        g = _random_graph(rng, rng.randint(1, 7))
        for s in (2, 3):
            if tcs_exact(g, s).value != tcs_bruteforce(g, s):
                return False
    for m in range(1, 6):
        for s in (2, 3):
            if tcs_exact(complete_graph(m), s).value != (s - 1) * m:
                return False
    for n in range(2, 6):
        for s in range(2, n + 1):
            if tcs_exact(edgeless_graph(n), s).value != s:
                return False
    return tcs_exact(cycle_graph(5), 2).value == 4


def check_tcs_sandwich() -> bool:
    rng = random.Random(31)
    for _ in range(30):
        g = _random_graph(rng, rng.randint(1, 14))
        omega = clique_number(g).omega
        for s in (2, 3):
            v = tcs_exact(g, s).value
            if not (s - 1) * omega <= v <= s * omega:
                return False
    return True


def check_mc_thread_reproducibility() -> bool:
    cfg = ExperimentConfig(kind="window", n=32, p=HALF, epsilon=HALF,
                           samples=6, master_seed=424242)
    r1 = run_window(cfg, threads=1)
    r3 = run_window(cfg, threads=3)
    return r1.csv_text() == r3.csv_text() and r1.summary.to_json() == r3.summary.to_json()


CHECKS = [
    ("splitmix64 reference vector", check_splitmix_reference_vector),
    ("sampler bulk vs scalar reference", check_sampler_bulk_vs_reference),
    ("sampler determinism and p in {0,1}", check_sampler_determinism_and_extremes),
    ("dimacs round trip", check_dimacs_round_trip),
    ("clique number vs all-subsets oracle (n=5 exhaustive)", check_clique_oracle_n5),
    ("f-vector consistency with omega", check_f_vector_consistency),
    ("maximal cliques valid and unextendable", check_maximal_cliques_valid),
    ("kernel backend parity", check_backend_parity),
    ("multi-clique count divisibility and find<->count", check_multiclique_count_find),
    ("analytic frozen values", check_analytic_values),
    ("increment/convexity ratio identities", check_ratio_identities),
    ("exact vs log mode agreement", check_exact_log_agreement),
    ("tcs exact vs brute force", check_tcs_oracle),
    ("tcs deterministic sandwich", check_tcs_sandwich),
    ("monte carlo thread reproducibility", check_mc_thread_reproducibility),
]


def run_all() -> list[tuple[str, bool]]:
    return [(name, bool(fn())) for name, fn in CHECKS]
