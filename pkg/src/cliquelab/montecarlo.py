"""Reproducible Monte Carlo experiments over G(n,p).

Every sample draws its own graph from a derived seed that is a pure
function of (master_seed, index), so results are independent of
execution order and thread count; records are re-sorted by index before
any output.  Summaries carry empirical probabilities as exact fractions
plus a normal-approximation 95% confidence interval (diagnostic only).

Experiment kinds
    window       exact clique number against the concentration window
                 [floor(z - eps), floor(z + eps)]
    multiclique  search for s disjoint cliques of the target size
    tcs          sequential topological complexity, exact or as a
                 certified interval from greedy clique peeling
    expectation  sample mean of the ordered multi-clique count against
                 its closed-form expectation; small edge spaces are
                 enumerated exhaustively instead of sampled
"""

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import analytic
from .cliques import clique_number
from .errors import DomainError, ResourceLimitError
from .graphs import Graph, GnpParams, induced_subgraph, sample_gnp
from .kernels import max_clique
from .multicliques import count_multicliques, find_multiclique
from .rng import MASK64, derive_seed

KINDS = ("window", "multiclique", "tcs", "expectation")
EXHAUSTIVE_EDGE_LIMIT = 20  # enumerate all graphs when C(n,2) <= this


def _rat(value) -> Fraction:
    """Exact rational from an int, 'a/b' string, or decimal string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        # floats are accepted for epsilon-style fields via their printed
        # decimal form; probabilities should be given as 'a/b'
        return Fraction(str(value))
    raise DomainError(f"cannot interpret {value!r} as a rational")


def _rat_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    n: int
    p: Fraction
    epsilon: Fraction = Fraction(1, 2)
    s: int = 2
    r_override: int | None = None
    samples: int = 30
    master_seed: int = 0
    strategy: str = "exact"
    thread_hint: int = 1
    exhaustive: bool | None = None
    node_budget: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown experiment kind {self.kind!r}")
        object.__setattr__(self, "p", _rat(self.p))
        object.__setattr__(self, "epsilon", _rat(self.epsilon))
        if not 0 < self.p < 1:
            raise DomainError("p must lie strictly between 0 and 1")
        if self.epsilon <= 0:
            raise DomainError("epsilon must be positive")
        if self.n < 2:
            raise DomainError("n must be at least 2")
        if self.s < 1:
            raise DomainError("s must be at least 1")
        if self.samples < 1:
            raise DomainError("samples must be at least 1")
        if not 0 <= self.master_seed <= MASK64:
            raise DomainError("master_seed must be a 64-bit unsigned integer")
        if self.strategy not in ("exact", "greedy"):
            raise DomainError(f"unknown strategy {self.strategy!r}")
        if self.thread_hint < 1:
            raise DomainError("thread_hint must be at least 1")
        if self.kind == "expectation" and self.r_override is None:
            raise DomainError("expectation experiments need r_override")

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {
            "kind", "n", "p", "epsilon", "s", "r_override", "samples",
            "master_seed", "strategy", "thread_hint", "exhaustive", "node_budget",
        }
        unknown = set(data) - known
        if unknown:
            raise DomainError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_file(cls, path: str) -> "ExperimentConfig":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise DomainError(f"config is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise DomainError("config must be a JSON object")
        return cls.from_dict(data)


@dataclass(frozen=True)
class SampleRecord:
    """One measured sample.  values is kind-specific; elapsed (seconds)
    never enters CSV or summaries, so outputs stay byte-reproducible."""

    index: int
    derived_seed: int
    values: dict
    elapsed: float


@dataclass(frozen=True)
class Summary:
    kind: str
    data: dict

    def to_json(self) -> str:
        return json.dumps(self.data, sort_keys=True)


@dataclass(frozen=True)
class RunResult:
    config: ExperimentConfig
    summary: Summary
    records: list[SampleRecord] = field(default_factory=list)

    def csv_text(self) -> str:
        header, row_fn = _CSV_SHAPES[self.config.kind]
        lines = [",".join(header)]
        for rec in self.records:
            lines.append(",".join(row_fn(self.config, rec)))
        return "\n".join(lines) + "\n"


def _ci95(phat: float, n: int) -> tuple[float, float]:
    se = math.sqrt(max(phat * (1 - phat), 0.0) / n)
    return max(0.0, phat - 1.96 * se), min(1.0, phat + 1.96 * se)


def _run_samples(config: ExperimentConfig, worker: Callable[[int, int], dict],
                 threads: int | None) -> list[SampleRecord]:
    """Execute one worker call per sample index, in parallel up to the
    thread count; aggregation is order-independent."""

    def one(index: int) -> SampleRecord:
        seed = derive_seed(config.master_seed, index)
        t0 = time.perf_counter()
        try:
            values = worker(index, seed)
        except ResourceLimitError as exc:
            values = {"error": type(exc).__name__}
        return SampleRecord(index, seed, values, time.perf_counter() - t0)

    nthreads = threads if threads else config.thread_hint
    if nthreads <= 1:
        records = [one(i) for i in range(config.samples)]
    else:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            records = list(pool.map(one, range(config.samples)))
    records.sort(key=lambda r: r.index)
    return records


def _base_summary(config: ExperimentConfig) -> dict:
    return {
        "kind": config.kind,
        "n": config.n,
        "p": _rat_str(config.p),
        "eps": _rat_str(config.epsilon),
        "samples": config.samples,
        "master_seed": config.master_seed,
    }


# ---------------------------------------------------------------------
# window
# ---------------------------------------------------------------------

def run_window(config: ExperimentConfig, threads: int | None = None) -> RunResult:
    """Per sample: draw G(n,p), compute the exact clique number, test
    membership in [floor(z - eps), floor(z + eps)]."""
    if config.kind != "window":
        raise DomainError("config kind must be 'window'")
    lo, hi = analytic.window_bounds(config.n, config.p, config.epsilon)

    def worker(index: int, seed: int) -> dict:
        g = sample_gnp(GnpParams(config.n, config.p, seed))
        omega = clique_number(g, config.node_budget).omega
        return {"omega": omega, "in_window": lo <= omega <= hi}

    records = _run_samples(config, worker, threads)
    ok = [r for r in records if "error" not in r.values]
    hits = sum(1 for r in ok if r.values["in_window"])
    prob = Fraction(hits, len(ok)) if ok else Fraction(0)
    ci = _ci95(float(prob), len(ok)) if ok else (0.0, 0.0)
    data = _base_summary(config)
    data.update({
        "window_lo": lo,
        "window_hi": hi,
        "hits": hits,
        "errors": len(records) - len(ok),
        "probability": _rat_str(prob),
        "probability_float": float(prob),
        "ci95_lo": ci[0],
        "ci95_hi": ci[1],
    })
    return RunResult(config, Summary("window", data), records)


# ---------------------------------------------------------------------
# multiclique
# ---------------------------------------------------------------------

def _target_r(config: ExperimentConfig) -> int:
    if config.r_override is not None:
        if config.r_override < 0:
            raise DomainError("r_override must be non-negative")
        return config.r_override
    return analytic.clique_target_r(config.n, config.p, config.epsilon)


def run_multiclique(config: ExperimentConfig, threads: int | None = None) -> RunResult:
    """Per sample: search for s pairwise disjoint r-cliques at
    r = floor(z - eps) (or r_override).  With the greedy strategy the
    success fraction is only a lower bound on the true probability."""
    if config.kind != "multiclique":
        raise DomainError("config kind must be 'multiclique'")
    r = _target_r(config)

    def worker(index: int, seed: int) -> dict:
        g = sample_gnp(GnpParams(config.n, config.p, seed))
        witness = find_multiclique(g, config.s, r, config.strategy, config.node_budget)
        return {"found": witness is not None}

    records = _run_samples(config, worker, threads)
    ok = [rec for rec in records if "error" not in rec.values]
    hits = sum(1 for rec in ok if rec.values["found"])
    prob = Fraction(hits, len(ok)) if ok else Fraction(0)
    ci = _ci95(float(prob), len(ok)) if ok else (0.0, 0.0)
    data = _base_summary(config)
    data.update({
        "s": config.s,
        "r": r,
        "strategy": config.strategy,
        "successes": hits,
        "errors": len(records) - len(ok),
        "success_fraction": _rat_str(prob),
        "success_fraction_float": float(prob),
        "ci95_lo": ci[0],
        "ci95_hi": ci[1],
        "lower_bound_only": config.strategy == "greedy",
    })
    return RunResult(config, Summary("multiclique", data), records)


# ---------------------------------------------------------------------
# tcs
# ---------------------------------------------------------------------

def _greedy_tcs_interval(g: Graph, s: int) -> tuple[int, int, int, int]:
    """Certified interval for TC_s without enumerating maximal cliques:
    peel s disjoint maximum cliques greedily (truncating to the smallest
    gives s disjoint r_found-cliques), combine with the deterministic
    sandwich.  Returns (lo, hi, omega, r_found)."""
    omega, _ = max_clique(g.n, g.rows)
    avail = g.full_mask()
    sizes = []
    for _ in range(s):
        if not avail:
            sizes.append(0)
            continue
        sub, mapping = induced_subgraph(g, avail)
        om, wit = max_clique(sub.n, sub.rows)
        sizes.append(om)
        m = wit
        while m:
            b = m & -m
            m ^= b
            avail &= ~(1 << mapping[b.bit_length() - 1])
    r_found = min(sizes)
    lo = max(s * r_found, (s - 1) * omega)
    hi = s * omega
    return lo, hi, omega, r_found


def run_tcs(config: ExperimentConfig, threads: int | None = None) -> RunResult:
    """Per sample: TC_s exactly (strategy 'exact', drives the maximal
    clique search) or as a certified interval (strategy 'greedy').
    Membership is tested against both the z-window [s*floor(z - eps),
    s*floor(z + eps)] and the dimension window [s*(C-1), s*C]; an
    interval is 'in' a window only when contained in it."""
    if config.kind != "tcs":
        raise DomainError("config kind must be 'tcs'")
    from .tcs import tcs_exact  # local import to avoid cycle at module load

    r_lo, r_hi = analytic.window_bounds(config.n, config.p, config.epsilon)
    s = config.s

    def worker(index: int, seed: int) -> dict:
        g = sample_gnp(GnpParams(config.n, config.p, seed))
        if config.strategy == "exact":
            rep = tcs_exact(g, s, config.node_budget)
            lo = hi = rep.value
            omega = rep.hdim
        else:
            lo, hi, omega, _ = _greedy_tcs_interval(g, s)
        in_thm = (s * r_lo <= lo) and (hi <= s * r_hi)
        in_cor = (s * (omega - 1) <= lo) and (hi <= s * omega)
        return {
            "tcs_lo": lo,
            "tcs_hi": hi,
            "exact": config.strategy == "exact",
            "omega": omega,
            "in_window_thm14": in_thm,
            "in_window_cor34": in_cor,
        }

    records = _run_samples(config, worker, threads)
    ok = [rec for rec in records if "error" not in rec.values]
    hits_thm = sum(1 for rec in ok if rec.values["in_window_thm14"])
    hits_cor = sum(1 for rec in ok if rec.values["in_window_cor34"])
    n_ok = len(ok)
    p_thm = Fraction(hits_thm, n_ok) if n_ok else Fraction(0)
    p_cor = Fraction(hits_cor, n_ok) if n_ok else Fraction(0)
    data = _base_summary(config)
    data.update({
        "s": s,
        "strategy": config.strategy,
        "window_thm14": [s * r_lo, s * r_hi],
        "errors": len(records) - n_ok,
        "hits_thm14": hits_thm,
        "prob_thm14": _rat_str(p_thm),
        "prob_thm14_float": float(p_thm),
        "hits_cor34": hits_cor,
        "prob_cor34": _rat_str(p_cor),
        "prob_cor34_float": float(p_cor),
    })
    return RunResult(config, Summary("tcs", data), records)


# ---------------------------------------------------------------------
# expectation
# ---------------------------------------------------------------------

def estimate_expectation(config: ExperimentConfig, threads: int | None = None) -> RunResult:
    """Sample mean of the ordered multi-clique count against the
    closed-form expectation.  When the edge space is small
    (C(n,2) <= 20) and exhaustive mode is not disabled, every graph is
    enumerated with its exact probability instead, reproducing the
    formula value exactly."""
    if config.kind != "expectation":
        raise DomainError("config kind must be 'expectation'")
    r = _target_r(config)
    s = config.s
    if s * r > config.n:
        raise DomainError(f"s*r = {s * r} exceeds n = {config.n}")
    formula = analytic.expected_multicliques(config.n, config.p, r, s).as_fraction()
    edge_slots = math.comb(config.n, 2)
    exhaustive = config.exhaustive
    if exhaustive is None:
        exhaustive = edge_slots <= EXHAUSTIVE_EDGE_LIMIT
    if exhaustive and edge_slots > EXHAUSTIVE_EDGE_LIMIT:
        raise DomainError(
            f"exhaustive mode needs C(n,2) <= {EXHAUSTIVE_EDGE_LIMIT}, got {edge_slots}"
        )

    data = _base_summary(config)
    data.update({"r": r, "s": s, "formula": _rat_str(formula),
                 "formula_float": float(formula)})

    if exhaustive:
        mean = _exhaustive_mean(config.n, config.p, r, s)
        data.update({
            "mode": "exhaustive",
            "mean": _rat_str(mean),
            "mean_float": float(mean),
            "matches_formula": mean == formula,
        })
        return RunResult(config, Summary("expectation", data), [])

    def worker(index: int, seed: int) -> dict:
        g = sample_gnp(GnpParams(config.n, config.p, seed))
        return {"count": count_multicliques(g, s, r)}

    records = _run_samples(config, worker, threads)
    ok = [rec for rec in records if "error" not in rec.values]
    counts = [rec.values["count"] for rec in ok]
    mean = Fraction(sum(counts), len(counts)) if counts else Fraction(0)
    mu = float(mean)
    var = sum((c - mu) ** 2 for c in counts) / (len(counts) - 1) if len(counts) > 1 else 0.0
    half = 1.96 * math.sqrt(var / len(counts)) if counts else 0.0
    rel = abs(mu / float(formula) - 1) if formula else math.inf
    data.update({
        "mode": "sampled",
        "errors": len(records) - len(ok),
        "mean": _rat_str(mean),
        "mean_float": mu,
        "ci95_lo": mu - half,
        "ci95_hi": mu + half,
        "relative_error_vs_formula": rel,
    })
    return RunResult(config, Summary("expectation", data), records)


def _exhaustive_mean(n: int, p: Fraction, r: int, s: int) -> Fraction:
    """Exact E of the multi-clique count by enumerating all 2^C(n,2)
    graphs with their exact probabilities."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(pairs)
    a, b = p.numerator, p.denominator
    pow_a = [a**k for k in range(m + 1)]
    pow_c = [(b - a) ** k for k in range(m + 1)]
    total = 0
    for edge_bits in range(1 << m):
        rows = [0] * n
        bits = edge_bits
        k = 0
        while bits:
            if bits & 1:
                i, j = pairs[k]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bits >>= 1
            k += 1
        e = edge_bits.bit_count()
        count = count_multicliques(Graph(n, tuple(rows)), s, r)
        if count:
            total += count * pow_a[e] * pow_c[m - e]
    return Fraction(total, b**m)


# ---------------------------------------------------------------------
# CSV schemas (stable, documented)
# ---------------------------------------------------------------------

def _flag(x) -> str:
    return "1" if x else "0"


def _cell(rec: SampleRecord, key: str):
    if "error" in rec.values:
        return "NA"
    return rec.values[key]


def _window_row(cfg: ExperimentConfig, rec: SampleRecord) -> list[str]:
    lo, hi = analytic.window_bounds(cfg.n, cfg.p, cfg.epsilon)
    omega = _cell(rec, "omega")
    inw = _cell(rec, "in_window")
    return [str(rec.index), str(rec.derived_seed), str(cfg.n), _rat_str(cfg.p),
            _rat_str(cfg.epsilon), str(omega), str(lo), str(hi),
            inw if inw == "NA" else _flag(inw)]


def _multiclique_row(cfg: ExperimentConfig, rec: SampleRecord) -> list[str]:
    r = _target_r(cfg)
    found = _cell(rec, "found")
    return [str(rec.index), str(rec.derived_seed), str(cfg.n), _rat_str(cfg.p),
            _rat_str(cfg.epsilon), str(cfg.s), str(r), cfg.strategy,
            found if found == "NA" else _flag(found)]


def _tcs_row(cfg: ExperimentConfig, rec: SampleRecord) -> list[str]:
    vals = [str(rec.index), str(rec.derived_seed), str(cfg.n), _rat_str(cfg.p),
            _rat_str(cfg.epsilon), str(cfg.s)]
    for key in ("tcs_lo", "tcs_hi"):
        vals.append(str(_cell(rec, key)))
    for key in ("exact", "in_window_thm14", "in_window_cor34"):
        c = _cell(rec, key)
        vals.append(c if c == "NA" else _flag(c))
    return vals


def _expect_row(cfg: ExperimentConfig, rec: SampleRecord) -> list[str]:
    return [str(rec.index), str(rec.derived_seed), str(cfg.n), _rat_str(cfg.p),
            str(_target_r(cfg)), str(cfg.s), str(_cell(rec, "count"))]


_CSV_SHAPES = {
    "window": (
        ["index", "seed", "n", "p", "eps", "omega", "r_lo", "r_hi", "in_window"],
        _window_row,
    ),
    "multiclique": (
        ["index", "seed", "n", "p", "eps", "s", "r", "strategy", "found"],
        _multiclique_row,
    ),
    "tcs": (
        ["index", "seed", "n", "p", "eps", "s", "tcs_lo", "tcs_hi", "exact",
         "in_window_thm14", "in_window_cor34"],
        _tcs_row,
    ),
    "expectation": (
        ["index", "seed", "n", "p", "r", "s", "count"],
        _expect_row,
    ),
}

RUNNERS = {
    "window": run_window,
    "multiclique": run_multiclique,
    "tcs": run_tcs,
    "expectation": estimate_expectation,
}


def run_experiment(config: ExperimentConfig, threads: int | None = None) -> RunResult:
    return RUNNERS[config.kind](config, threads)
