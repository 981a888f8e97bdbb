"""Command-line surface.

Subcommands: gen, clique, multiclique, tcs, analytic, mc, verify.
Results go to stdout (or the requested output file); logs go to stderr.
Exit codes: 0 success, 1 domain/usage error, 2 budget or cap exceeded.

Rationals on the command line are written a/b (integers allowed); bare
floating-point input for p is rejected so that exactness survives end
to end.  Epsilon additionally accepts decimal strings, read exactly.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import analytic, kernels, montecarlo
from .cliques import clique_f_vector, clique_number, enumerate_maximal_cliques, has_clique
from .errors import DomainError, ResourceLimitError
from .graphs import GnpParams, read_dimacs, sample_gnp, write_dimacs
from .multicliques import count_multicliques, find_multiclique
from .scalars import EXACT, LOG
from .tcs import tcs_bounds, tcs_bruteforce, tcs_exact
from .verify import run_all


class _UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_p(text: str) -> Fraction:
    if "." in text or "e" in text.lower():
        raise DomainError(
            f"p must be an exact rational like 1/2, not {text!r} (exact mode)"
        )
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse rational {text!r}") from exc


def _parse_eps(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse epsilon {text!r}") from exc


def _vertices_line(label: str, vertices) -> str:
    inside = " ".join(str(v + 1) for v in sorted(vertices))
    return f"{label} {inside}".rstrip()


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_graph(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return read_dimacs(fh.read())
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc


def build_parser() -> _Parser:
    top = _Parser(prog="cliquelab", description=__doc__,
                  formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="sample a G(n,p) graph to DIMACS")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=_parse_p, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--out", default=None)

    p_cl = sub.add_parser("clique", help="exact clique number / k-clique test / f-vector")
    p_cl.add_argument("--in", dest="infile", required=True)
    p_cl.add_argument("--k", type=int, default=None)
    p_cl.add_argument("--f-vector", action="store_true")
    p_cl.add_argument("--budget", type=int, default=None, help="search node budget")

    p_mc = sub.add_parser("multiclique", help="disjoint multi-clique search / count")
    p_mc.add_argument("--in", dest="infile", required=True)
    p_mc.add_argument("--s", type=int, required=True)
    p_mc.add_argument("--r", type=int, required=True)
    p_mc.add_argument("--strategy", choices=["exact", "greedy"], default="exact")
    p_mc.add_argument("--count", action="store_true", help="count ordered tuples instead")
    p_mc.add_argument("--budget", type=int, default=None)

    p_tc = sub.add_parser("tcs", help="sequential topological complexity of the flag complex")
    p_tc.add_argument("--in", dest="infile", required=True)
    p_tc.add_argument("--s", type=int, required=True)
    p_tc.add_argument("--brute", action="store_true", help="exhaustive oracle (n <= 8)")

    p_an = sub.add_parser("analytic", help="closed-form quantities")
    p_an.add_argument("quantity", choices=[
        "z", "r", "expect", "ratio", "sumF", "dsize", "lambda",
        "stirling", "mainine", "t0", "dominance",
    ])
    p_an.add_argument("--n", type=int, default=None)
    p_an.add_argument("--p", type=_parse_p, default=None)
    p_an.add_argument("--eps", type=_parse_eps, default=None)
    p_an.add_argument("--s", type=int, default=2)
    p_an.add_argument("--r", type=int, default=None)
    p_an.add_argument("--m", type=int, default=1)
    p_an.add_argument("--k", type=int, default=0)
    p_an.add_argument("--mode", choices=[EXACT, LOG], default=EXACT)
    p_an.add_argument("--lambda", dest="lam", type=float, default=None)
    p_an.add_argument("--cap", type=int, default=analytic.DEFAULT_D_CAP)

    p_run = sub.add_parser("mc", help="Monte Carlo experiments")
    p_run.add_argument("experiment", choices=["window", "multiclique", "tcs", "expect"])
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--csv", default=None)
    p_run.add_argument("--threads", type=int, default=None)
    p_run.add_argument("--out", default=None, help="summary JSON file (default stdout)")

    sub.add_parser("verify", help="run the self-check suite")
    return top


def _require(args, names):
    for name in names:
        if getattr(args, name) is None:
            raise DomainError(f"--{name.replace('_', '-')} is required for this quantity")


def _cmd_gen(args) -> int:
    g = sample_gnp(GnpParams(args.n, args.p, args.seed))
    _emit(write_dimacs(g), args.out)
    return 0


def _cmd_clique(args) -> int:
    g = _read_graph(args.infile)
    if args.k is not None:
        answer = has_clique(g, args.k, args.budget)
        print(f"has_clique {str(answer).lower()}")
        return 0
    if args.f_vector:
        fv = clique_f_vector(g)
        print("f_vector " + " ".join(str(c) for c in fv))
        return 0
    rep = clique_number(g, args.budget)
    print(f"omega {rep.omega}")
    print(_vertices_line("witness", rep.witness))
    return 0


def _cmd_multiclique(args) -> int:
    g = _read_graph(args.infile)
    if args.count:
        print(f"count {count_multicliques(g, args.s, args.r)}")
        return 0
    witness = find_multiclique(g, args.s, args.r, args.strategy, args.budget)
    if witness is None:
        if args.strategy == "exact":
            print("none (exact search: no witness exists)")
        else:
            print("none (greedy search: existence not decided)")
        return 0
    print("found")
    for i, part in enumerate(witness.parts, start=1):
        print(_vertices_line(f"part{i}", part))
    return 0


def _cmd_tcs(args) -> int:
    g = _read_graph(args.infile)
    if args.brute:
        print(f"tcs_bruteforce {tcs_bruteforce(g, args.s)}")
        return 0
    rep = tcs_exact(g, args.s)
    bounds = tcs_bounds(g, args.s)
    print(f"tcs {rep.value}")
    print(f"hdim {rep.hdim}")
    print(f"bounds {bounds.lower} {bounds.upper}")
    for i, part in enumerate(rep.witness, start=1):
        print(_vertices_line(f"part{i}", part))
    return 0


def _cmd_analytic(args) -> int:
    q = args.quantity
    if q == "z":
        _require(args, ["n", "p"])
        print(repr(analytic.z_value(args.n, args.p)))
    elif q == "r":
        _require(args, ["n", "p", "eps"])
        print(analytic.clique_target_r(args.n, args.p, args.eps))
    elif q == "expect":
        _require(args, ["n", "p", "r"])
        print(analytic.expected_multicliques(args.n, args.p, args.r, args.s, args.mode))
    elif q == "ratio":
        _require(args, ["n", "p", "r"])
        print(analytic.second_moment_ratio(args.n, args.p, args.r, args.s, args.mode, args.cap))
    elif q == "sumF":
        _require(args, ["n", "r"])
        print(analytic.sum_F_over_D(args.n, args.r, args.s, args.mode, args.cap))
    elif q == "dsize":
        _require(args, ["r"])
        print(analytic.d_size(args.s, args.r, args.cap))
    elif q == "lambda":
        _require(args, ["p"])
        print(repr(analytic.lambda_max(args.s, args.p)))
    elif q == "stirling":
        _require(args, ["n", "r"])
        print(repr(analytic.stirling_c(args.n, args.m, args.r)))
    elif q == "mainine":
        _require(args, ["n", "p", "r"])
        print(analytic.growth_term(args.n, args.p, args.r, args.k, args.m, args.mode))
    elif q == "t0":
        _require(args, ["n", "p", "r"])
        rep = analytic.t_zero_check(args.n, args.p, args.r, args.s)
        print(f"t0 {rep.t0.to_float()!r} bound {rep.bound!r} holds {str(rep.holds).lower()}")
    elif q == "dominance":
        _require(args, ["n", "p", "r"])
        rep = analytic.dominance_check(args.n, args.p, args.r, args.s, args.lam,
                                       args.mode, args.cap)
        print(f"dominance {str(rep.holds).lower()}")
        if not rep.holds:
            print(f"violating_matrix {rep.worst.entries}")
    return 0


def _cmd_mc(args) -> int:
    kind = {"expect": "expectation"}.get(args.experiment, args.experiment)
    config = montecarlo.ExperimentConfig.from_file(args.config)
    if config.kind != kind:
        raise DomainError(
            f"config kind {config.kind!r} does not match subcommand {args.experiment!r}"
        )
    result = montecarlo.run_experiment(config, args.threads)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(result.csv_text())
    _emit(result.summary.to_json() + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    results = run_all()
    width = max(len(name) for name, _ in results)
    failures = 0
    for name, ok in results:
        status = "PASS" if ok else "FAIL"
        print(f"{name:<{width}}  {status}")
        if not ok:
            failures += 1
    print(f"{failures} failed / {len(results)} checks")
    return 0 if failures == 0 else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "clique": _cmd_clique,
    "multiclique": _cmd_multiclique,
    "tcs": _cmd_tcs,
    "analytic": _cmd_analytic,
    "mc": _cmd_mc,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
