"""Command-line front end.

Subcommands: solve, decide, reduce (misc | compose), gen (string | cubic),
scaffold, bench. Exit codes: 0 success / threshold met, 1 threshold unmet,
2 usage or parse error, 3 internal limit exceeded. The LRS_SEED environment
variable, when set, overrides every --seed flag.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import bench as bench_mod
from .core import (
    Instance,
    LimitExceeded,
    LrsError,
    format_solution,
    instance_to_text,
    parse_instance,
    validate_solution,
)
from .generators import GenSpec, gen_string
from .mld import mld_decide, mld_solve_for_runs
from .reductions import (
    cross_compose,
    gen_random_cubic,
    graph_to_text,
    misc_encode,
    parse_graph,
    roles_to_text,
)
from .solvers import NoSolutionFound, approx_solve, solve_bruteforce, solve_subset_dp

EXIT_OK = 0
EXIT_THRESHOLD = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


def _load_instance(path: str) -> Instance:
    return parse_instance(Path(path).read_text())


def _seed(args) -> int:
    env = os.environ.get("LRS_SEED")
    return int(env) if env else args.seed


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_solve(args) -> int:
    inst = _load_instance(args.input)
    if args.algo == "brute":
        sol = solve_bruteforce(inst)
    elif args.algo == "dp":
        sol, _ = solve_subset_dp(inst)
    else:
        sol = approx_solve(inst)
    validate_solution(inst, sol.indices)
    sys.stdout.write(format_solution(inst, sol))
    if args.k is not None and sol.length < args.k:
        return EXIT_THRESHOLD
    return EXIT_OK


def _cmd_decide(args) -> int:
    inst = _load_instance(args.input)
    seed = _seed(args)
    if args.k is not None:
        report = mld_decide(inst, args.r, args.k, trials=args.trials, seed=seed)
        yes = report.verdicts[args.k]
        print(f"verdict {'yes' if yes else 'no'}")
        print(f"seed {seed}")
        print(f"trials {args.trials}")
        return EXIT_OK if yes else EXIT_THRESHOLD
    try:
        max_k, report = mld_solve_for_runs(inst, args.r, trials=args.trials, seed=seed)
    except NoSolutionFound:
        print("verdict no")
        print(f"seed {seed}")
        print(f"trials {args.trials}")
        return EXIT_THRESHOLD
    print(f"max_k {max_k}")
    print(f"seed {seed}")
    print(f"trials {args.trials}")
    return EXIT_OK


def _cmd_reduce_misc(args) -> int:
    graph = parse_graph(Path(args.graph).read_text())
    rm = misc_encode(graph)
    base = args.out if args.out else str(Path(args.graph).with_suffix(""))
    header = [f"independent-set encoding of {Path(args.graph).name}"]
    Path(base + ".lrs").write_text(instance_to_text(rm.instance, header))
    Path(base + ".roles").write_text(roles_to_text(rm))
    print(f"S_len {rm.instance.n}")
    print(f"sigma {rm.instance.alphabet_size}")
    for q in range(graph.n + 1):
        print(f"threshold {q} {rm.threshold(q)}")
    print(f"wrote {base}.lrs {base}.roles")
    return EXIT_OK


def _cmd_reduce_compose(args) -> int:
    instances = [_load_instance(p) for p in args.inputs]
    comp = cross_compose(instances, args.k)
    base = args.out
    Path(base + ".lrs").write_text(
        instance_to_text(comp.instance, [f"composition of {len(args.inputs)} instances"])
    )
    spans = "".join(f"{s} {t}\n" for s, t in comp.spans)
    Path(base + ".spans").write_text(spans)
    print(f"S_len {comp.instance.n}")
    print(f"sigma {comp.instance.alphabet_size}")
    print(f"k_prime {comp.k_prime}")
    print(f"wrote {base}.lrs {base}.spans")
    return EXIT_OK


def _cmd_gen_string(args) -> int:
    spec = GenSpec(
        n=args.n, sigma=args.sigma, occ_cap=args.occ_cap,
        distribution=args.dist, seed=_seed(args),
    )
    inst = gen_string(spec)
    header = [
        f"generated string n={args.n} sigma={args.sigma} "
        f"occ_cap={args.occ_cap} dist={args.dist} seed={_seed(args)}"
    ]
    _emit(instance_to_text(inst, header), args.out)
    return EXIT_OK


def _cmd_gen_cubic(args) -> int:
    graph = gen_random_cubic(args.n, _seed(args))
    _emit(graph_to_text(graph), args.out)
    return EXIT_OK


def _cmd_scaffold(args) -> int:
    inst = _load_instance(args.input)
    sol, _ = solve_subset_dp(inst)
    validate_solution(inst, sol.indices)
    print(f"length {sol.length}")
    n = inst.n
    runs = sol.runs
    for t, (sym, z, idx) in enumerate(runs):
        lo = 1 if t == 0 else idx[0]
        hi = n if t == len(runs) - 1 else runs[t + 1][2][0] - 1
        picked = " ".join(str(i) for i in idx)
        print(f"run {inst.token(sym)} len {z} bins {lo}-{hi} selected {picked}")
    dropped = sorted(set(range(1, n + 1)) - set(sol.indices))
    print("dropped_bins " + " ".join(str(b) for b in dropped))
    return EXIT_OK


def _cmd_bench(args) -> int:
    seed = _seed(args)
    records = bench_mod.run_suite(args.suite, seed=seed, reps=args.reps, parallel=args.parallel)
    csv_text = bench_mod.records_to_csv(records, args.suite, seed)
    Path(args.out).write_text(csv_text)
    print(f"wrote {args.out} rows {len(records)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lrs",
        description="Longest run subsequence solvers, reductions, and benchmarks.",
        epilog=(
            "Exit codes: 0 ok / threshold met, 1 threshold unmet, 2 usage or "
            "parse error, 3 internal limit exceeded. LRS_SEED overrides --seed. "
            f"Bench CSV columns: {','.join(bench_mod.CSV_COLUMNS)} "
            "(lines starting with '#' are metadata)."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="exact or approximate optimization")
    sp.add_argument("--algo", choices=["brute", "dp", "approx"], required=True)
    sp.add_argument("--input", required=True)
    sp.add_argument("--k", type=int, default=None, help="exit 1 if optimum below k")
    sp.set_defaults(func=_cmd_solve)

    dp = sub.add_parser("decide", help="randomized detection at exactly r runs")
    dp.add_argument("--input", required=True)
    dp.add_argument("--r", type=int, required=True)
    dp.add_argument("--k", type=int, default=None, help="omit to search the largest k")
    dp.add_argument("--trials", type=int, default=20)
    dp.add_argument("--seed", type=int, default=0)
    dp.set_defaults(func=_cmd_decide)

    rp = sub.add_parser("reduce", help="hardness-construction generators")
    rsub = rp.add_subparsers(dest="reduction", required=True)
    rm = rsub.add_parser("misc", help="encode a cubic graph")
    rm.add_argument("--graph", required=True)
    rm.add_argument("--out", default=None, help="output base name (default: graph stem)")
    rm.set_defaults(func=_cmd_reduce_misc)
    rc = rsub.add_parser("compose", help="OR-compose equal-shape instances")
    rc.add_argument("--inputs", nargs="+", required=True)
    rc.add_argument("--k", type=int, required=True)
    rc.add_argument("--out", default="composed")
    rc.set_defaults(func=_cmd_reduce_compose)

    gp = sub.add_parser("gen", help="seeded instance generators")
    gsub = gp.add_subparsers(dest="generator", required=True)
    gs = gsub.add_parser("string", help="random string instance")
    gs.add_argument("--n", type=int, required=True)
    gs.add_argument("--sigma", type=int, required=True)
    gs.add_argument("--occ-cap", type=int, default=None, dest="occ_cap")
    gs.add_argument("--dist", choices=["shuffled-multiset", "uniform"],
                    default="shuffled-multiset")
    gs.add_argument("--seed", type=int, default=0)
    gs.add_argument("--out", default=None)
    gs.set_defaults(func=_cmd_gen_string)
    gc = gsub.add_parser("cubic", help="random 3-regular graph")
    gc.add_argument("--n", type=int, required=True)
    gc.add_argument("--seed", type=int, default=0)
    gc.add_argument("--out", default=None)
    gc.set_defaults(func=_cmd_gen_cubic)

    fp = sub.add_parser("scaffold", help="per-run bin partition report")
    fp.add_argument("--input", required=True)
    fp.set_defaults(func=_cmd_scaffold)

    bp = sub.add_parser("bench", help="benchmark suites writing CSV")
    bp.add_argument("--suite", choices=list(bench_mod.SUITES), required=True)
    bp.add_argument("--out", required=True)
    bp.add_argument("--seed", type=int, default=0)
    bp.add_argument("--reps", type=int, default=5)
    bp.add_argument("--parallel", action="store_true")
    bp.set_defaults(func=_cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (LrsError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
