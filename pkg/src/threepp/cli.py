"""``threepp`` command line: solve, oracle, compare, bench, gen.

Exit codes: 0 success, 1 bad parameters, 2 instance/partition parse error,
3 seed error, 4 oracle cap exceeded, 5 ratio violation found by compare.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import harness
from .graph import (
    GraphError,
    format_graph,
    gen_random,
    named_graph,
    read_graph,
    write_graph,
)
from .localsearch import solve
from .oracle import DEFAULT_CAP, OracleCapError, min_singletons_exact, optimal_partition
from .partition import read_partition, to_json, validate, write_partition
from .seed import SeedConfig, SeedError

EXIT_OK, EXIT_PARAMS, EXIT_PARSE, EXIT_SEED, EXIT_CAP, EXIT_VIOLATION = range(6)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed-mode", choices=("exact", "heuristic", "auto"), default="auto")
    p.add_argument("--seed-tiebreak", choices=("fewest", "most"), default="fewest",
                   help="among least-1-path exact seeds, fewest or most paths")
    p.add_argument("--exact-threshold", type=int, default=20)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="oracle subset cap")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--out", metavar="FILE")
    return p


def _cfg(args) -> SeedConfig:
    try:
        return SeedConfig(args.seed_mode, args.exact_threshold, args.cap, args.seed_tiebreak)
    except SeedError as exc:
        raise CliError(str(exc), EXIT_PARAMS) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str):
    try:
        return read_graph(path)
    except (GraphError, OSError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _checked(g, q, what: str):
    rep = validate(g, q)
    if not rep.ok:
        raise RuntimeError(f"{what} failed validation: {rep}")
    return q


def cmd_solve(args) -> int:
    g = _load_graph(args.input)
    initial = None
    if args.seed_partition:
        try:
            initial = read_partition(args.seed_partition)
        except (OSError, ValueError) as exc:
            raise CliError(f"{args.seed_partition}: {exc}", EXIT_PARSE) from None
    try:
        q, report = solve(g, _cfg(args), trace=args.trace, initial=initial)
    except SeedError as exc:
        raise CliError(str(exc), EXIT_SEED) from None
    _checked(g, q, "solver output")
    doc = to_json(q, report=report.as_dict())
    _emit(json.dumps(doc, indent=1) + "\n", args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.input)
    fn = optimal_partition if args.mode == "optimal" else min_singletons_exact
    try:
        res = fn(g, cap=args.cap)
    except OracleCapError as exc:
        raise CliError(str(exc), EXIT_CAP) from None
    _checked(g, res.best, "oracle output")
    obj = list(res.objective) if isinstance(res.objective, tuple) else res.objective
    doc = to_json(res.best, mode=res.mode, objective=obj, explored=res.explored, c1=res.c1)
    _emit(json.dumps(doc, indent=1) + "\n", args.out)
    return EXIT_OK


def _corpus(args):
    if args.dir:
        yield from harness.directory_corpus(args.dir)
    if args.atlas:
        yield from harness.atlas_connected(args.atlas)
    if args.random:
        ps = [float(x) for x in args.p.split(",")]
        yield from harness.random_corpus(args.random, args.n_min, args.n_max, ps, args.seed)
    if args.tight:
        from .tight import tight_instance

        inst = tight_instance()
        yield harness.Instance("tight", inst.graph, inst.seed)


def cmd_compare(args) -> int:
    if not (args.dir or args.atlas or args.random or args.tight):
        raise CliError("compare needs --dir, --atlas, --random or --tight", EXIT_PARAMS)
    cfg = _cfg(args)
    if cfg.mode == "auto":
        cfg = SeedConfig("exact", cfg.exact_threshold, cfg.cap, cfg.tiebreak)
    try:
        records = harness.compare_corpus(_corpus(args), cfg, cap=args.cap,
                                         strict=args.strict, jobs=args.jobs)
    except OracleCapError as exc:
        raise CliError(str(exc), EXIT_CAP) from None
    except SeedError as exc:
        raise CliError(str(exc), EXIT_SEED) from None
    except (GraphError, ValueError) as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    _emit(harness.records_csv(records), args.out)
    summary = harness.summarize(records)
    print(summary.line(), file=sys.stderr)
    bad = summary.violations or summary.move_violations or summary.not_fixed
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_bench(args) -> int:
    ns = [int(x) for x in args.n.split(",")]
    cfg = _cfg(args)
    if cfg.mode == "auto":
        cfg = SeedConfig("heuristic", cfg.exact_threshold, cfg.cap, cfg.tiebreak)
    rows = harness.bench(ns, args.p, args.seed, args.reps, cfg)
    _emit(harness.bench_csv(rows), args.out)
    if len(rows) >= 2:
        slope = harness.loglog_slope([r.n for r in rows], [r.scans for r in rows])
        print(f"scan_loglog_slope={slope:.4f} bound=6 "
              f"deterministic={int(all(r.deterministic for r in rows))}", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "tight":
        from .tight import tight_instance

        inst = tight_instance()
        outdir = Path(args.out_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        write_graph(inst.graph, outdir / "tight.gr",
                    comment="tight instance: adversarial seed 12 paths, optimum 9")
        write_partition(inst.seed, outdir / "tight_seed.json")
        print(f"wrote {outdir / 'tight.gr'} and {outdir / 'tight_seed.json'}", file=sys.stderr)
        return EXIT_OK
    try:
        if args.kind == "random":
            if args.n is None or args.p is None:
                raise CliError("gen random needs -n and -p", EXIT_PARAMS)
            g = gen_random(args.n, args.p, args.seed)
            comment = f"G(n={args.n}, p={args.p}) seed={args.seed} PCG64"
        else:
            if not args.name:
                raise CliError("gen named needs a graph name", EXIT_PARAMS)
            g = named_graph(args.name)
            comment = args.name
    except GraphError as exc:
        raise CliError(str(exc), EXIT_PARAMS) from None
    _emit(format_graph(g, comment), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="threepp", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="run local search on an instance")
    p.add_argument("input")
    p.add_argument("--seed-partition", metavar="FILE",
                   help="partition JSON to start from instead of the seed step")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", parents=[common], help="exact optimum for small instances")
    p.add_argument("input")
    p.add_argument("--mode", choices=("optimal", "min-singletons"), default="optimal")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", parents=[common], help="ratio study against the oracle")
    p.add_argument("--dir", help="directory of .gr files (with optional <stem>_seed.json)")
    p.add_argument("--atlas", type=int, metavar="N", help="all connected graphs with <= N vertices")
    p.add_argument("--random", type=int, metavar="COUNT", help="number of random G(n,p) graphs")
    p.add_argument("--n-min", type=int, default=8)
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("-p", default="0.15,0.3,0.5", help="comma-separated edge probabilities")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tight", action="store_true", help="include the tight instance")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", parents=[common], help="runtime table on random graphs")
    p.add_argument("--n", default="50,100,200,400", help="comma-separated sizes")
    p.add_argument("-p", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--reps", type=int, default=3)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", parents=[common], help="write instance files")
    p.add_argument("kind", choices=("random", "tight", "named"))
    p.add_argument("name", nargs="?", help="for 'named': k3, p4, c6, star5, empty7, ...")
    p.add_argument("-n", type=int)
    p.add_argument("-p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", default=".", help="for 'tight'")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"threepp: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
