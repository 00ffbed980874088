"""Ratio studies against the exact oracle, and runtime benchmarks."""

from __future__ import annotations

import csv
import io
import logging
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path as FsPath
from typing import Iterable, Iterator, Sequence

import numpy as np

from .graph import Graph, gen_random, graph_from_edges, read_graph
from .localsearch import LocalMove, check_move, next_move, solve
from .oracle import DEFAULT_CAP, OracleCapError, min_singletons_exact, optimal_partition
from .partition import PathPartition, read_partition, stats, validate
from .seed import SeedConfig

log = logging.getLogger(__name__)

FORMAT_VERSION = 1


@dataclass
class Instance:
    name: str
    graph: Graph
    seed: PathPartition | None = None


@dataclass
class CompareRecord:
    instance: str
    n: int
    m: int
    alg_total: int
    alg_c1: int
    alg_c2: int
    alg_c3: int
    opt_total: int
    opt_c1: int
    ratio: Fraction
    seed_exact: bool
    op_counts: dict[str, int]
    alg_time: float
    opt_time: float
    min_c1: int | None = None
    move_violations: list[str] = field(default_factory=list)
    fixed_point: bool = True

    @property
    def violation(self) -> bool:
        """3|Q| > 4|Q*| under an exact seed, where the guarantee is claimed."""
        return self.seed_exact and 3 * self.alg_total > 4 * self.opt_total

    @property
    def tight(self) -> bool:
        return 3 * self.alg_total == 4 * self.opt_total

    def row(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "instance": self.instance,
            "n": self.n,
            "m": self.m,
            "alg_total": self.alg_total,
            "alg_c1": self.alg_c1,
            "alg_c2": self.alg_c2,
            "alg_c3": self.alg_c3,
            "opt_total": self.opt_total,
            "opt_c1": self.opt_c1,
            "min_c1": "" if self.min_c1 is None else self.min_c1,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "seed_exact": int(self.seed_exact),
            "violation": int(self.violation),
            "fixed_point": int(self.fixed_point),
            "move_violations": len(self.move_violations),
            "op_counts": ";".join(f"{k}={v}" for k, v in self.op_counts.items() if v),
            "alg_time": f"{self.alg_time:.6f}",
            "opt_time": f"{self.opt_time:.6f}",
        }


CSV_FIELDS = list(CompareRecord("", 0, 0, 0, 0, 0, 0, 1, 0, Fraction(1), True,
                                {}, 0.0, 0.0).row())


def compare_instance(inst: Instance, cfg: SeedConfig = SeedConfig(mode="exact"),
                     cap: int = DEFAULT_CAP, check_c1: bool = True) -> CompareRecord:
    """Solve ``inst`` and measure it against the oracle optimum.

    Every applied move is checked against the move invariants, and the
    final partition is re-scanned to confirm no operation applies.
    """
    g = inst.graph
    big = max((len(c) for c in g.components()), default=0)
    if big > cap:
        raise OracleCapError(f"{inst.name}: component of {big} vertices exceeds oracle cap {cap}")
    bad: list[str] = []

    def audit(q: PathPartition, mv: LocalMove) -> None:
        bad.extend(f"{mv.kind.value}: {b}" for b in check_move(g, mv))
        rep = validate(g, q)
        if not rep.ok:
            bad.append(f"{mv.kind.value}: invalid after move: {rep}")

    t0 = time.perf_counter()
    q, report = solve(g, SeedConfig(cfg.mode, cfg.exact_threshold, cap, cfg.tiebreak),
                      initial=inst.seed, on_move=audit)
    t1 = time.perf_counter()
    opt = optimal_partition(g, cap=cap)
    t2 = time.perf_counter()
    min_c1 = min_singletons_exact(g, cap=cap).c1 if check_c1 else None
    if report.initial_stats.c1 != report.final_stats.c1:
        bad.append("1-path count changed during local search")
    st = stats(q)
    return CompareRecord(
        instance=inst.name,
        n=g.n,
        m=g.m,
        alg_total=st.total,
        alg_c1=st.c1,
        alg_c2=st.c2,
        alg_c3=st.c3,
        opt_total=opt.total,
        opt_c1=opt.c1,
        ratio=Fraction(st.total, opt.total) if opt.total else Fraction(1),
        seed_exact=report.seed_exact,
        op_counts=report.op_counts,
        alg_time=t1 - t0,
        opt_time=t2 - t1,
        min_c1=min_c1,
        move_violations=bad,
        fixed_point=next_move(g, q) is None,
    )


def _compare_job(args):
    inst, cfg, cap, check_c1 = args
    try:
        return compare_instance(inst, cfg, cap, check_c1)
    except OracleCapError as exc:
        return exc


def compare_corpus(instances: Iterable[Instance], cfg: SeedConfig = SeedConfig(mode="exact"),
                   cap: int = DEFAULT_CAP, strict: bool = False, jobs: int = 1,
                   check_c1: bool = True) -> list[CompareRecord]:
    """Records in corpus order.  Over-cap instances are skipped with a
    warning, or re-raised when ``strict``."""
    jobs_in = [(inst, cfg, cap, check_c1) for inst in instances]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_compare_job, jobs_in, chunksize=8))
    else:
        results = [_compare_job(j) for j in jobs_in]
    out = []
    for (inst, *_), res in zip(jobs_in, results):
        if isinstance(res, OracleCapError):
            if strict:
                raise res
            log.warning("skipping %s: %s", inst.name, res)
            continue
        out.append(res)
    return out


@dataclass
class CompareSummary:
    count: int
    max_ratio: Fraction
    mean_ratio: Fraction
    tight_hits: int
    violations: int
    move_violations: int
    not_fixed: int
    inexact: int

    def line(self) -> str:
        return (
            f"instances={self.count} max_ratio={self.max_ratio} "
            f"mean_ratio={float(self.mean_ratio):.6f} ratio_4/3_hits={self.tight_hits} "
            f"violations={self.violations} move_violations={self.move_violations} "
            f"not_fixed_point={self.not_fixed} inexact_seeds={self.inexact}"
        )


def summarize(records: Sequence[CompareRecord]) -> CompareSummary:
    ratios = [r.ratio for r in records] or [Fraction(1)]
    return CompareSummary(
        count=len(records),
        max_ratio=max(ratios),
        mean_ratio=sum(ratios, Fraction(0)) / len(ratios),
        tight_hits=sum(r.ratio == Fraction(4, 3) for r in records),
        violations=sum(r.violation for r in records),
        move_violations=sum(len(r.move_violations) for r in records),
        not_fixed=sum(not r.fixed_point for r in records),
        inexact=sum(not r.seed_exact for r in records),
    )


def records_csv(records: Sequence[CompareRecord]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


# ---------------------------------------------------------------- corpora


def atlas_connected(max_n: int, min_n: int = 1) -> Iterator[Instance]:
    """Every connected graph on ``min_n..max_n`` vertices up to isomorphism
    (networkx's graph atlas, so ``max_n <= 7``)."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    for i, G in enumerate(graph_atlas_g()):
        k = G.number_of_nodes()
        if min_n <= k <= max_n and nx.is_connected(G):
            yield Instance(f"atlas{i}", graph_from_edges(k, G.edges()))


def random_corpus(count: int, n_min: int = 8, n_max: int = 16,
                  ps: Sequence[float] = (0.15, 0.3, 0.5), seed: int = 0) -> Iterator[Instance]:
    """Instance ``i`` is G(n_i, p_i) with seed ``seed + i``; n cycles fastest."""
    span = n_max - n_min + 1
    for i in range(count):
        n = n_min + i % span
        p = ps[(i // span) % len(ps)]
        yield Instance(f"gnp_n{n}_p{p}_s{seed + i}", gen_random(n, p, seed + i))


def directory_corpus(path) -> Iterator[Instance]:
    """``*.gr`` files in name order; ``<stem>_seed.json`` next to a file is
    used as its injected initial partition."""
    root = FsPath(path)
    for f in sorted(root.glob("*.gr")):
        seedf = f.with_name(f.stem + "_seed.json")
        seed = read_partition(seedf) if seedf.exists() else None
        yield Instance(f.stem, read_graph(f), seed)


# ------------------------------------------------------------------ bench


@dataclass
class BenchRow:
    n: int
    m: int
    reps: int
    median_time: float
    iterations: int
    scans: int
    deterministic: bool
    seed_exact: bool

    def row(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "n": self.n,
            "m": self.m,
            "reps": self.reps,
            "median_wall_time": f"{self.median_time:.6f}",
            "iterations": self.iterations,
            "scans": self.scans,
            "deterministic": int(self.deterministic),
            "seed_exact": int(self.seed_exact),
        }


def bench(ns: Sequence[int], p: float, seed: int, reps: int = 3,
          cfg: SeedConfig = SeedConfig(mode="heuristic")) -> list[BenchRow]:
    rows = []
    for n in ns:
        g = gen_random(n, p, seed)
        times, iters, scans, traces = [], set(), set(), set()
        exact = False
        for _ in range(reps):
            q, rep = solve(g, cfg, trace=True)
            times.append(rep.wall_time)
            iters.add(rep.iterations)
            scans.add(rep.scans)
            traces.add(tuple((mv.kind, mv.removed_paths, mv.added) for mv in rep.trace))
            exact = rep.seed_exact
        rows.append(BenchRow(n, g.m, reps, statistics.median(times), min(iters),
                             min(scans), len(iters) == len(scans) == len(traces) == 1, exact))
    return rows


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.asarray(ys, dtype=float))
    return float(np.polyfit(lx, ly, 1)[0])


def bench_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    fields = list(rows[0].row()) if rows else ["n"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.row())
    return buf.getvalue()
