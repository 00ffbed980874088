"""Prioritised local search for 3-path partition.

Each operation removes an expected collection of 2- and 3-paths and puts
back one path fewer on the same vertices, never touching 1-paths:

====================  =========================================  ========
kind                  expected collection -> replacement         priority
====================  =========================================  ========
``OP30_02``           three 2-paths -> two 3-paths               1
``OP31_03_P21``       three 2-paths + one 3-path -> three        2.1
                      3-paths (each 3-path vertex takes a
                      2-path)
``OP31_03_P22``       two adjacent 2-paths leave a singleton;    2.2
                      it and a third 2-path attach to the
                      3-path
``OP41_13``           two adjacent pairs of 2-paths leave two    3
                      singletons sharing an endpoint of a 3-path
``OP42_14_C1..C3``    as above with two 3-paths joined by a      4
                      cross edge (endpoint/endpoint,
                      endpoint/midpoint, midpoint/midpoint)
====================  =========================================  ========

A 3-path ``u-w-v`` with ``(u, v)`` in E may be used in any rotation.
Matchers only look for their own configuration; the driver runs them in
priority order and restarts after every move.

Two adjacent 2-paths ``A = a'-a`` and ``B`` can always be turned into a
3-path plus the singleton ``a'`` when ``a`` has a neighbour on ``B``; we
call ``a'`` a *leftover* of the pair ``(A, B)``.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterator, Sequence

from .graph import Graph
from .oracle import DEFAULT_CAP, OracleCapError, min_singletons_exact
from .partition import (
    PartitionStats,
    Path,
    PathPartition,
    canon,
    stats,
    validate,
)
from .seed import SeedConfig, SeedError, initial_partition


class OpKind(enum.Enum):
    OP30_02 = "3-0-By-0-2"
    OP31_03_P21 = "3-1-By-0-3/2.1"
    OP31_03_P22 = "3-1-By-0-3/2.2"
    OP41_13 = "4-1-By-1-3"
    OP42_14_C1 = "4-2-By-1-4/c1"
    OP42_14_C2 = "4-2-By-1-4/c2"
    OP42_14_C3 = "4-2-By-1-4/c3"

    @property
    def priority(self) -> float:
        return _PRIORITY[self]


_PRIORITY = {
    OpKind.OP30_02: 1,
    OpKind.OP31_03_P21: 2.1,
    OpKind.OP31_03_P22: 2.2,
    OpKind.OP41_13: 3,
    OpKind.OP42_14_C1: 4,
    OpKind.OP42_14_C2: 4,
    OpKind.OP42_14_C3: 4,
}


class MoveError(RuntimeError):
    """A move cannot be applied (stale) or a matcher certified a
    configuration that has no replacement (a bug)."""


@dataclass(frozen=True)
class LocalMove:
    kind: OpKind
    removed: tuple[int, ...]
    removed_paths: tuple[Path, ...]
    added: tuple[Path, ...]
    witness: tuple[tuple[int, int], ...]

    def vertices(self) -> list[int]:
        return sorted(v for p in self.removed_paths for v in p)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "removed": [list(p) for p in self.removed_paths],
            "added": [list(p) for p in self.added],
            "witness": [list(e) for e in self.witness],
        }


class ScanCounter:
    """Counts candidate collections examined by the matchers: every anchor
    path a matcher starts from, every partial tuple it tests, and one per
    matcher rejected outright for lack of paths."""

    def __init__(self):
        self.count = 0

    def tick(self, k: int = 1) -> None:
        self.count += k


# ---------------------------------------------------------------- helpers


def path_variants(g: Graph, p: Sequence[int]) -> list[Path]:
    """Canonical 3-paths on the vertices of ``p`` realisable in ``g``."""
    out = {canon(o) for o in _orientations(g, p)}
    return sorted(out)


def _orientations(g: Graph, p: Sequence[int]) -> list[Path]:
    """Directed orderings ``(x, y, z)`` of ``p``'s vertices with x-y, y-z in E.

    Each undirected variant appears twice, once per direction.
    """
    return [
        o for o in permutations(sorted(p))
        if g.has_edge(o[0], o[1]) and g.has_edge(o[1], o[2])
    ]


def construct_replacement(
    g: Graph, vertices: Sequence[int], target: tuple[int, int]
) -> list[Path]:
    """Split ``vertices`` into ``target[0]`` 2-paths and ``target[1]`` 3-paths.

    Exhaustive search, branching on the smallest uncovered vertex and trying
    candidate paths in canonical order; the first split found is returned.
    """
    j1, j2 = target
    vs = frozenset(vertices)
    if len(vs) != len(vertices) or len(vs) != 2 * j1 + 3 * j2:
        raise MoveError(f"{len(vertices)} vertices do not fit target {target}")

    def options(v: int, rest: frozenset[int], k1: int, k2: int) -> list[Path]:
        cand: set[Path] = set()
        nb = g.adjacency[v] & rest
        for a in nb:
            if k1:
                cand.add(canon((v, a)))
            if k2:
                for b in g.adjacency[a] & rest:
                    if b != v:
                        cand.add(canon((v, a, b)))
                for b in nb:
                    if b != a:
                        cand.add(canon((a, v, b)))
        return sorted(cand)

    def search(rest: frozenset[int], k1: int, k2: int) -> list[Path] | None:
        if not rest:
            return []
        v = min(rest)
        for p in options(v, rest, k1, k2):
            sub = search(rest - set(p), k1 - (len(p) == 2), k2 - (len(p) == 3))
            if sub is not None:
                return [p] + sub
        return None

    found = search(vs, j1, j2)
    if found is None:
        raise MoveError(f"no replacement of shape {target} on {sorted(vs)}")
    return sorted(found)


class _View:
    """Per-scan lookup tables over the current partition."""

    def __init__(self, g: Graph, q: PathPartition):
        self.g = g
        self.q = q
        self.two = sorted(q.ids_of_order(2))
        self.three = sorted(q.ids_of_order(3))
        self.pid = {v: ix[0] for v, ix in q.vertex_index.items()}
        self.partner: dict[int, int] = {}
        for i in self.two:
            a, b = q.paths[i]
            self.partner[a] = b
            self.partner[b] = a
        self._adj2: dict[int, list[int]] = {}
        self._leftover: dict[int, list[int]] | None = None
        self._attach: dict[int, list[tuple[int, int, int]]] = {}

    def adj2(self, v: int) -> list[int]:
        """Sorted ids of 2-paths with a vertex adjacent to ``v`` (excluding
        ``v``'s own path)."""
        r = self._adj2.get(v)
        if r is None:
            own = self.pid[v]
            r = sorted({
                self.pid[x] for x in self.g.adjacency[v]
                if x in self.partner and self.pid[x] != own
            })
            self._adj2[v] = r
        return r

    def leftover(self, s: int) -> list[int]:
        """Ids ``B`` such that ``s`` is a leftover of the pair (path(s), B)."""
        if self._leftover is None:
            self._leftover = {
                x: self.adj2(self.partner[x]) for x in self.partner
            }
        return self._leftover.get(s, [])

    def attach(self, t: int) -> list[tuple[int, int, int]]:
        """Leftover options ``(s, A, B)`` with ``s`` adjacent to ``t``."""
        r = self._attach.get(t)
        if r is None:
            r = [
                (s, self.pid[s], b)
                for s in sorted(self.g.adjacency[t]) if s in self.partner
                for b in self.leftover(s)
            ]
            self._attach[t] = r
        return r

    def path(self, i: int) -> Path:
        return self.q.paths[i]


def _make_move(g: Graph, q: PathPartition, kind: OpKind, ids: Sequence[int]) -> LocalMove:
    ids = tuple(ids)
    removed = tuple(q.paths[i] for i in ids)
    i1 = sum(len(p) == 2 for p in removed)
    i2 = sum(len(p) == 3 for p in removed)
    verts = [v for p in removed for v in p]
    added = construct_replacement(g, verts, (i1 - 3, i2 + 2))
    old = {frozenset(e) for p in removed for e in zip(p, p[1:])}
    witness = sorted(
        {tuple(sorted(e)) for p in added for e in zip(p, p[1:])
         if frozenset(e) not in old}
    )
    return LocalMove(kind, ids, removed, tuple(added), tuple(witness))


def _tick(counter: ScanCounter | None) -> None:
    if counter is not None:
        counter.count += 1


def _disjoint(a: tuple[int, int, int], b: tuple[int, int, int]) -> bool:
    return not ({a[1], a[2]} & {b[1], b[2]})


# --------------------------------------------------------------- matchers


def iter_op_3_0(g: Graph, q: PathPartition, counter: ScanCounter | None = None,
                view: _View | None = None) -> Iterator[tuple[int, ...]]:
    """Yield ``(A, B, C)``: 2-paths chained into a 6-path with B in the middle."""
    v = view or _View(g, q)
    if len(v.two) < 3:
        _tick(counter)
        return
    for b in v.two:
        _tick(counter)
        b1, b2 = v.path(b)
        for x, y in ((b1, b2), (b2, b1)):
            for a in v.adj2(x):
                for c in v.adj2(y):
                    if counter:
                        counter.tick()
                    if c != a:
                        yield (a, b, c)


def iter_op_3_1_p21(g: Graph, q: PathPartition, counter: ScanCounter | None = None,
                    view: _View | None = None) -> Iterator[tuple[int, ...]]:
    """Yield ``(P1, P2, P3, P4)``: each vertex of 3-path P4 is adjacent to a
    distinct one of the 2-paths."""
    v = view or _View(g, q)
    if len(v.two) < 3:
        _tick(counter)
        return
    for t in v.three:
        _tick(counter)
        x, y, z = v.path(t)
        for a in v.adj2(x):
            for b in v.adj2(y):
                if b == a:
                    continue
                for c in v.adj2(z):
                    if counter:
                        counter.tick()
                    if c != a and c != b:
                        yield (a, b, c, t)


def iter_op_3_1_p22(g: Graph, q: PathPartition, counter: ScanCounter | None = None,
                    view: _View | None = None) -> Iterator[tuple[int, ...]]:
    """Yield ``(A, B, P3, P4)``.

    The pair (A, B) leaves a singleton adjacent to a vertex ``p`` of P4,
    2-path P3 is adjacent to another vertex ``t`` of P4, and the third
    vertex is adjacent to ``p``.  This covers both configurations of the
    class (singleton at the midpoint, or singleton and P3 at the two
    endpoints) under every rotation of P4.
    """
    v = view or _View(g, q)
    if len(v.two) < 3:
        _tick(counter)
        return
    for t4 in v.three:
        _tick(counter)
        verts = v.path(t4)
        for t in verts:
            thirds = v.adj2(t)
            if not thirds:
                continue
            for p in verts:
                if p == t:
                    continue
                r = next(x for x in verts if x != t and x != p)
                if not g.has_edge(p, r):
                    continue
                for s, a, b in v.attach(p):
                    for c in thirds:
                        if counter:
                            counter.tick()
                        if c != a and c != b:
                            yield (a, b, c, t4)


def iter_op_4_1(g: Graph, q: PathPartition, counter: ScanCounter | None = None,
                view: _View | None = None) -> Iterator[tuple[int, ...]]:
    """Yield ``(A1, B1, A2, B2, P5)``: two pairs whose leftovers share a
    vertex ``t`` of P5, the other two vertices of P5 being adjacent."""
    v = view or _View(g, q)
    if len(v.two) < 4:
        _tick(counter)
        return
    for t5 in v.three:
        _tick(counter)
        verts = v.path(t5)
        for t in verts:
            a, b = (x for x in verts if x != t)
            if not g.has_edge(a, b):
                continue
            opts = v.attach(t)
            for i, o1 in enumerate(opts):
                for o2 in opts[i + 1:]:
                    if counter:
                        counter.tick()
                    if _disjoint(o1, o2):
                        yield (o1[1], o1[2], o2[1], o2[2], t5)


# Class -> (position of attach vertex on P5, on P6, admissible cross edges).
# Positions index a directed orientation (x, y, z) of each 3-path.
_C42 = {
    1: (0, 0, ((0, 2), (2, 0), (1, 2), (2, 1), (2, 2))),
    2: (0, 1, ((0, 0), (0, 2), (1, 0), (1, 2), (2, 0), (2, 2))),
    3: (1, 1, ((0, 0), (0, 2), (2, 0), (2, 2))),
}


def iter_op_4_2(g: Graph, q: PathPartition, cls: int,
                counter: ScanCounter | None = None,
                view: _View | None = None) -> Iterator[tuple[int, ...]]:
    """Yield ``(A1, B1, A2, B2, P5, P6)`` for configuration class ``cls``."""
    v = view or _View(g, q)
    if len(v.two) < 4 or len(v.three) < 2:
        _tick(counter)
        return
    pos5, pos6, cross = _C42[cls]
    orient = {t: _orientations(g, v.path(t)) for t in v.three}
    live = [t for t in v.three if any(v.attach(x) for x in v.path(t))]
    for t5 in live:
        for t6 in live:
            if t6 == t5:
                continue
            _tick(counter)
            for o5 in orient[t5]:
                opts5 = v.attach(o5[pos5])
                if not opts5:
                    continue
                for o6 in orient[t6]:
                    if counter:
                        counter.tick()
                    opts6 = v.attach(o6[pos6])
                    if not opts6:
                        continue
                    if not any(g.has_edge(o5[i], o6[j]) for i, j in cross):
                        continue
                    for s1 in opts5:
                        for s2 in opts6:
                            if counter:
                                counter.tick()
                            if s1[0] != s2[0] and _disjoint(s1, s2):
                                yield (s1[1], s1[2], s2[1], s2[2], t5, t6)


def _first(kind: OpKind, it: Iterator[tuple[int, ...]], g: Graph,
           q: PathPartition) -> LocalMove | None:
    for ids in it:
        return _make_move(g, q, kind, ids)
    return None


def find_op_3_0(g: Graph, q: PathPartition, counter: ScanCounter | None = None,
                view: _View | None = None) -> LocalMove | None:
    return _first(OpKind.OP30_02, iter_op_3_0(g, q, counter, view), g, q)


def find_op_3_1(g: Graph, q: PathPartition, cls: str | float = "2.1",
                counter: ScanCounter | None = None,
                view: _View | None = None) -> LocalMove | None:
    cls = str(cls)
    if cls == "2.1":
        return _first(OpKind.OP31_03_P21, iter_op_3_1_p21(g, q, counter, view), g, q)
    if cls == "2.2":
        return _first(OpKind.OP31_03_P22, iter_op_3_1_p22(g, q, counter, view), g, q)
    raise ValueError(f"class must be 2.1 or 2.2, got {cls!r}")


def find_op_4_1(g: Graph, q: PathPartition, counter: ScanCounter | None = None,
                view: _View | None = None) -> LocalMove | None:
    return _first(OpKind.OP41_13, iter_op_4_1(g, q, counter, view), g, q)


def find_op_4_2(g: Graph, q: PathPartition, counter: ScanCounter | None = None,
                view: _View | None = None,
                classes: Sequence[int] = (1, 2, 3)) -> LocalMove | None:
    kinds = {1: OpKind.OP42_14_C1, 2: OpKind.OP42_14_C2, 3: OpKind.OP42_14_C3}
    for c in classes:
        mv = _first(kinds[c], iter_op_4_2(g, q, c, counter, view), g, q)
        if mv is not None:
            return mv
    return None


CASCADE: tuple[tuple[OpKind, Callable[..., LocalMove | None]], ...] = (
    (OpKind.OP30_02, find_op_3_0),
    (OpKind.OP31_03_P21, lambda g, q, c, v: find_op_3_1(g, q, "2.1", c, v)),
    (OpKind.OP31_03_P22, lambda g, q, c, v: find_op_3_1(g, q, "2.2", c, v)),
    (OpKind.OP41_13, find_op_4_1),
    (OpKind.OP42_14_C1, lambda g, q, c, v: find_op_4_2(g, q, c, v, (1,))),
    (OpKind.OP42_14_C2, lambda g, q, c, v: find_op_4_2(g, q, c, v, (2,))),
    (OpKind.OP42_14_C3, lambda g, q, c, v: find_op_4_2(g, q, c, v, (3,))),
)


def next_move(g: Graph, q: PathPartition,
              counter: ScanCounter | None = None) -> LocalMove | None:
    """First applicable move in priority order, or None at a fixed point."""
    view = _View(g, q)
    for _, finder in CASCADE:
        mv = finder(g, q, counter, view)
        if mv is not None:
            return mv
    return None


def applicable_kinds(g: Graph, q: PathPartition) -> list[OpKind]:
    """Every operation kind with at least one match on ``q``."""
    view = _View(g, q)
    return [k for k, finder in CASCADE if finder(g, q, None, view) is not None]


# ----------------------------------------------------------------- driver


def check_move(g: Graph, mv: LocalMove) -> list[str]:
    """Violations of the move invariants (empty when the move is sound)."""
    bad = []
    if len(mv.removed) != len(mv.added) + 1:
        bad.append(f"{len(mv.removed)} removed vs {len(mv.added)} added")
    if sorted(v for p in mv.added for v in p) != mv.vertices():
        bad.append("vertex multisets differ")
    if any(len(p) == 1 for p in mv.removed_paths + mv.added):
        bad.append("a 1-path is touched")
    for p in mv.added:
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                bad.append(f"({a},{b}) is not an edge")
    i1 = sum(len(p) == 2 for p in mv.removed_paths)
    i2 = sum(len(p) == 3 for p in mv.removed_paths)
    j1 = sum(len(p) == 2 for p in mv.added)
    j2 = sum(len(p) == 3 for p in mv.added)
    if (j1, j2) != (i1 - 3, i2 + 2):
        bad.append(f"shape {i1}-{i2} -> {j1}-{j2}")
    return bad


def apply_move(q: PathPartition, mv: LocalMove, inplace: bool = False) -> PathPartition:
    for pid, p in zip(mv.removed, mv.removed_paths):
        if q.paths.get(pid) != p:
            raise MoveError(f"stale move: path {pid} is not {list(p)}")
    out = q if inplace else q.copy()
    for pid in mv.removed:
        out.remove(pid)
    for p in mv.added:
        out.add(p)
    return out


@dataclass
class SolveReport:
    initial_stats: PartitionStats
    final_stats: PartitionStats
    iterations: int
    op_counts: dict[str, int]
    seed_exact: bool
    wall_time: float
    seed_time: float
    scans: int
    scans_per_iteration: list[int] = field(default_factory=list)
    trace: list[LocalMove] | None = None

    def as_dict(self) -> dict:
        d = {
            "initial_stats": self.initial_stats.as_dict(),
            "final_stats": self.final_stats.as_dict(),
            "iterations": self.iterations,
            "op_counts": self.op_counts,
            "seed_exact": self.seed_exact,
            "wall_time": self.wall_time,
            "seed_time": self.seed_time,
            "scans": self.scans,
            "scans_per_iteration": self.scans_per_iteration,
        }
        if self.trace is not None:
            d["trace"] = [mv.as_dict() for mv in self.trace]
        return d


def least_singletons_certified(g: Graph, q: PathPartition, cap: int = DEFAULT_CAP) -> bool:
    """Whether ``q``'s 1-path count is provably minimal (via the oracle
    when the graph is small enough)."""
    c1 = stats(q).c1
    if c1 == 0:
        return True
    try:
        return min_singletons_exact(g, cap=cap).c1 == c1
    except OracleCapError:
        return False


def solve(
    g: Graph,
    cfg: SeedConfig = SeedConfig(),
    trace: bool = False,
    initial: PathPartition | None = None,
    on_move: Callable[[PathPartition, LocalMove], None] | None = None,
) -> tuple[PathPartition, SolveReport]:
    """Seed, then apply the first applicable move in priority order until
    none applies.

    ``initial`` bypasses the seed step; it must validate against ``g``.
    ``on_move(q_after, move)`` is called after every applied move.
    """
    t0 = time.perf_counter()
    if initial is not None:
        rep = validate(g, initial)
        if not rep.ok:
            raise SeedError(f"injected partition is invalid: {rep}")
        q = initial.copy()
        exact = least_singletons_certified(g, q, cfg.cap)
    else:
        q, exact = initial_partition(g, cfg)
    t1 = time.perf_counter()
    first = stats(q)
    counts = {k.value: 0 for k in OpKind}
    log: list[LocalMove] = []
    per_iter: list[int] = []
    counter = ScanCounter()
    while True:
        before = counter.count
        mv = next_move(g, q, counter)
        per_iter.append(counter.count - before)
        if mv is None:
            break
        apply_move(q, mv, inplace=True)
        counts[mv.kind.value] += 1
        if trace:
            log.append(mv)
        if on_move:
            on_move(q, mv)
    done = time.perf_counter()
    report = SolveReport(
        initial_stats=first,
        final_stats=stats(q),
        iterations=sum(counts.values()),
        op_counts=counts,
        seed_exact=exact,
        wall_time=done - t0,
        seed_time=t1 - t0,
        scans=counter.count,
        scans_per_iteration=per_iter,
        trace=log if trace else None,
    )
    return q, report
