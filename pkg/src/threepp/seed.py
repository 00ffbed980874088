"""Initial 3-path partitions with as few 1-paths as possible.

``exact`` mode runs the subset DP of :mod:`threepp.oracle` with objective
(c1, total) and is certified minimal.  ``heuristic`` mode grows paths
greedily and then applies singleton-reduction rules until none fires:

* S1: two adjacent singletons become a 2-path;
* S2: a singleton adjacent to a 2-path extends it to a 3-path;
* S3: a singleton ``s`` adjacent to a vertex ``x`` of a 3-path whose other
  two vertices are adjacent: ``s-x`` and the remaining edge become two
  2-paths.

None of the rules increases the number of paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .graph import Graph
from .oracle import DEFAULT_CAP, OracleCapError, min_singletons_exact
from .partition import PathPartition

SeedMode = Literal["exact", "heuristic", "auto"]


class SeedError(ValueError):
    """Seed mode cannot be honoured (e.g. exact requested above the cap)."""


@dataclass(frozen=True)
class SeedConfig:
    mode: SeedMode = "auto"
    exact_threshold: int = 20
    cap: int = DEFAULT_CAP
    # Among least-1-path partitions, exact mode picks the one with the
    # fewest paths ("fewest") or the most ("most", adversarial start).
    tiebreak: Literal["fewest", "most"] = "fewest"

    def __post_init__(self):
        if self.mode not in ("exact", "heuristic", "auto"):
            raise SeedError(f"unknown seed mode {self.mode!r}")
        if self.tiebreak not in ("fewest", "most"):
            raise SeedError(f"unknown tiebreak {self.tiebreak!r}")
        if self.exact_threshold < 1:
            raise SeedError("exact_threshold must be >= 1")

    def use_exact(self, n: int) -> bool:
        if self.mode == "auto":
            return n <= self.exact_threshold
        return self.mode == "exact"


def initial_partition(g: Graph, cfg: SeedConfig = SeedConfig()) -> tuple[PathPartition, bool]:
    """Return ``(partition, exact)``; ``exact`` certifies the minimum c1."""
    if cfg.use_exact(g.n):
        try:
            res = min_singletons_exact(g, cap=cfg.cap, most_paths=cfg.tiebreak == "most")
            return res.best, True
        except OracleCapError as exc:
            raise SeedError(f"exact seed unavailable: {exc}") from None
    q = reduce_singletons(g, greedy_paths(g))
    # With no singletons left the minimum is trivially attained.
    return q, not q.singletons()


def greedy_paths(g: Graph) -> PathPartition:
    """Grow paths from low-degree vertices, extending either end to order 3."""
    used = [False] * g.n
    paths = []
    for v in sorted(range(g.n), key=lambda x: (g.degree(x), x)):
        if used[v]:
            continue
        used[v] = True
        path = [v]
        while len(path) < 3:
            ext = None
            for end, at_front in ((path[-1], False), (path[0], True)):
                free = [w for w in g.adjacency[end] if not used[w]]
                if free:
                    ext = (min(free, key=lambda x: (g.degree(x), x)), at_front)
                    break
            if ext is None:
                break
            w, at_front = ext
            used[w] = True
            if at_front:
                path.insert(0, w)
            else:
                path.append(w)
        paths.append(path)
    return PathPartition(g.n, paths)


def _rule_s1(g: Graph, q: PathPartition) -> bool:
    singles = sorted(q.singletons())
    alone = set(singles)
    for s in singles:
        for t in sorted(g.adjacency[s]):
            if t in alone and t != s:
                q.remove(q.path_of(s))
                q.remove(q.path_of(t))
                q.add((s, t))
                return True
    return False


def _rule_s2(g: Graph, q: PathPartition) -> bool:
    for s in sorted(q.singletons()):
        for x in sorted(g.adjacency[s]):
            pid = q.path_of(x)
            p = q.paths[pid]
            if len(p) == 2:
                other = p[1] if p[0] == x else p[0]
                q.remove(q.path_of(s))
                q.remove(pid)
                q.add((s, x, other))
                return True
    return False


def _rule_s3(g: Graph, q: PathPartition) -> bool:
    for s in sorted(q.singletons()):
        for x in sorted(g.adjacency[s]):
            pid = q.path_of(x)
            p = q.paths[pid]
            if len(p) != 3:
                continue
            a, b = (y for y in p if y != x)
            if g.has_edge(a, b):
                q.remove(q.path_of(s))
                q.remove(pid)
                q.add((s, x))
                q.add((a, b))
                return True
    return False


def reduce_singletons(g: Graph, q: PathPartition) -> PathPartition:
    """Apply S1-S3 (in that priority) on a copy of ``q`` until none fires."""
    q = q.copy()
    while _rule_s1(g, q) or _rule_s2(g, q) or _rule_s3(g, q):
        pass
    return q
