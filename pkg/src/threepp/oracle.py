"""Exact 3-path partitions for small graphs by DP over vertex subsets.

Every partition of a vertex set ``S`` has exactly one path through the
smallest vertex of ``S``, so

    f(S) = min over paths p in S through min(S) of  cost(p) + f(S - p),

with f(empty) = 0.  Only subsets reachable from ``V`` this way are ever
stored.  The DP runs per connected component; the objective is additive
over components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph
from .partition import Path, PathPartition, canon, stats

DEFAULT_CAP = 24


class OracleCapError(ValueError):
    """A connected component is larger than the oracle's subset cap."""


@dataclass
class OracleResult:
    best: PathPartition
    objective: int | tuple[int, int]
    explored: int
    mode: str = "optimal"

    @property
    def total(self) -> int:
        return len(self.best)

    @property
    def c1(self) -> int:
        return stats(self.best).c1


def enumerate_small_paths(g: Graph, s: Iterable[int]) -> list[Path]:
    """Canonical 1-, 2- and 3-paths inside ``s`` through ``min(s)``, sorted."""
    s = set(s)
    if not s:
        return []
    v = min(s)
    out: set[Path] = {(v,)}
    for a in g.neighbors(v) & s:
        out.add(canon((v, a)))
        for b in g.neighbors(a) & s:
            if b != v:
                out.add(canon((v, a, b)))
        for b in g.neighbors(v) & s:
            if b != a:
                out.add(canon((a, v, b)))
    return sorted(out)


def _paths_by_owner(g: Graph) -> list[list[Path]]:
    """All canonical paths of order <= 3, bucketed by their minimum vertex."""
    owned: list[list[Path]] = [[(v,)] for v in range(g.n)]
    for u, v in g.edges:
        owned[u].append((u, v))
    for mid in range(g.n):
        nb = sorted(g.adjacency[mid])
        for i, a in enumerate(nb):
            for c in nb[i + 1:]:
                owned[min(a, mid)].append((a, mid, c))
    for lst in owned:
        lst.sort()
    return owned


def _solve_component(g: Graph, big: int, unit: int = 1) -> tuple[int, list[Path], int]:
    """DP on a (relabelled) component.

    A path costs ``unit``, plus ``big`` if it is a singleton.  ``big = 0``
    minimises the total; ``big = n + 1`` minimises (c1, unit * total)
    lexicographically, so ``unit = -1`` asks for the most paths among
    partitions with the fewest singletons.
    """
    owned = _paths_by_owner(g)
    cands = [
        [(sum(1 << x for x in p), unit + (big if len(p) == 1 else 0), p) for p in lst]
        for lst in owned
    ]
    memo: dict[int, int] = {0: 0}
    choice: dict[int, Path] = {}

    def f(s: int) -> int:
        r = memo.get(s)
        if r is not None:
            return r
        v = (s & -s).bit_length() - 1
        best = None
        pick = None
        for mask, cost, p in cands[v]:
            if mask & s == mask:
                val = cost + f(s ^ mask)
                if best is None or val < best:
                    best, pick = val, p
        memo[s] = best
        choice[s] = pick
        return best

    full = (1 << g.n) - 1
    value = f(full)
    paths = []
    s = full
    while s:
        p = choice[s]
        paths.append(p)
        s ^= sum(1 << x for x in p)
    return value, paths, len(memo)


def _run(g: Graph, cap: int, lexicographic: bool, unit: int = 1) -> tuple[list[Path], int]:
    paths: list[Path] = []
    explored = 0
    for comp in g.components():
        if len(comp) > cap:
            raise OracleCapError(
                f"component of {len(comp)} vertices exceeds oracle cap {cap}"
            )
        if len(comp) == 1:
            paths.append((comp[0],))
            explored += 1
            continue
        sub, back = g.induced(comp)
        big = sub.n + 1 if lexicographic else 0
        _, sub_paths, k = _solve_component(sub, big, unit)
        paths.extend(canon([back[x] for x in p]) for p in sub_paths)
        explored += k
    return paths, explored


def optimal_partition(g: Graph, cap: int = DEFAULT_CAP) -> OracleResult:
    """A 3-path partition with the fewest paths."""
    paths, explored = _run(g, cap, lexicographic=False)
    best = PathPartition(g.n, paths)
    return OracleResult(best, len(best), explored, "optimal")


def min_singletons_exact(g: Graph, cap: int = DEFAULT_CAP,
                         most_paths: bool = False) -> OracleResult:
    """A 3-path partition minimising (number of 1-paths, number of paths).

    With ``most_paths`` the second key is maximised instead: still a
    partition with the least 1-paths, but the worst such start for local
    search.
    """
    paths, explored = _run(g, cap, lexicographic=True, unit=-1 if most_paths else 1)
    best = PathPartition(g.n, paths)
    st = stats(best)
    return OracleResult(best, (st.c1, st.total), explored, "min-singletons")


def whole_graph_dp(g: Graph, lexicographic: bool = False) -> int:
    """Objective of the DP on ``g`` without component splitting.

    Returns the total path count, or ``c1 * (n + 1) + total`` when
    ``lexicographic``.  Used to cross-check the per-component split.
    """
    if g.n == 0:
        return 0
    value, _, _ = _solve_component(g, g.n + 1 if lexicographic else 0)
    return value
