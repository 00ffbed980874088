"""Paths of order at most 3 and partitions of a graph's vertices into them.

A path is a tuple of distinct vertices.  Its canonical orientation has
``path[0] <= path[-1]``; a path and its reversal are the same path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph

Path = tuple[int, ...]

FORMAT_VERSION = 1


def canon(path: Sequence[int]) -> Path:
    path = tuple(int(v) for v in path)
    return path if path[0] <= path[-1] else path[::-1]


def same_path(a: Sequence[int], b: Sequence[int]) -> bool:
    return canon(a) == canon(b)


def is_path_in(g: Graph, path: Sequence[int]) -> bool:
    """True iff ``path`` is a simple path of order 1..3 along edges of ``g``."""
    if not 1 <= len(path) <= 3 or len(set(path)) != len(path):
        return False
    if any(not 0 <= v < g.n for v in path):
        return False
    return all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


@dataclass(frozen=True)
class PartitionStats:
    c1: int
    c2: int
    c3: int

    @property
    def total(self) -> int:
        return self.c1 + self.c2 + self.c3

    @property
    def covered(self) -> int:
        return self.c1 + 2 * self.c2 + 3 * self.c3

    def as_dict(self) -> dict:
        return {"c1": self.c1, "c2": self.c2, "c3": self.c3, "total": self.total}


class PathPartition:
    """Mutable collection of paths with a vertex -> (path id, position) index.

    Path ids are never reused, so iterating ids in ascending order visits
    older paths first.  The constructor does not enforce disjointness or
    coverage; :func:`validate` reports what is wrong with a given input.
    """

    def __init__(self, n: int, paths: Iterable[Sequence[int]] = ()):
        self.n = n
        self.paths: dict[int, Path] = {}
        self.vertex_index: dict[int, tuple[int, int]] = {}
        self._next_id = 0
        for p in paths:
            self.add(p)

    def add(self, path: Sequence[int]) -> int:
        p = canon(path)
        pid = self._next_id
        self._next_id += 1
        self.paths[pid] = p
        for pos, v in enumerate(p):
            self.vertex_index.setdefault(v, (pid, pos))
        return pid

    def remove(self, pid: int) -> Path:
        p = self.paths.pop(pid)
        for v in p:
            if self.vertex_index.get(v, (None,))[0] == pid:
                del self.vertex_index[v]
        return p

    def copy(self) -> PathPartition:
        q = PathPartition(self.n)
        q.paths = dict(self.paths)
        q.vertex_index = dict(self.vertex_index)
        q._next_id = self._next_id
        return q

    def path_of(self, v: int) -> int:
        return self.vertex_index[v][0]

    def ids_of_order(self, k: int) -> list[int]:
        return [pid for pid, p in self.paths.items() if len(p) == k]

    def singletons(self) -> set[int]:
        return {p[0] for p in self.paths.values() if len(p) == 1}

    def path_list(self) -> list[Path]:
        """Canonical paths in sorted order; independent of path ids."""
        return sorted(self.paths.values())

    def __len__(self) -> int:
        return len(self.paths)

    def __repr__(self) -> str:
        return f"PathPartition(n={self.n}, paths={self.path_list()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathPartition):
            return NotImplemented
        return self.n == other.n and self.path_list() == other.path_list()


def stats(q: PathPartition) -> PartitionStats:
    counts = [0, 0, 0, 0]
    for p in q.paths.values():
        counts[len(p)] += 1
    return PartitionStats(counts[1], counts[2], counts[3])


def all_singletons(g: Graph) -> PathPartition:
    return PathPartition(g.n, ((v,) for v in range(g.n)))


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "ok" if self.ok else "; ".join(self.violations)


def validate(g: Graph, q: PathPartition) -> ValidationReport:
    """Check that ``q`` is a 3-path partition of ``g``; never raises."""
    rep = ValidationReport()
    if q.n != g.n:
        rep.violations.append(f"partition is for n={q.n}, graph has n={g.n}")
    owner: dict[int, int] = {}
    for pid, p in sorted(q.paths.items()):
        if not 1 <= len(p) <= 3:
            rep.violations.append(f"path {list(p)} has order {len(p)}")
        for v in p:
            if not 0 <= v < g.n:
                rep.violations.append(f"vertex {v} in path {list(p)} out of range")
            elif v in owner:
                rep.violations.append(f"vertex {v} repeated (path {list(p)})")
            else:
                owner[v] = pid
        for a, b in zip(p, p[1:]):
            if 0 <= a < g.n and 0 <= b < g.n and not g.has_edge(a, b):
                rep.violations.append(f"({a},{b}) in path {list(p)} is not an edge")
    for v in range(g.n):
        if v not in owner:
            rep.violations.append(f"vertex {v} uncovered")
    for v, (pid, pos) in q.vertex_index.items():
        p = q.paths.get(pid)
        if p is None or pos >= len(p) or p[pos] != v:
            rep.violations.append(f"vertex index entry for {v} is stale")
    return rep


def to_json(q: PathPartition, **extra) -> dict:
    doc = {"format_version": FORMAT_VERSION, "n": q.n,
           "paths": [list(p) for p in q.path_list()]}
    doc.update(extra)
    return doc


def from_json(doc: dict | str) -> PathPartition:
    if isinstance(doc, str):
        doc = json.loads(doc)
    if "n" not in doc or "paths" not in doc:
        raise ValueError("partition JSON needs 'n' and 'paths'")
    for p in doc["paths"]:
        if not 1 <= len(p) <= 3:
            raise ValueError(f"path {p} must have 1..3 vertices")
    return PathPartition(int(doc["n"]), doc["paths"])


def read_partition(path) -> PathPartition:
    with open(path) as fh:
        return from_json(json.load(fh))


def write_partition(q: PathPartition, path, **extra) -> None:
    with open(path, "w") as fh:
        json.dump(to_json(q, **extra), fh, indent=1)
        fh.write("\n")
