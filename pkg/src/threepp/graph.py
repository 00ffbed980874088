"""Simple undirected graphs, the ``.gr`` instance format and generators.

Vertices are the integers ``0..n-1``.  Instance files are 1-indexed::

    c optional comment
    p <n> <m>
    e <u> <v>        (exactly m lines)

Random graphs are Erdős–Rényi G(n, p): one uniform draw per vertex pair
``(i, j)``, ``i < j``, in lexicographic order, from numpy's PCG64 bit
generator seeded with the given integer.  Pair ``(i, j)`` is an edge iff
its draw is ``< p``.  The same (n, p, seed) yields the same graph on any
machine with numpy >= 1.17.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Invalid graph data (self-loop, index out of range, ...)."""


class GraphFormatError(GraphError):
    """Malformed instance file; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    adjacency: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1`` plus the map back."""
        order = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(order)}
        sub = [
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos
        ]
        return graph_from_edges(len(order), sub), order

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
                        comp.append(y)
            comps.append(sorted(comp))
        return comps


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, collapsing duplicate pairs in either orientation."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    canon = tuple(sorted((u, v) for u in range(n) for v in adj[u] if u < v))
    return Graph(n, tuple(frozenset(a) for a in adj), canon)


def neighbors(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def parse_graph(text: str) -> Graph:
    """Parse ``.gr`` text.  Duplicate edge lines are an error here, unlike
    :func:`graph_from_edges`."""
    n = m = None
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise GraphFormatError("second header line", lineno)
            if len(tok) != 3:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            try:
                n, m = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphFormatError("non-integer header field", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative header field", lineno)
            continue
        if tok[0] == "e":
            if n is None:
                raise GraphFormatError("edge before header", lineno)
            if len(tok) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in seen:
                raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
            seen.add(key)
            edges.append(key)
            continue
        raise GraphFormatError(f"unknown line type {tok[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return graph_from_edges(n, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g, comment))


def gen_random(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p); pure function of its arguments."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return graph_from_edges(n, (e for e, x in zip(pairs, draws) if x < p))


# Small named graphs for the CLI and tests.

def path_graph(n: int) -> Graph:
    return graph_from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return graph_from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def empty_graph(n: int) -> Graph:
    return graph_from_edges(n, ())


def named_graph(name: str) -> Graph:
    """``k3``, ``p4``, ``c6``, ``star5`` (K_{1,4}), ``empty7`` and so on."""
    import re

    mt = re.fullmatch(r"(k|p|c|star|empty)(\d+)", name.lower())
    if not mt:
        raise GraphError(f"unknown named graph {name!r}")
    kind, k = mt.group(1), int(mt.group(2))
    if kind == "k":
        return complete_graph(k)
    if kind == "p":
        return path_graph(k)
    if kind == "c":
        return cycle_graph(k)
    if kind == "star":
        if k < 1:
            raise GraphError("star needs at least one vertex")
        return star_graph(k - 1)
    return empty_graph(k)
