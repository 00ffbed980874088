"""Hand-built instances, one per worked example of each operation.

Vertices are named as usual for these gadgets: 2-paths ``Pi = ui-vi`` and
3-paths ``u-w-v`` and ``u'-w'-v'``.  Each entry lists the partition, the
extra edges outside it, the operation expected to fire and the known
replacement.
"""

from __future__ import annotations

from dataclasses import dataclass

from threepp.graph import Graph, graph_from_edges
from threepp.localsearch import OpKind
from threepp.partition import PathPartition

NAMES = ["u1", "v1", "u2", "v2", "u3", "v3", "u4", "v4", "u", "w", "v", "u'", "w'", "v'"]


@dataclass(frozen=True)
class Worked:
    name: str
    paths: tuple[str, ...]
    extra: tuple[str, ...]
    kind: OpKind
    priority: float
    added: tuple[str, ...]

    @property
    def labels(self) -> list[str]:
        """Vertex names present, numbered in the order of NAMES."""
        used = {x for p in self.paths for x in p.split("-")}
        return [x for x in NAMES if x in used]

    @property
    def n(self) -> int:
        return len(self.labels)

    def _p(self, text: str) -> tuple[int, ...]:
        idx = {x: i for i, x in enumerate(self.labels)}
        return tuple(idx[x] for x in text.split("-"))

    def graph(self) -> Graph:
        edges = [e for p in self.paths + self.extra for e in zip(self._p(p), self._p(p)[1:])]
        return graph_from_edges(self.n, edges)

    def partition(self) -> PathPartition:
        return PathPartition(self.n, [self._p(p) for p in self.paths])

    def added_paths(self) -> list[tuple[int, ...]]:
        return [self._p(p) for p in self.added]


TWO3 = ("u1-v1", "u2-v2", "u3-v3")
TWO4 = TWO3 + ("u4-v4",)
P5 = ("u-w-v",)
P6 = ("u'-w'-v'",)

WORKED = [
    Worked("chain", TWO3, ("u1-v2", "u2-v3"), OpKind.OP30_02, 1,
           ("v1-u1-v2", "u2-v3-u3")),
    Worked("spread", TWO3 + P5, ("u-u1", "w-u2", "v-u3"), OpKind.OP31_03_P21, 2.1,
           ("u-u1-v1", "w-u2-v2", "v-u3-v3")),
    Worked("absorb_mid", TWO3 + P5, ("v1-u2", "u1-w", "u-u3"), OpKind.OP31_03_P22, 2.2,
           ("v1-u2-v2", "v-w-u1", "u-u3-v3")),
    Worked("absorb_end", TWO3 + P5, ("v1-u2", "u1-v", "u-u3"), OpKind.OP31_03_P22, 2.2,
           ("v1-u2-v2", "w-v-u1", "u-u3-v3")),
    Worked("meet", TWO4 + P5, ("v1-u2", "v3-u4", "u1-u", "u3-u"), OpKind.OP41_13, 3,
           ("v1-u2-v2", "v3-u4-v4", "u1-u-u3", "w-v")),
    Worked("cross_c1", TWO4 + P5 + P6, ("v1-u2", "v3-u4", "u1-u", "u3-u'", "u-v'"),
           OpKind.OP42_14_C1, 4,
           ("v1-u2-v2", "v3-u4-v4", "u1-u-v'", "u3-u'-w'", "w-v")),
    Worked("cross_c2", TWO4 + P5 + P6, ("v1-u2", "v3-u4", "u1-u", "u3-w'", "u-u'"),
           OpKind.OP42_14_C2, 4,
           ("v1-u2-v2", "v3-u4-v4", "u1-u-u'", "u3-w'-v'", "w-v")),
    Worked("cross_c3", TWO4 + P5 + P6, ("v1-u2", "v3-u4", "u1-w", "u3-w'", "u-u'"),
           OpKind.OP42_14_C3, 4,
           ("v1-u2-v2", "v3-u4-v4", "u1-w-v", "u3-w'-v'", "u-u'")),
]
