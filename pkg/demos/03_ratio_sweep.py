"""Measure the approximation ratio against the exact optimum.

Two corpora: every connected graph on at most six vertices, and 200
random graphs.  Each is solved twice from a least-1-path start, once with
the fewest paths and once with the most, the latter giving local search
more to do.
"""

from threepp import harness
from threepp.seed import SeedConfig

for tiebreak in ("fewest", "most"):
    cfg = SeedConfig("exact", tiebreak=tiebreak)
    for label, corpus in (("atlas n<=6", harness.atlas_connected(6)),
                          ("200 x G(n,p)", harness.random_corpus(200, 8, 14))):
        recs = harness.compare_corpus(corpus, cfg)
        s = harness.summarize(recs)
        moves = sum(sum(r.op_counts.values()) for r in recs)
        print(f"{tiebreak:>6} start, {label:<13} {s.count:4d} graphs, {moves:4d} moves, "
              f"max ratio {s.max_ratio}, violations {s.violations}")

worst = max(harness.compare_corpus(harness.random_corpus(200, 8, 14),
                                   SeedConfig("exact", tiebreak="most")),
            key=lambda r: r.ratio)
print(f"\nworst random case: {worst.instance} with {worst.alg_total} paths "
      f"against an optimum of {worst.opt_total}; moves used {worst.op_counts}")
