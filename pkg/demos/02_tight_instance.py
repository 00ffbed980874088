"""The 27-vertex instance where local search is stuck at exactly 4/3.

The starting partition has nine 2-paths and three 3-paths.  No operation
applies to it, yet the graph splits into nine 3-paths.
"""

from fractions import Fraction

from threepp import optimal_partition, solve, stats
from threepp.localsearch import applicable_kinds
from threepp.seed import SeedConfig
from threepp.tight import tight_instance

inst = tight_instance()
g, q = inst.graph, inst.seed
print(f"graph: {g.n} vertices, {g.m} edges")
print(f"adversarial start: {stats(q).as_dict()}")
print(f"2-paths of the start that are also edges of the optimum: {inst.shared_edges}")
print(f"operations applicable to the start: {applicable_kinds(g, q) or 'none'}")

out, report = solve(g, SeedConfig(cap=27), initial=q)
print(f"local search: {len(out)} paths after {report.iterations} moves "
      f"(least 1-paths certified: {report.seed_exact})")

opt = optimal_partition(g, cap=27)
print(f"optimum: {opt.total} paths, orders {sorted(len(p) for p in opt.best.path_list())}")
print(f"ratio: {Fraction(len(out), opt.total)}")
