"""The exact oracle, next to the solver, on one random graph.

The oracle runs a subset DP per connected component, so it copes with any
graph whose components have at most 24 vertices.
"""

from threepp import gen_random, min_singletons_exact, optimal_partition, solve, stats

g = gen_random(18, 0.18, seed=4)
print(f"G(18, 0.18), seed 4: {g.m} edges, component sizes {[len(c) for c in g.components()]}")

opt = optimal_partition(g)
print(f"fewest paths: {opt.total}  {opt.best.path_list()}  ({opt.explored} DP states)")

ms = min_singletons_exact(g)
print(f"fewest 1-paths first: c1={ms.c1}, total={ms.total}")
worst = min_singletons_exact(g, most_paths=True)
print(f"same c1 but most paths: total={worst.total}")

q, rep = solve(g)
print(f"solver: {len(q)} paths, {stats(q).as_dict()}, moves {rep.iterations}")
