"""Watch each local operation fire on a small hand-built graph.

Every instance is a partition plus a few extra edges.  The solver is
started from that partition, and we print the move it picks together with
the paths it removes and adds.
"""

from threepp import PathPartition, graph_from_edges, next_move

NAMES = ["u1", "v1", "u2", "v2", "u3", "v3", "u4", "v4", "u", "w", "v", "u'", "w'", "v'"]


def build(paths, extra):
    used = [x for x in NAMES if any(x in p.split("-") for p in paths)]
    idx = {x: i for i, x in enumerate(used)}

    def ids(p):
        return tuple(idx[x] for x in p.split("-"))

    edges = [e for p in paths + extra for e in zip(ids(p), ids(p)[1:])]
    return graph_from_edges(len(used), edges), PathPartition(len(used), map(ids, paths)), used


def show(title, paths, extra):
    g, q, names = build(paths, extra)
    mv = next_move(g, q)
    fmt = lambda p: "-".join(names[v] for v in p)
    print(f"{title}: {mv.kind.value} (priority {mv.kind.priority})")
    print("   removes", ", ".join(fmt(p) for p in mv.removed_paths))
    print("   adds   ", ", ".join(fmt(p) for p in mv.added))
    print("   via non-partition edges", ", ".join(fmt(e) for e in mv.witness))


two3 = ["u1-v1", "u2-v2", "u3-v3"]
two4 = two3 + ["u4-v4"]

print("Three 2-paths chained into a 6-path become two 3-paths.")
show("chain", two3, ["u1-v2", "u2-v3"])

print("\nA 3-path whose vertices each see a different 2-path is broken up.")
show("spread", two3 + ["u-w-v"], ["u-u1", "w-u2", "v-u3"])

print("\nTwo adjacent 2-paths leave a singleton that a 3-path absorbs.")
show("absorb", two3 + ["u-w-v"], ["v1-u2", "u1-w", "u-u3"])

print("\nTwo such singletons meeting at one endpoint of a 3-path.")
show("meet", two4 + ["u-w-v"], ["v1-u2", "v3-u4", "u1-u", "u3-u"])

print("\nSingletons on two different 3-paths, glued by a cross edge.")
show("cross", two4 + ["u-w-v", "u'-w'-v'"], ["v1-u2", "v3-u4", "u1-w", "u3-w'", "u-u'"])

print("\nThe meeting case again, but the midpoint w sees both singletons and u-v closes")
print("the 3-path, so it is rotated to make w an endpoint.")
show("rotate", two4 + ["u-w-v"], ["v1-u2", "v3-u4", "u1-w", "u3-w", "u-v"])
