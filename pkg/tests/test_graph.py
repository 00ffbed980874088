import pytest
from hypothesis import given, settings, strategies as st

from threepp.graph import (
    GraphError,
    GraphFormatError,
    complete_graph,
    format_graph,
    gen_random,
    graph_from_edges,
    named_graph,
    neighbors,
    parse_graph,
    path_graph,
    read_graph,
    write_graph,
)


def test_parse_triangle():
    g = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert (g.n, g.m) == (3, 3)
    assert g == complete_graph(3)


def test_parse_single_edge_no_trailing_newline():
    g = parse_graph("p 2 1\ne 1 2")
    assert (g.n, g.m, g.edges) == (2, 1, ((0, 1),))


def test_parse_comments_anywhere():
    g = parse_graph("c hello\np 3 1\nc mid\ne 3 1\nc end")
    assert g.edges == ((0, 2),)


@pytest.mark.parametrize("text, line, fragment", [
    ("p 3 1\ne 1 1\n", 2, "self-loop"),
    ("p 3 2\ne 1 2\ne 2 1\n", 3, "duplicate"),
    ("p 3 1\ne 1 4\n", 2, "out of range"),
    ("p 3 1\ne 0 1\n", 2, "out of range"),
    ("e 1 2\np 2 1\n", 1, "before header"),
    ("p 3\n", 1, "header"),
    ("p x 1\n", 1, "non-integer"),
    ("p 2 1\np 2 1\ne 1 2\n", 2, "second header"),
    ("p 2 1\nq 1 2\n", 2, "unknown line"),
    ("p 2 1\ne 1 b\n", 2, "non-integer"),
])
def test_parse_errors_carry_line(text, line, fragment):
    with pytest.raises(GraphFormatError) as ei:
        parse_graph(text)
    assert ei.value.line == line
    assert f"line {line}" in str(ei.value)
    assert fragment in str(ei.value)


def test_parse_edge_count_mismatch():
    with pytest.raises(GraphFormatError, match="declares 2"):
        parse_graph("p 3 2\ne 1 2\n")
    with pytest.raises(GraphFormatError, match="missing"):
        parse_graph("c nothing\n")


def test_graph_from_edges_examples():
    p4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert p4 == path_graph(4)
    g = graph_from_edges(3, [(0, 1), (1, 0)])
    assert g.m == 1 and g.degree(2) == 0
    one = graph_from_edges(1, [])
    assert (one.n, one.m) == (1, 0)


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_graph_from_edges_rejects(edges):
    with pytest.raises(GraphError):
        graph_from_edges(3, edges)


def test_neighbors():
    assert neighbors(complete_graph(3), 0) == {1, 2}
    assert neighbors(path_graph(4), 1) == {0, 2}
    assert neighbors(graph_from_edges(2, []), 1) == set()
    with pytest.raises(GraphError):
        neighbors(path_graph(4), 4)


def test_gen_random_extremes_and_determinism():
    assert gen_random(5, 0.0, 3).m == 0
    assert gen_random(5, 1.0, 3) == complete_graph(5)
    a, b = gen_random(16, 0.3, 42), gen_random(16, 0.3, 42)
    assert format_graph(a) == format_graph(b)
    assert gen_random(16, 0.3, 43) != a
    with pytest.raises(GraphError):
        gen_random(4, 1.5, 0)


def test_gen_random_matches_raw_pcg64_draws():
    import numpy as np

    n, p, seed = 9, 0.35, 11
    draws = np.random.Generator(np.random.PCG64(seed)).random(n * (n - 1) // 2)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    expect = tuple(e for e, x in zip(pairs, draws) if x < p)
    assert gen_random(n, p, seed).edges == expect
    assert gen_random(6, 0.5, 0).edges == ((0, 2), (0, 3), (0, 4), (2, 5), (3, 5))


def test_named_graphs():
    assert named_graph("k3") == complete_graph(3)
    star = named_graph("star5")
    assert star.n == 5 and star.degree(0) == 4
    assert named_graph("c6").m == 6
    assert named_graph("empty7").m == 0
    with pytest.raises(GraphError):
        named_graph("petersen")


def test_components_and_induced():
    g = graph_from_edges(6, [(0, 1), (4, 5), (1, 2)])
    assert g.components() == [[0, 1, 2], [3], [4, 5]]
    sub, back = g.induced([4, 5])
    assert sub.edges == ((0, 1),) and back == [4, 5]


def test_round_trip_file(tmp_path):
    g = gen_random(12, 0.4, 5)
    write_graph(g, tmp_path / "x.gr", comment="two\nlines")
    assert read_graph(tmp_path / "x.gr") == g


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph_from_edges(n, chosen)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_graph_invariants(g):
    for u in range(g.n):
        assert u not in g.adjacency[u]
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
    assert set(g.edges) == {(u, v) for u in range(g.n) for v in g.adjacency[u] if u < v}
    assert parse_graph(format_graph(g)) == g
