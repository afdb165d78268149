import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectra_evolve import (
    DuplicateEdgeError,
    Graph,
    GraphError,
    MissingEdgeError,
    SelfLoopError,
    make_star,
    read_edge_list,
    write_edge_list,
)

from conftest import complete_graph, path_graph, reachability_closure


def test_add_edge_to_empty():
    g = Graph(3).add_edge(0, 1)
    assert g.edges() == [(0, 1)]
    assert g.edge_count == 1


def test_add_edge_closes_cycle():
    tri = path_graph(3).add_edge(0, 2)
    assert tri.degrees.tolist() == [2, 2, 2]


def test_add_edge_rejects_duplicate_and_self_loop():
    tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(DuplicateEdgeError):
        tri.add_edge(0, 1)
    with pytest.raises(DuplicateEdgeError):
        tri.add_edge(1, 0)
    with pytest.raises(SelfLoopError):
        tri.add_edge(1, 1)


def test_remove_edge():
    tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
    g = tri.remove_edge(0, 1)
    assert g.edges() == [(0, 2), (1, 2)]
    assert g.is_connected()


def test_remove_edge_may_disconnect_without_error():
    g = path_graph(3).remove_edge(0, 1)
    assert not g.is_connected()
    assert g.degree(0) == 0


def test_remove_missing_edge():
    with pytest.raises(MissingEdgeError):
        path_graph(3).remove_edge(0, 2)


def test_edits_leave_original_untouched():
    g = path_graph(4)
    g.add_edge(0, 3)
    g.remove_edge(0, 1)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_is_connected():
    assert path_graph(5).is_connected()
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not two_triangles.is_connected()
    assert make_star(24).is_connected()
    assert Graph(1).is_connected()


def test_non_neighbors():
    assert complete_graph(4).non_neighbors(0) == []
    star = make_star(5)
    assert star.non_neighbors(0) == []
    assert star.non_neighbors(2) == [1, 3, 4]
    c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert c5.non_neighbors(0) == [2, 3]


def test_vertex_out_of_range():
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        path_graph(3).add_edge(0, 5)


def test_graph_equality_and_hash():
    a = Graph(4, [(0, 1), (2, 3), (1, 2)])
    b = Graph(4, [(1, 2), (0, 1), (2, 3)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != b.add_edge(0, 3)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=7))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph(n, chosen)


@given(small_graphs())
@settings(max_examples=200, deadline=None)
def test_degree_sum_identity(g):
    assert int(g.degrees.sum()) == 2 * g.edge_count
    assert 0 <= g.edge_count <= g.n * (g.n - 1) // 2


@given(small_graphs())
@settings(max_examples=200, deadline=None)
def test_connectivity_matches_reachability_oracle(g):
    assert g.is_connected() == bool(reachability_closure(g).all())


@given(small_graphs())
@settings(max_examples=100, deadline=None)
def test_edit_round_trip(g):
    pairs = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)]
    for u, v in pairs:
        if g.has_edge(u, v):
            assert g.remove_edge(u, v).add_edge(u, v) == g
        else:
            assert g.add_edge(u, v).remove_edge(u, v) == g


def test_edge_list_round_trip(tmp_path, rng):
    for _ in range(10):
        n = int(rng.integers(2, 30))
        iu, iv = np.triu_indices(n, k=1)
        mask = rng.random(len(iu)) < 0.3
        g = Graph(n, zip(iu[mask].tolist(), iv[mask].tolist()))
        path = tmp_path / "g.txt"
        write_edge_list(g, path)
        assert read_edge_list(path) == g


def test_edge_list_format(tmp_path):
    g = Graph(4, [(1, 3), (0, 1)])
    path = tmp_path / "g.txt"
    write_edge_list(g, path)
    assert path.read_text() == "4 2\n0 1\n1 3\n"


def test_edge_list_comments_before_header(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("# a comment\n# another\n3 2\n0 1\n1 2\n")
    assert read_edge_list(path) == path_graph(3)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n0 1\n",
        "3 2\n0 1\n",  # edge count mismatch
        "3 1\n1 0\n",  # i >= j
        "3 1\n0 0\n",  # self loop via i < j check
    ],
)
def test_edge_list_malformed(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(GraphError):
        read_edge_list(path)
