import numpy as np
import pytest

import netcurv as nc
from netcurv.graphs import canon_edge
from oracles import dijkstra_unit, reachability_closure


def test_parse_simple():
    g = nc.parse_edge_list("1 2\n2 3\n")
    assert g.vertices == (1, 2, 3)
    assert g.edges == ((1, 2), (2, 3))


def test_parse_empty():
    g = nc.parse_edge_list("")
    assert g.vertices == () and g.edges == ()


def test_parse_appendix_degrees(appendix_graph):
    assert appendix_graph.degree(1) == 4
    assert appendix_graph.degree(2) == 5


def test_parse_normalizes_and_dedupes():
    g = nc.parse_edge_list("2 1\n1 2\n# comment\n\n3\n")
    assert g.edges == ((1, 2),)
    assert g.vertices == (1, 2, 3)


def test_parse_crlf():
    g = nc.parse_edge_list("1 2\r\n2 3\r\n")
    assert g.edges == ((1, 2), (2, 3))


def test_parse_rejects_self_loop_with_line_number():
    with pytest.raises(nc.EdgeListError) as err:
        nc.parse_edge_list("1 2\n3 3\n")
    assert err.value.line_no == 2


def test_parse_rejects_garbage():
    with pytest.raises(nc.EdgeListError) as err:
        nc.parse_edge_list("1 2\nfoo bar\n")
    assert err.value.line_no == 2
    with pytest.raises(nc.EdgeListError):
        nc.parse_edge_list("1 2 3 4\n")
    with pytest.raises(nc.EdgeListError):
        nc.parse_edge_list("-1 2\n")


def test_write_edge_list_canonical():
    g = nc.Graph([(2, 1)])
    assert nc.write_edge_list(g) == "1 2\n"
    g = nc.Graph(vertices=[5])
    assert nc.write_edge_list(g) == "5\n"


def test_write_parse_roundtrip():
    for seed in range(10):
        g = nc.erdos_renyi(12, 0.3, seed)
        assert nc.parse_edge_list(nc.write_edge_list(g)) == g


def test_remove_edge_triangle():
    g = nc.Graph([(0, 1), (1, 2), (0, 2)])
    h = nc.remove_edge(g, (2, 0))
    assert h.edges == ((0, 1), (1, 2))
    assert h.vertices == g.vertices


def test_remove_edge_keeps_isolated_vertices():
    g = nc.Graph([(3, 7)])
    h = nc.remove_edge(g, (7, 3))
    assert h.edges == ()
    assert h.vertices == (3, 7)


def test_remove_edge_missing():
    g = nc.Graph([(0, 1)])
    with pytest.raises(nc.MissingEdgeError):
        nc.remove_edge(g, (0, 2))


def test_remove_edge_decrements_count():
    g, _ = nc.sbm(3, 5, 0.8, 0.2, seed=4)
    e = g.edges[len(g.edges) // 2]
    assert nc.remove_edge(g, e).num_edges == g.num_edges - 1


def test_components_path():
    g = nc.Graph([(1, 2), (2, 3)])
    assert nc.connected_components(g).labels == {1: 0, 2: 0, 3: 0}


def test_components_two_triangles():
    g = nc.Graph([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert nc.connected_components(g).labels == {0: 0, 1: 0, 2: 0, 3: 1, 4: 1, 5: 1}


def test_components_match_reachability_oracle():
    for seed in range(8):
        g = nc.erdos_renyi(14, 0.12, seed)
        part = nc.connected_components(g)
        verts, reach = reachability_closure(g)
        for i, u in enumerate(verts):
            for j, v in enumerate(verts):
                assert (part.labels[u] == part.labels[v]) == bool(reach[i, j])


def test_components_label_order_by_smallest_member():
    g = nc.Graph([(5, 6), (0, 1)], vertices=[3])
    part = nc.connected_components(g)
    assert part.labels == {0: 0, 1: 0, 3: 1, 5: 2, 6: 2}


def test_bfs_path_distance():
    g = nc.Graph([(1, 2), (2, 3), (3, 4)])
    d = nc.bfs_distances(g, [1], radius=3)
    assert d[(1, 4)] == 3 and d[(1, 1)] == 0


def test_bfs_radius_cutoff():
    g = nc.Graph([(1, 2), (2, 3), (3, 4)])
    d = nc.bfs_distances(g, [1], radius=2)
    assert (1, 4) not in d
    assert d[(1, 3)] == 2


def test_bfs_matches_dijkstra_oracle():
    for seed in range(6):
        g = nc.erdos_renyi(15, 0.2, seed)
        d = nc.bfs_distances(g, g.vertices, radius=15)
        for s in g.vertices:
            expect = dijkstra_unit(g, s)
            got = {v: dd for (src, v), dd in d.items() if src == s}
            assert got == expect


def test_bfs_triangle_inequality():
    g = nc.erdos_renyi(14, 0.25, seed=4)
    d = nc.bfs_distances(g, g.vertices, radius=14)
    for u in g.vertices:
        for v in g.vertices:
            for w in g.vertices:
                if (u, v) in d and (v, w) in d and (u, w) in d:
                    assert d[(u, w)] <= d[(u, v)] + d[(v, w)]


def test_bfs_edge_iff_distance_one():
    g = nc.erdos_renyi(12, 0.3, seed=1)
    d = nc.bfs_distances(g, g.vertices, radius=12)
    for u in g.vertices:
        for v in g.vertices:
            if u < v:
                assert ((u, v) in g.edges) == (d.get((u, v)) == 1)


def test_graph_rejects_self_loop():
    with pytest.raises(ValueError):
        nc.Graph([(2, 2)])


def test_partition_normalization():
    p = nc.Partition.from_labels({5: 9, 1: 4, 2: 9})
    assert p.labels == {1: 0, 2: 1, 5: 1}
    p.validate()


def test_labels_roundtrip():
    p = nc.Partition.from_labels({0: 1, 1: 0, 2: 1})
    text = nc.write_labels(p)
    assert nc.parse_labels(text).labels == p.labels


def test_components_invariant_under_relabeling():
    rng = np.random.default_rng(7)
    g = nc.erdos_renyi(12, 0.15, seed=3)
    perm = {v: int(w) for v, w in zip(g.vertices, rng.permutation(12))}
    h = nc.Graph(
        edges=[(perm[u], perm[v]) for u, v in g.edges],
        vertices=[perm[v] for v in g.vertices],
    )
    pg = nc.connected_components(g)
    ph = nc.connected_components(h)
    for u in g.vertices:
        for v in g.vertices:
            assert (pg.labels[u] == pg.labels[v]) == (
                ph.labels[perm[u]] == ph.labels[perm[v]]
            )


def test_canon_edge():
    assert canon_edge(4, 2) == (2, 4)
    assert canon_edge(2, 4) == (2, 4)
