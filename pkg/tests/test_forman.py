import itertools

import numpy as np
import pytest

import netcurv as nc
from oracles import afrc_augmentation, afrc_direct, gamma_matrix, triangles_per_edge


def test_frc_appendix(appendix_graph):
    assert nc.frc(appendix_graph, (1, 2)) == -5


def test_frc_single_edge():
    assert nc.frc(nc.Graph([(0, 1)]), (0, 1)) == 2


def test_frc_k4():
    g = nc.Graph(list(itertools.combinations(range(4), 2)))
    for e in g.edges:
        assert nc.frc(g, e) == -2


def test_frc_missing_edge():
    with pytest.raises(ValueError):
        nc.frc(nc.Graph([(0, 1)]), (1, 2))


def test_afrc_appendix(appendix_graph):
    census = nc.build_census(appendix_graph, 4)
    assert nc.afrc(appendix_graph, census, (1, 2)) == 0


def test_afrc_acyclic_equals_frc():
    tree = nc.Graph([(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    for n in (3, 4, 5):
        census = nc.build_census(tree, n)
        for e in tree.edges:
            assert nc.afrc(tree, census, e) == nc.frc(tree, e)


def test_afrc_k3():
    g = nc.Graph([(0, 1), (1, 2), (0, 2)])
    census = nc.build_census(g, 3)
    for e in g.edges:
        assert nc.afrc(g, census, e) == 3


def test_afrc_census_mismatch():
    g = nc.Graph([(0, 1), (1, 2), (0, 2)])
    census = nc.build_census(nc.Graph([(0, 1), (1, 2)]), 3)
    with pytest.raises(ValueError):
        nc.afrc(g, census, (0, 1))


def test_afrc_both_formulas_agree_with_oracles():
    for seed in range(8):
        g = nc.erdos_renyi(10, 0.35, seed)
        for max_len in (3, 4, 5):
            census = nc.build_census(g, max_len)
            gam = gamma_matrix(g, max_len)
            for e in g.edges:
                got = nc.afrc(g, census, e)
                assert got == afrc_direct(g, gam, e)
                assert got == afrc_augmentation(g, gam, e)


def test_afrc_all_bipartite_equals_frc():
    g = nc.bipartite_er(12, 0.3, seed=3)
    assert g.num_edges > 0
    af3 = nc.afrc_all(g, 3)
    fr = nc.frc_all(g)
    assert af3.values == fr.values


def test_afrc_all_c5_no_short_cycles():
    g = nc.Graph([(i, (i + 1) % 5) for i in range(5)])
    af4 = nc.afrc_all(g, 4)
    for e in g.edges:
        assert af4[e] == nc.frc(g, e)


def test_af3_is_frc_plus_three_triangles():
    g, _ = nc.sbm(3, 6, 0.7, 0.1, seed=1)
    af3 = nc.afrc_all(g, 3)
    for e in g.edges:
        assert af3[e] == nc.frc(g, e) + 3 * triangles_per_edge(g, e)


def test_afrc_values_are_integers():
    g = nc.erdos_renyi(12, 0.4, seed=6)
    for n in (3, 4, 5):
        for val in nc.afrc_all(g, n).values.values():
            assert val == int(val)


def test_vertex_order_invariance():
    rng = np.random.default_rng(0)
    g = nc.erdos_renyi(10, 0.4, seed=2)
    for n in (3, 4, 5):
        base = nc.afrc_all(g, n)
        for _ in range(5):
            # scattered relabeling, not merely a permutation of 0..n-1
            perm = {v: int(w) * 7 + 3 for v, w in zip(g.vertices, rng.permutation(10))}
            h = nc.Graph(edges=[(perm[u], perm[v]) for u, v in g.edges])
            relabeled = nc.afrc_all(h, n)
            for u, v in g.edges:
                assert relabeled[(perm[u], perm[v])] == base[(u, v)]


def test_afrc_all_method_tags():
    g = nc.Graph([(0, 1), (1, 2), (0, 2)])
    assert nc.afrc_all(g, 3).method == "AFRC3"
    assert nc.afrc_all(g, 5).method == "AFRC5"
    assert nc.frc_all(g).method == "FRC"


def test_curvature_vector_csv_roundtrip():
    g = nc.erdos_renyi(8, 0.4, seed=1)
    cv = nc.afrc_all(g, 4)
    back = nc.CurvatureVector.from_csv(cv.to_csv())
    assert back.method == cv.method
    assert back.values == cv.values


def test_curvature_vector_json_roundtrip():
    g = nc.erdos_renyi(8, 0.4, seed=2)
    cv = nc.frc_all(g)
    back = nc.CurvatureVector.from_json(cv.to_json())
    assert back.method == cv.method
    assert back.values == cv.values
