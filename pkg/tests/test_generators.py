import itertools
import math

import numpy as np
import pytest

import netcurv as nc


def test_er_extremes():
    g = nc.erdos_renyi(5, 0.0, seed=0)
    assert g.num_edges == 0 and g.num_vertices == 5
    g = nc.erdos_renyi(5, 1.0, seed=0)
    assert g.num_edges == math.comb(5, 2)


def test_er_determinism():
    assert nc.erdos_renyi(30, 0.2, seed=7) == nc.erdos_renyi(30, 0.2, seed=7)
    assert nc.erdos_renyi(30, 0.2, seed=7) != nc.erdos_renyi(30, 0.2, seed=8)


def test_er_edge_count_moments():
    n, p, seeds = 300, 0.02, 30
    mean = np.mean([nc.erdos_renyi(n, p, s).num_edges for s in range(seeds)])
    mu = math.comb(n, 2) * p
    sigma = math.sqrt(math.comb(n, 2) * p * (1 - p) / seeds)
    assert abs(mean - mu) < 5 * sigma


def test_bipartite_complete():
    g = nc.bipartite_er(4, 1.0, seed=0)
    assert g.num_edges == 16
    assert all(u < 4 <= v for u, v in g.edges)


def test_bipartite_no_triangles():
    for seed in range(10):
        g = nc.bipartite_er(20, 0.3, seed)
        assert nc.enumerate_cycles(g, 3) == []


def test_sbm_disjoint_cliques():
    g, part = nc.sbm(2, 3, 1.0, 0.0, seed=0)
    assert part.labels == {0: 0, 1: 0, 2: 0, 3: 1, 4: 1, 5: 1}
    assert set(g.edges) == set(
        tuple(sorted(e)) for e in itertools.combinations(range(3), 2)
    ) | set(tuple(sorted((a + 3, b + 3))) for a, b in itertools.combinations(range(3), 2))


def test_sbm_validates_q_le_p():
    with pytest.raises(ValueError):
        nc.sbm(2, 3, 0.1, 0.5, seed=0)


def test_sbm_within_count_moments():
    seeds = 30
    counts = []
    for s in range(seeds):
        g, part = nc.sbm(10, 20, 0.7, 0.05, seed=s)
        counts.append(sum(1 for e in g.edges if part.is_within(*e)))
    mu = 10 * math.comb(20, 2) * 0.7
    sigma = math.sqrt(10 * math.comb(20, 2) * 0.7 * 0.3 / seeds)
    assert abs(np.mean(counts) - mu) < 5 * sigma


def test_sbm_with_p_equal_q_matches_er_moments():
    # SBM(l,k,p,p) and ER(l*k,p) draw from the same edge-count distribution
    seeds = 30
    p = 0.1
    sbm_counts = [nc.sbm(4, 10, p, p, seed=s)[0].num_edges for s in range(seeds)]
    er_counts = [nc.erdos_renyi(40, p, seed=1000 + s).num_edges for s in range(seeds)]
    pooled_sigma = math.sqrt(math.comb(40, 2) * p * (1 - p) * 2 / seeds)
    assert abs(np.mean(sbm_counts) - np.mean(er_counts)) < 5 * pooled_sigma


def test_tree_sbm_pure_trees():
    g, part = nc.tree_sbm(3, 8, 0.0, 0.0, seed=5)
    assert g.num_edges == 3 * 7
    assert nc.connected_components(g).num_communities == 3
    assert part.num_communities == 3


def test_tree_sbm_communities_connected():
    for seed in range(10):
        g, part = nc.tree_sbm(2, 12, 0.1, 0.05, seed=seed)
        for comm in part.community_sets():
            sub = nc.Graph(
                edges=[e for e in g.edges if set(e) <= comm], vertices=comm
            )
            assert nc.connected_components(sub).num_communities == 1


def test_tree_sbm_allows_q_above_p():
    g, _ = nc.tree_sbm(2, 5, 0.0, 0.8, seed=1)
    assert g.num_edges >= 2 * 4


def test_tree_sbm_uniform_over_labeled_trees():
    # 3 labeled trees on 3 vertices; each should appear about 1/3 of the time
    counts = {}
    trials = 600
    for s in range(trials):
        g, _ = nc.tree_sbm(1, 3, 0.0, 0.0, seed=s)
        counts[g.edges] = counts.get(g.edges, 0) + 1
    assert len(counts) == 3
    for c in counts.values():
        assert abs(c - trials / 3) < 5 * math.sqrt(trials * (1 / 3) * (2 / 3))


def test_hbg_layout():
    g, part = nc.hbg(3, 1.0, 0.0, seed=0)
    assert g.num_vertices == 12
    assert part.community_sets() == [frozenset(range(6)), frozenset(range(6, 12))]
    # two disjoint complete bipartite halves
    assert g.num_edges == 2 * 9
    side = lambda v: (v // 3) % 2
    assert all(side(u) != side(v) for u, v in g.edges)


def test_hbg_bipartite_no_odd_cycles():
    for seed in range(6):
        g, _ = nc.hbg(12, 0.4, 0.1, seed)
        assert nc.enumerate_cycles(g, 3) == []
        assert all(len(c) != 5 for c in nc.enumerate_cycles(g, 5))


def test_hbg_validates():
    with pytest.raises(ValueError):
        nc.hbg(5, 0.1, 0.5, seed=0)


def test_hbg_af3_equals_frc():
    g, _ = nc.hbg(10, 0.5, 0.1, seed=2)
    assert nc.afrc_all(g, 3).values == nc.frc_all(g).values


def test_model_params_dispatch():
    g, part = nc.ModelParams(model="sbm", l=2, k=3, p=1.0, q=0.0, seed=1).sample()
    assert g.num_vertices == 6 and part is not None
    g, part = nc.ModelParams(model="er", n=4, p=0.0, seed=1).sample()
    assert g.num_vertices == 4 and part is None


def test_model_params_validation():
    with pytest.raises(ValueError):
        nc.ModelParams(model="er", n=0, p=0.5)
    with pytest.raises(ValueError):
        nc.ModelParams(model="sbm", l=2, k=3, p=0.5, q=0.9)
    with pytest.raises(ValueError):
        nc.ModelParams(model="xyz", n=3, p=0.5)
    with pytest.raises(ValueError):
        nc.ModelParams(model="er", n=3, p=1.5)
    # tree-SBM has no q <= p requirement
    nc.ModelParams(model="tsbm", l=2, k=3, p=0.1, q=0.9)
