import itertools

import pytest

import netcurv as nc


def clique(vertices):
    return list(itertools.combinations(vertices, 2))


def bridged_cliques():
    """Two K5s joined by a single bridge edge."""
    edges = clique(range(5)) + clique(range(5, 10)) + [(0, 5)]
    g = nc.Graph(edges)
    truth = nc.Partition({v: 0 if v < 5 else 1 for v in range(10)})
    return g, truth


def test_bridge_deleted_first_afrc3_min():
    g, truth = bridged_cliques()
    cfg = nc.DetectionConfig(method="AFRC3", direction="delete-min", threshold=0.0)
    result = nc.detect_communities(g, cfg)
    assert result.deletions[0] == (0, 5)
    assert result.iterations == 1
    assert nc.accuracy(result.partition, truth) == 1.0


def test_no_deletions_when_already_stopped():
    g, truth = bridged_cliques()
    cfg = nc.DetectionConfig(method="AFRC3", direction="delete-min", threshold=-100.0)
    result = nc.detect_communities(g, cfg)
    assert result.deletions == []
    assert result.partition.num_communities == 1  # bridge still there


def test_delete_max_with_threshold_above_max_is_noop():
    g, _ = bridged_cliques()
    cfg = nc.DetectionConfig(method="AFRC3", direction="delete-max", threshold=1000.0)
    assert nc.detect_communities(g, cfg).deletions == []


def test_delete_max_with_threshold_below_min_removes_everything():
    g, _ = bridged_cliques()
    cfg = nc.DetectionConfig(method="FRC", direction="delete-max", threshold=-1000.0)
    result = nc.detect_communities(g, cfg)
    assert len(result.deletions) == g.num_edges
    assert result.partition.num_communities == g.num_vertices


def test_terminates_within_edge_budget():
    g = nc.erdos_renyi(12, 0.5, seed=0)
    cfg = nc.DetectionConfig(method="FRC", direction="delete-min", threshold=1000.0)
    result = nc.detect_communities(g, cfg)
    assert result.iterations <= g.num_edges


def test_max_deletions_cap():
    g, _ = bridged_cliques()
    cfg = nc.DetectionConfig(
        method="FRC", direction="delete-max", threshold=-1000.0, max_deletions=3
    )
    assert len(nc.detect_communities(g, cfg).deletions) == 3


def test_determinism():
    g, _ = nc.sbm(4, 8, 0.8, 0.1, seed=3)
    cfg = nc.DetectionConfig(
        method="AFRC3", direction="delete-min", threshold="auto", seed=11
    )
    a = nc.detect_communities(g, cfg)
    b = nc.detect_communities(g, cfg)
    assert a.deletions == b.deletions
    assert a.threshold_used == b.threshold_used
    assert a.partition == b.partition


def test_tie_breaking_is_seeded():
    # C6: every edge has the same curvature, so each deletion is a pure
    # tie-break; sequences must be reproducible per seed
    g = nc.Graph([(i, (i + 1) % 6) for i in range(6)])
    runs = {}
    for seed in (0, 1, 2, 3):
        cfg = nc.DetectionConfig(
            method="FRC", direction="delete-max", threshold=-10.0,
            seed=seed, max_deletions=3,
        )
        runs[seed] = nc.detect_communities(g, cfg).deletions
        assert runs[seed] == nc.detect_communities(g, cfg).deletions
    assert len({tuple(r) for r in runs.values()}) > 1


def test_auto_threshold_on_constant_values_stops_immediately():
    # two disjoint cliques: one distinct curvature value, nothing to split
    g = nc.Graph(clique(range(5)) + clique(range(5, 10)))
    truth = nc.Partition({v: 0 if v < 5 else 1 for v in range(10)})
    for method in ("FRC", "AFRC3", "ORC"):
        for direction in ("delete-max", "delete-min"):
            cfg = nc.DetectionConfig(method=method, direction=direction,
                                     threshold="auto", seed=0)
            result = nc.detect_communities(g, cfg)
            assert result.deletions == []
            assert nc.accuracy(result.partition, truth) == 1.0


def test_auto_threshold_needs_edges():
    g = nc.Graph(vertices=[0, 1, 2])
    cfg = nc.DetectionConfig(method="FRC", direction="delete-min", threshold="auto")
    with pytest.raises(ValueError):
        nc.detect_communities(g, cfg)


def test_sbm_detection_afrc3():
    # smoke test of the auto-threshold path; the statistical behavior over
    # many seeds is exercised by the acceptance suite
    g, truth = nc.sbm(5, 15, 0.7, 0.05, seed=1)
    cfg = nc.DetectionConfig(method="AFRC3", direction="delete-min", threshold="auto")
    result = nc.detect_communities(g, cfg)
    assert nc.accuracy(result.partition, truth) >= 0.8


def test_config_validation():
    with pytest.raises(ValueError):
        nc.DetectionConfig(method="bogus", direction="delete-min")
    with pytest.raises(ValueError):
        nc.DetectionConfig(method="FRC", direction="sideways")
    with pytest.raises(ValueError):
        nc.DetectionConfig(method="FRC", direction="delete-min", threshold="later")
    with pytest.raises(ValueError):
        nc.DetectionConfig(method="FRC", direction="delete-min", threshold=float("nan"))
    with pytest.raises(ValueError):
        nc.DetectionConfig(method="FRC", direction="delete-min", max_deletions=-1)
    cfg = nc.DetectionConfig(method="afrc4", direction="delete-max")
    assert cfg.method == "AFRC4"


def _scratch_vector(g, method):
    if method == "FRC":
        return nc.frc_all(g)
    if method == "ORC":
        return nc.orc_all(g)
    return nc.afrc_all(g, int(method[-1]))


@pytest.mark.parametrize("method", ["FRC", "AFRC3", "AFRC4", "AFRC5", "ORC"])
def test_incremental_matches_scratch(method):
    g, _ = nc.sbm(2, 8, 0.75, 0.25, seed=5)
    tol = 1e-9 if method == "ORC" else 0.0
    checks = []

    def observer(deleted, values, residual):
        scratch = _scratch_vector(residual, method)
        assert set(values) == set(scratch.values)
        for e, v in values.items():
            assert abs(v - scratch.values[e]) <= tol
        checks.append(deleted)

    # force a long run so deletions cross community boundaries and cycles
    cfg = nc.DetectionConfig(
        method=method, direction="delete-max", threshold=-1e9, max_deletions=20
    )
    nc.detect_communities(g, cfg, on_step=observer)
    assert len(checks) == 20


def test_accuracy_exact():
    truth = nc.Partition({0: 0, 1: 0, 2: 1, 3: 1})
    assert nc.accuracy(truth, truth) == 1.0


def test_accuracy_single_blob_zero():
    truth = nc.Partition({v: v % 10 for v in range(20)})
    detected = nc.Partition({v: 0 for v in range(20)})
    assert nc.accuracy(detected, truth) == 0.0


def test_accuracy_partial():
    # 9 of 10 communities recovered, one split in half
    truth = nc.Partition({v: v // 4 for v in range(40)})
    labels = {}
    for v in range(40):
        if v // 4 == 9:
            labels[v] = 9 if v % 4 < 2 else 10
        else:
            labels[v] = v // 4
    assert nc.accuracy(nc.Partition.from_labels(labels), truth) == 0.9


def test_accuracy_label_permutation_invariant():
    truth = nc.Partition({0: 0, 1: 0, 2: 1, 3: 1})
    detected = nc.Partition.from_labels({0: 7, 1: 7, 2: 3, 3: 3})
    assert nc.accuracy(detected, truth) == 1.0


def test_accuracy_vertex_mismatch():
    with pytest.raises(ValueError):
        nc.accuracy(nc.Partition({0: 0}), nc.Partition({1: 0}))


def test_result_serializes():
    g, truth = bridged_cliques()
    cfg = nc.DetectionConfig(method="AFRC3", direction="delete-min", threshold=0.0)
    d = nc.detect_communities(g, cfg).to_dict()
    assert d["iterations"] == 1
    assert d["deletions"] == [[0, 5]]
    assert d["threshold_used"] == 0.0
    assert set(d["partition"]) == {str(v) for v in range(10)}
