"""Smoke tests for the Python bindings: the main operations end to end."""

import pytest

import wagon


def cycle(n):
    return wagon.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_basics():
    g = wagon.Graph(4, [(0, 1), (1, 2)])
    assert g.n == 4
    assert g.m == 2
    assert g.adjacent(0, 1)
    assert not g.adjacent(0, 3)
    assert g.neighbours(1) == [0, 2]
    with pytest.raises(ValueError):
        wagon.Graph(2, [(0, 0)])


def test_graph_ops():
    c5 = cycle(5)
    assert wagon.complement(c5).m == 5
    sub = wagon.induced_subgraph(c5, [0, 1, 2, 3])
    assert sub.n == 4 and sub.m == 3
    blown = wagon.multiply_vertex(c5, 0, 2)
    assert blown.n == 6
    assert not wagon.find_induced(blown, wagon.pattern(wagon.PatternKind.TwoK2))


def test_fixture_and_recognition():
    mg = wagon.fixture("mycielski_grotzsch")
    assert (mg.n, mg.m) == (11, 20)
    rep = wagon.check_class(mg, wagon.GraphClass.P3P2DiamondFree)
    assert rep.member
    bad = wagon.Graph(5, [(0, 1), (1, 2), (3, 4)])
    rep = wagon.check_class(bad, wagon.GraphClass.P3P2Free)
    assert not rep.member
    assert sorted(rep.witness.vertices) == [0, 1, 2, 3, 4]
    assert wagon.witness_valid(bad, rep.witness)


def test_exact_oracles():
    mg = wagon.fixture("mycielski_grotzsch")
    assert wagon.max_clique_exact(mg) == [0, 1]
    assert wagon.chromatic_number_exact(mg).chi == 4
    assert wagon.clique_number(wagon.fixture("fig5_base")) == 3


def test_partition_and_claims():
    c5 = cycle(5)
    p = wagon.build_partition(c5, [0, 1])
    assert p.c(1, 2) == [3]
    assert p.i_set(1) == [2]
    assert p.i_set(2) == [4]
    assert wagon.validate_partition(c5, p) is None
    claims = wagon.check_claims(c5, p, wagon.GraphClass.TwoK2DiamondFree)
    assert claims.partition_violation is None
    held = {c.claim: c.holds for c in claims.claims if c.applicable}
    assert held[1] and held[2] and held[3]


def test_bounds_table():
    assert wagon.bound_for_class(wagon.GraphClass.P3P2Free, 2).bound == 4
    assert wagon.bound_for_class(wagon.GraphClass.P3P2Free, 6).bound == 56
    spec = wagon.bound_for_class(wagon.GraphClass.TwoK2DiamondFree, 5)
    assert spec.bound == 5 and spec.perfect


def test_colourers():
    f5 = wagon.fixture("fig5_base")
    traced = wagon.colour_2k2_diamond(f5)
    assert traced.colouring.colours_used == 3
    assert wagon.verify_colouring(f5, traced.colouring).proper

    mg = wagon.fixture("mycielski_grotzsch")
    td = wagon.colour_p3p2_diamond(mg)
    assert td.colouring.colours_used <= 4
    assert td.case_trace.startswith("omega=2")
    assert wagon.verify_colouring(mg, td.colouring).proper

    col = wagon.colour_p3p2(mg)
    assert wagon.verify_colouring(mg, col).proper

    with pytest.raises(ValueError):
        wagon.colour_p3p2(wagon.Graph(5, [(0, 1), (1, 2), (3, 4)]))


def test_perfectness():
    f5 = wagon.fixture("fig5_base")
    rep = wagon.is_perfect_small(f5, wagon.PerfectnessMode.HoleSearch)
    assert not rep.perfect
    assert rep.witness.vertices == [0, 1, 2, 3, 4]
    with pytest.raises(RuntimeError):
        wagon.is_perfect_small(wagon.Graph(65), wagon.PerfectnessMode.HoleSearch)


def test_harness_roundtrip():
    cfg = wagon.SweepConfig()
    cfg.cls = wagon.GraphClass.TwoK2DiamondFree
    cfg.n_min, cfg.n_max = 1, 6
    cfg.mode = wagon.SweepMode.EnumerateAll
    rep = wagon.run_suite(cfg)
    assert rep.passed()
    assert rep.instances_tested > 0
    assert "summary" in rep.records()


def test_blow_up_family():
    for k in (2, 3):
        g = wagon.fig5_blow_up(k)
        assert wagon.check_class(g, wagon.GraphClass.TwoK2DiamondFree).member
        assert wagon.colour_2k2_diamond(g).colouring.colours_used == 3


def test_dot_and_files(tmp_path):
    f5 = wagon.fixture("fig5_base")
    assert "graph g {" in wagon.to_dot(f5)
    path = tmp_path / "f5.col"
    wagon.write_dimacs(f5, str(path))
    back = wagon.read_graph(str(path))
    assert back.n == 6 and back.m == 8
