import itertools

import pytest

import okforce as ok


def path(n):
    return ok.Graph(n, [(i, i + 1) for i in range(n - 1)])


def brute_forcing_number(d, k):
    for size in range(1, d.n + 1):
        for s in itertools.combinations(range(d.n), size):
            if ok.is_forcing_set(d, list(s), k):
                return size
    return d.n


def test_graph_roundtrip():
    g = ok.Graph(4, [(2, 3), (1, 0), (1, 2)])
    assert g.edges == [(0, 1), (1, 2), (2, 3)]
    assert ok.parse_ug(ok.format_ug(g)).edges == g.edges
    d = ok.forward_orientation(g)
    assert d.bits == "111"
    assert ok.parse_dg(ok.format_dg(d)).arcs == d.arcs


def test_forward_path_forces_from_its_source():
    d = ok.forward_orientation(path(6))
    assert ok.is_forcing_set(d, [0], 1)
    assert not ok.is_forcing_set(d, [1], 1)
    trace = ok.closure(d, [0], 1)
    assert len(trace["rounds"]) == 5
    assert ok.forcing_number(d, 1)["value"] == 1


@pytest.mark.parametrize("n", range(2, 9))
def test_path_extremes(n):
    g = path(n)
    assert ok.mof(g, 1) == 1
    assert ok.MOF(g, 1) == (n + 1) // 2


def test_solver_matches_subset_search():
    g = ok.generate("gnp", [7], p=0.4, seed=3)
    for seed in range(5):
        d = ok.random_orientation(g, seed)
        for k in (1, 2):
            assert ok.forcing_number(d, k)["value"] == brute_forcing_number(d, k)


def test_invariants_on_cycle():
    c5 = ok.generate("cycle", [5])
    assert ok.independence_number(c5)["value"] == 2
    assert ok.clique_number(c5)["value"] == 2
    assert ok.path_cover_number(c5)["value"] == 1


def test_greedy_certificate():
    d = ok.generate("greedy_tree", [3, 2])
    cert = ok.greedy_forcing_set(d, 1)
    assert ok.is_forcing_set(d, cert["set"], 1)
    assert len(cert["set"]) == 9


def test_errors_map_to_exceptions():
    with pytest.raises(ok.ParameterError):
        ok.Graph(3, [(0, 0)])
    with pytest.raises(ok.Inapplicable):
        ok.greedy_forcing_set(ok.forward_orientation(path(3)), 2)


def test_small_suite_passes():
    for check in ok.verify(["C1", "C3"], nmax=4, random_cases=20):
        assert check["passed"], check
