"""Smoke tests for the Python bindings: thin checks that the main operations
are wired through correctly.  The exhaustive testing lives in the C++ suites."""

import pytest

import inertiabound as ib


def test_paley_graph():
    g = ib.paley(17)
    assert g.n == 17
    assert len(g.edges) == 68
    assert g.has_edge(0, 1)
    assert not g.has_edge(0, 3)
    assert all(g.degree(v) == 8 for v in range(17))
    with pytest.raises(ValueError):
        ib.paley(12)


def test_alpha_and_criticality():
    g = ib.paley(17)
    result = ib.alpha(g)
    assert result["alpha"] == 3
    assert len(result["witness"]) == 3
    crit = ib.is_alpha_critical(g)
    assert crit["critical"] is True
    assert crit["witnesses"]["0-1"]


def test_exact_inertia_of_the_published_weighting():
    g = ib.paley(17)
    weights = {1: "30", 2: "-22", 4: "-12", 8: "7"}
    residues = {(x * x) % 17 for x in range(1, 17)}

    def edge_class(u, v):
        d = (u - v) % 17
        return min(d, 17 - d)

    entries = [(u, v, weights[edge_class(u, v)]) for (u, v) in g.edges]
    assert ib.inertia(17, entries) == (13, 4, 0)
    assert ib.inertia_bound(g, entries) == 4
    assert residues == {1, 2, 4, 8, 9, 13, 15, 16}


def test_certify_and_verify_roundtrip():
    g = ib.paley(17)
    result = ib.certify_not_tight(g)
    assert result["verdict"] == "NOT_TIGHT"
    ok, reason = ib.verify_certificate(g, result["certificate"])
    assert ok, reason

    tampered = dict(result["certificate"])
    tampered["alpha"] = 4
    ok, reason = ib.verify_certificate(g, tampered)
    assert not ok


def test_small_graphs_stay_unknown():
    c5 = ib.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    result = ib.certify_not_tight(c5)
    assert result["verdict"] == "UNKNOWN"


def test_symbolic_determinant_and_triangles():
    k3 = ib.Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert ib.symbolic_determinant(k3) == "2*x(0,1)*x(0,2)*x(1,2)"
    assert ib.triangles(k3) == [(0, 1, 2)]


def test_budget_error_is_catchable():
    with pytest.raises(ib.BudgetError):
        ib.alpha(ib.Graph(65, []))


def test_random_search_is_deterministic():
    g = ib.paley(13)
    a = ib.random_edge_search(g, iterations=30, seed=7)
    b = ib.random_edge_search(g, iterations=30, seed=7)
    assert a == b
    assert a["best_gap"] >= 0
