from __future__ import annotations

from math import comb

import networkx as nx
import pytest

import oracles
from conftest import named, small_graphs
from supereulerian.graph_core import Graph, GraphError, canonical_form
from supereulerian.linegraph import is_hamiltonian, k_hamiltonian_check, line_graph
from supereulerian.trails import has_dominating_closed_trail


def _is_cycle(g: Graph, cycle) -> bool:
    return (cycle[0] == cycle[-1] and sorted(cycle[:-1]) == list(range(g.n))
            and all(g.has_edge(a, b) for a, b in zip(cycle, cycle[1:])))


@pytest.mark.parametrize("base,expected", [("K13", "K3"), ("P4", "P3"), ("C5", "C5")])
def test_line_graph_examples(base, expected):
    assert canonical_form(line_graph(named(base)).lg) == canonical_form(named(expected))


def test_line_graph_of_edgeless_graph_is_an_error():
    with pytest.raises(GraphError):
        line_graph(Graph.empty(3))


def test_line_graph_counts_and_networkx():
    for g in small_graphs(6, 2):
        lmap = line_graph(g)
        assert lmap.lg.n == g.m
        assert lmap.lg.m == sum(comb(d, 2) for d in g.degrees())
        ref = nx.line_graph(nx.Graph(g.edges()))
        index = {e: i for i, e in enumerate(lmap.edge_of)}
        expected = {tuple(sorted((index[tuple(sorted(a))], index[tuple(sorted(b))]))) for a, b in ref.edges()}
        assert set(lmap.lg.edges()) == expected


def test_hamiltonian_examples():
    cycle = is_hamiltonian(named("K3"))
    assert _is_cycle(named("K3"), cycle)
    assert is_hamiltonian(named("K13")) is None
    assert is_hamiltonian(named("petersen")) is None
    assert is_hamiltonian(named("K2")) is None
    assert is_hamiltonian(named("P3")) is None


def test_hamiltonian_matches_brute_force():
    for g in small_graphs(7, 3):
        cycle = is_hamiltonian(g)
        assert (cycle is not None) == oracles.hamiltonian(g), g
        if cycle is not None:
            assert _is_cycle(g, cycle)


def test_hamiltonian_on_line_graphs_matches_brute_force():
    # line graphs are where the search runs in practice; brute force up to 8 line-graph vertices
    for g in small_graphs(6, 3):
        if g.m <= 8:
            lg = line_graph(g).lg
            assert (is_hamiltonian(lg) is not None) == oracles.hamiltonian(lg)


def test_dominating_trail_equivalence_up_to_six():
    for g in small_graphs(6, 4):
        assert (has_dominating_closed_trail(g) is not None) == (is_hamiltonian(line_graph(g).lg) is not None)


def test_three_edge_boundary_is_logged_not_asserted():
    # the star K1,3 has 4 vertices and the trivial dominating trail; its line graph is K3
    assert has_dominating_closed_trail(named("K13")) is not None
    assert is_hamiltonian(line_graph(named("K13")).lg) is not None
    # P3 (2 edges) has a dominating trail but L = K2 is not hamiltonian: outside every hypothesis
    assert has_dominating_closed_trail(named("P3")) is not None
    assert is_hamiltonian(line_graph(named("P3")).lg) is None


def test_k_hamiltonian_examples():
    res = k_hamiltonian_check(named("K5"), 3)
    assert res.ok and not res.disagreements and res.self_test_failures == 0
    assert res.checked == sum(comb(10, i) for i in range(4))
    assert k_hamiltonian_check(named("K13"), 0).ok
    res = k_hamiltonian_check(named("P4"), 0)
    assert not res.ok and res.failing == [] and res.failing_vertices == []
    with pytest.raises(GraphError):
        k_hamiltonian_check(named("K3"), -1)


def test_k_hamiltonian_reports_first_failure():
    res = k_hamiltonian_check(named("C5"), 1)
    assert not res.ok and len(res.failing) == 1
    assert res.failing[0] == line_graph(named("C5")).edge_of[res.failing_vertices[0]]
