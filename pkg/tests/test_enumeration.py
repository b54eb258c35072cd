from __future__ import annotations

import networkx as nx
import pytest

from supereulerian.enumeration import (
    CONNECTED_COUNTS,
    enumerate_connected,
    graphs_from_source,
    read_graph6_stream,
)
from supereulerian.graph_core import GraphError, canonical_form, graph6_encode, is_connected, xi


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_match_published_sequence(n):
    assert sum(1 for _ in enumerate_connected(n)) == CONNECTED_COUNTS[n]


def test_count_at_eight():
    assert sum(1 for _ in enumerate_connected(8)) == 11117


def test_enumeration_is_connected_and_isomorphism_free():
    for n in range(1, 7):
        gs = list(enumerate_connected(n))
        assert all(is_connected(g) for g in gs)
        assert len({canonical_form(g) for g in gs}) == len(gs)


def test_enumeration_agrees_with_networkx_atlas():
    # the atlas holds every graph on up to 7 vertices
    expected = {}
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() and nx.is_connected(h):
            expected[h.number_of_nodes()] = expected.get(h.number_of_nodes(), 0) + 1
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_connected(n)) == expected[n]


def test_min_xi_filter():
    for n in range(2, 8):
        everything = list(enumerate_connected(n))
        for t in (n - 2, n, n + 2):
            filtered = list(enumerate_connected(n, t))
            assert filtered == [g for g in everything if g.m and xi(g) >= t]
    # an edgeless graph never meets a threshold
    assert list(enumerate_connected(1, 0)) == []


@pytest.mark.parametrize("n", [0, 11, -1])
def test_range_errors(n):
    with pytest.raises(GraphError):
        list(enumerate_connected(n))


def test_external_source_is_filtered():
    lines = [graph6_encode(g) for g in enumerate_connected(5)] + ["B?", "", "C~"]
    got = list(graphs_from_source(4, 5, 5, lines))
    assert all(g.n in (4, 5) and xi(g) >= 5 for g in got)
    assert len(got) == sum(1 for _ in enumerate_connected(5, 5)) + 1
    assert [g.n for g in read_graph6_stream(["A_", "  ", "Bw"])] == [2, 3]
