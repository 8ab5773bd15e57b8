"""Graph container, BFS, metrics, bridge finding, and the text format."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import arbitrary_graphs, bridges_by_removal, floyd_warshall, girth_by_edge_removal
from orientdiam.errors import GraphFormatError
from orientdiam.generators import complete_graph, cycle_graph, petersen_graph
from orientdiam.graph import (
    UNREACHABLE,
    Graph,
    ball,
    bfs_distances,
    bridges,
    diameter,
    eccentricity,
    edge_key,
    format_graph,
    girth,
    is_bridgeless_connected,
    min_degree,
    parse_graph,
    shortest_path_between,
)

P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])


def test_graph_basics():
    g = Graph(4, [(0, 1), (2, 1), (0, 3)])
    assert g.n == 4 and g.m == 3
    assert g.neighbors(1) == (0, 2)
    assert g.degree(0) == 2
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(1, 3)
    assert g.edges() == [(0, 1), (0, 3), (1, 2)]


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(-1, [])


def test_edge_key_orders_endpoints():
    assert edge_key(5, 2) == (2, 5)
    assert edge_key(2, 5) == (2, 5)


def test_bfs_distances_cycle():
    g = cycle_graph(6)
    assert bfs_distances(g, (0,)) == [0, 1, 2, 3, 2, 1]


def test_bfs_distances_excluded_edge():
    g = cycle_graph(6)
    d = bfs_distances(g, (0,), excluded=((0, 1),))
    assert d[1] == 5


def test_bfs_distances_multisource():
    assert bfs_distances(P4, (0, 3)) == [0, 1, 1, 0]


def test_bfs_distances_blocked_vertices():
    d = bfs_distances(P4, (0,), blocked=(2,))
    assert d[3] == UNREACHABLE and d[1] == 1


def test_shortest_path_lexicographic():
    g = cycle_graph(6)
    assert shortest_path_between(g, (0,), (3,)) == [0, 1, 2, 3]
    assert shortest_path_between(g, (0,), (4,)) == [0, 5, 4]


def test_shortest_path_prefers_smallest_source():
    g = cycle_graph(6)
    assert shortest_path_between(g, (0, 2), (1,)) == [0, 1]


def test_diameter_frozen_values():
    assert diameter(cycle_graph(8)) == 4
    assert diameter(complete_graph(5)) == 1
    assert diameter(petersen_graph()) == 2
    assert diameter(P4) == 3


def test_eccentricity():
    assert eccentricity(cycle_graph(8), 0) == 4
    assert eccentricity(P4, 1) == 2


def test_girth_frozen_values():
    assert girth(complete_graph(4)) == 3
    assert girth(cycle_graph(7)) == 7
    assert girth(petersen_graph()) == 5
    assert girth(P4) == UNREACHABLE


def test_ball_with_and_without_removed_edges():
    g = cycle_graph(6)
    assert ball(g, 0, 2) == {0, 1, 2, 4, 5}
    assert ball(g, 0, 2, excluded=[(0, 1)]) == {0, 4, 5}
    assert ball(g, 0, 0) == {0}


def test_bridges_frozen_values():
    assert bridges(P4) == {(0, 1), (1, 2), (2, 3)}
    assert bridges(cycle_graph(6)) == set()
    bowtie = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert bridges(bowtie) == set()


def test_is_bridgeless_connected():
    assert is_bridgeless_connected(cycle_graph(5))
    assert not is_bridgeless_connected(P4)
    assert not is_bridgeless_connected(Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_min_degree():
    assert min_degree(petersen_graph()) == 3
    assert min_degree(P4) == 1


def test_parse_format_round_trip():
    g = petersen_graph()
    assert parse_graph(format_graph(g)) == g
    text = "# a comment\n3 2\n0 1 # trailing\n1 2\n"
    h = parse_graph(text)
    assert h == Graph(3, [(0, 1), (1, 2)])


def test_parse_rejects_malformed_input():
    for text in ["", "garbage", "3 1\n0 1\n1 2", "3 2\n0 1", "2 1\n0 2", "2 1\n0 0", "2 2\n0 1\n1 0"]:
        with pytest.raises(GraphFormatError):
            parse_graph(text)


@settings(max_examples=150, deadline=None)
@given(arbitrary_graphs())
def test_bfs_matches_floyd_warshall(g):
    ref = floyd_warshall(g)
    for s in range(g.n):
        assert bfs_distances(g, (s,)) == ref[s]


@settings(max_examples=100, deadline=None)
@given(arbitrary_graphs())
def test_diameter_matches_floyd_warshall(g):
    ref = floyd_warshall(g)
    assert diameter(g) == max(max(row) for row in ref)


@settings(max_examples=100, deadline=None)
@given(arbitrary_graphs(max_n=8))
def test_girth_matches_edge_removal_reference(g):
    assert girth(g) == girth_by_edge_removal(g)


@settings(max_examples=100, deadline=None)
@given(arbitrary_graphs(max_n=8))
def test_bridges_match_removal_reference(g):
    assert bridges(g) == bridges_by_removal(g)


@settings(max_examples=80, deadline=None)
@given(arbitrary_graphs())
def test_shortest_path_length_matches_distance(g):
    d = bfs_distances(g, (0,))
    for t in range(g.n):
        if d[t] == UNREACHABLE:
            continue
        path = shortest_path_between(g, (0,), (t,))
        assert len(path) == d[t] + 1
        assert path[0] == 0 and path[-1] == t
        for a, b in zip(path, path[1:]):
            assert g.has_edge(a, b)
