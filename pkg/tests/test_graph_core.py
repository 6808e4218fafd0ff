from collections import Counter
from itertools import combinations

import networkx as nx
import pytest

from errors import InputError
from graph_core import (
    Cycle,
    LabelingMap,
    SimpleGraph,
    canonical_cycle,
    complete_graph,
    cycle_graph,
    cycles_avoiding,
    cycles_by_length,
    derived_twelve_cycle_labeling,
    distance,
    edge_list_text,
    enumerate_cycles,
    girth,
    graph_digest,
    parse_edge_list,
    path_graph,
    petersen_graph,
    read_edge_list,
    removal_component_sizes,
    rewire_edge,
    twelve_cycle_labelings,
    vertex_connectivity_at_least,
    write_edge_list,
)


def test_heawood_is_cubic_bipartite_on_14_vertices(heawood):
    assert heawood.vertex_count == 14
    assert heawood.edge_count == 21
    assert all(heawood.degree(v) == 3 for v in range(14))
    assert nx.is_bipartite(heawood.nx_graph)


def test_heawood_matches_networkx_heawood_graph(heawood):
    assert nx.is_isomorphic(heawood.to_networkx(), nx.heawood_graph())


@pytest.mark.parametrize("k, expected", [(3, 0), (4, 0), (5, 0), (6, 28), (12, 56), (14, 24)])
def test_heawood_cycle_census(heawood, k, expected):
    cycles = enumerate_cycles(heawood, k)
    assert len(cycles) == expected
    assert len(set(cycles)) == expected
    assert all(len(c) == k and c.is_cycle_of(heawood) for c in cycles)


@pytest.mark.parametrize("graph, k, expected", [
    (complete_graph(4), 3, 4),
    (complete_graph(4), 4, 3),
    (cycle_graph(5), 5, 1),
    (petersen_graph(), 5, 12),
    (petersen_graph(), 6, 10),
    (path_graph(5), 3, 0),
])
def test_cycle_counts_of_small_graphs(graph, k, expected):
    assert len(enumerate_cycles(graph, k)) == expected


def test_cycle_counts_agree_with_networkx(heawood):
    lengths = Counter(len(c) for c in nx.simple_cycles(heawood.to_networkx()))
    for k in range(3, 15):
        assert len(enumerate_cycles(heawood, k)) == lengths.get(k, 0)


@pytest.mark.parametrize("k", [2, 15])
def test_cycle_length_out_of_range(heawood, k):
    with pytest.raises(InputError):
        enumerate_cycles(heawood, k)


def test_girth(heawood):
    assert girth(heawood) == 6
    assert girth(petersen_graph()) == 5
    assert girth(path_graph(4)) is None


def test_distance_profile(heawood):
    for v in range(14):
        profile = Counter(distance(heawood, v, u) for u in range(14) if u != v)
        assert profile == {1: 3, 2: 6, 3: 4}
    pairs = [(u, v) for u, v in combinations(range(14), 2) if distance(heawood, u, v) == 3]
    assert len(pairs) == 28


def test_distances_are_symmetric_and_satisfy_the_triangle_inequality(heawood):
    d = heawood.distances
    for u in range(14):
        assert d[u][u] == 0
        for v in range(14):
            assert d[u][v] == d[v][u] == distance(heawood, u, v)
            for w in range(14):
                assert d[u][w] <= d[u][v] + d[v][w]


def test_distance_between_components_raises():
    g = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(InputError):
        distance(g, 0, 3)


@pytest.mark.parametrize("graph, k, expected", [
    (complete_graph(4), 3, True),
    (petersen_graph(), 3, True),
    (cycle_graph(5), 2, True),
    (cycle_graph(5), 3, False),
    (path_graph(4), 2, False),
])
def test_vertex_connectivity(graph, k, expected):
    assert vertex_connectivity_at_least(graph, k) is expected


def test_heawood_is_exactly_3_connected(heawood):
    assert vertex_connectivity_at_least(heawood, 3)
    assert not vertex_connectivity_at_least(heawood, 4)


def test_two_twelve_cycles_avoid_each_distance_3_pair(heawood):
    twelve = enumerate_cycles(heawood, 12)
    for u, v in combinations(range(14), 2):
        if distance(heawood, u, v) == 3:
            assert len(cycles_avoiding(heawood, 12, (u, v), cycles=twelve)) == 2


def test_chord_ends_split_fourteen_cycle():
    assert removal_component_sizes(cycle_graph(14), (0, 5)) == (4, 8)


def test_canonical_cycle_ignores_rotation_and_direction():
    assert Cycle.from_sequence([3, 1, 2]) == Cycle.from_sequence([1, 3, 2])
    assert Cycle.from_sequence([5, 7, 6, 9]).vertices == (5, 7, 6, 9)
    assert Cycle.from_sequence([6, 9, 5, 7]).vertices == (5, 7, 6, 9)


@pytest.mark.parametrize("k", [6, 12, 14])
def test_every_rotation_and_reflection_canonicalises_back(heawood, k):
    for cycle in enumerate_cycles(heawood, k):
        seq = cycle.vertices
        for shift in range(k):
            rotated = seq[shift:] + seq[:shift]
            assert canonical_cycle(rotated) == cycle
            assert canonical_cycle(tuple(reversed(rotated))) == cycle


def test_cycles_by_length(heawood):
    by_length = cycles_by_length(heawood, [6, 12, 14])
    assert {k: len(cs) for k, cs in by_length.items()} == {6: 28, 12: 56, 14: 24}
    assert by_length[12] == enumerate_cycles(heawood, 12)


def test_cycle_rejects_repeated_vertices():
    with pytest.raises(InputError):
        Cycle.from_sequence([1, 2, 1])


def test_simple_graph_validation():
    with pytest.raises(InputError):
        SimpleGraph.from_edges(3, [(0, 0)])
    with pytest.raises(InputError):
        SimpleGraph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        SimpleGraph.from_edges(3, [(0, 3)])


def test_rewire_edge(heawood):
    g = rewire_edge(heawood, (0, 1), (0, 7))
    assert not g.has_edge(0, 1)
    assert g.has_edge(7, 0)
    assert g.edge_count == 21
    with pytest.raises(InputError):
        rewire_edge(heawood, (0, 2), (0, 7))


def test_edge_list_file_round_trip(heawood, tmp_path):
    path = tmp_path / "heawood.txt"
    write_edge_list(heawood, path)
    assert read_edge_list(path) == heawood
    assert edge_list_text(heawood).splitlines()[0] == "1 2"


def test_parse_edge_list_skips_comments_and_blank_lines():
    g = parse_edge_list("# triangle\n1 2\n\n2 3  # closing\n3 1\n")
    assert g == complete_graph(3)


@pytest.mark.parametrize("text", ["1 2 3\n", "1 x\n", "0 1\n"])
def test_parse_edge_list_rejects_bad_lines(text):
    with pytest.raises(InputError):
        parse_edge_list(text)


def test_parse_edge_list_rejects_graphs_above_the_vertex_limit():
    with pytest.raises(InputError):
        parse_edge_list("1 2\n2 3\n3 1\n1 4000\n")
    with pytest.raises(InputError):
        parse_edge_list("1 2\n", vertex_count=100000)
    assert parse_edge_list(edge_list_text(cycle_graph(32))).vertex_count == 32


def test_graph_digest_is_stable_and_sensitive(heawood):
    assert graph_digest(heawood) == graph_digest(parse_edge_list(edge_list_text(heawood)))
    assert graph_digest(heawood) != graph_digest(rewire_edge(heawood, (0, 1), (0, 7)))
    assert len(graph_digest(heawood)) == 64


def test_twelve_cycle_labelings(heawood):
    cycle = enumerate_cycles(heawood, 12)[0]
    labelings = list(twelve_cycle_labelings(heawood, cycle))
    assert len(labelings) == 48
    assert len({l.labels for l in labelings}) == 48
    for labeling in labelings:
        assert sorted(labeling.labels) == sorted([str(i) for i in range(1, 13)] + ["v", "w"])
        on_cycle = [labeling.index_of(str(i)) for i in range(1, 13)]
        assert Cycle.from_sequence(on_cycle) == cycle


def test_derived_labeling_names_off_cycle_pair(heawood):
    labeling = derived_twelve_cycle_labeling(heawood)
    v, w = labeling.index_of("v"), labeling.index_of("w")
    assert distance(heawood, v, w) == 3


def test_labeling_map_lookups():
    labeling = LabelingMap.standard(3)
    assert labeling.label_of(0) == "1"
    assert labeling.index_of("3") == 2
    with pytest.raises(InputError):
        labeling.index_of("4")
    with pytest.raises(InputError):
        LabelingMap(("a", "a"))
