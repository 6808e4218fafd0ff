from fractions import Fraction

import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from errors import InputError
from graph_core import (
    Cycle,
    LabelingMap,
    SimpleGraph,
    complete_graph,
    cycle_graph,
    enumerate_cycles,
    path_graph,
    petersen_graph,
)
from perm_core import A4, PGL27, Perm, PermGroup, conjugacy_classes, element_order, iso_type, order_spectrum, parse_perm
from symmetry import (
    BurnsideQuotient,
    Domain,
    automorphism_group,
    burnside_orbit_count,
    cycle_action_descriptor,
    fixed_points,
    induced_action,
    is_automorphism,
    is_transitive,
    orbit_partition,
    override_by_order,
    pointwise_fixed_edges,
)

STANDARD_14 = LabelingMap.standard(14)
REFLECTION = parse_perm("(1,14)(2,13)(3,12)(4,11)(5,10)(6,9)(7,8)", STANDARD_14)
ROTATION = parse_perm("(1,3,5,7,9,11,13)(2,4,6,8,10,12,14)", STANDARD_14)
PRINTED_ROTATION = parse_perm("(1,3,5,7,9,11,13)(2,4,6,8,10,12)", STANDARD_14)


def test_heawood_automorphism_group(aut):
    assert aut.order == 336
    assert order_spectrum(aut) == {1: 1, 2: 49, 3: 56, 4: 42, 6: 56, 7: 48, 8: 84}
    assert iso_type(aut) == PGL27
    assert len(conjugacy_classes(aut)) == 9


def test_automorphisms_match_networkx(heawood, aut):
    graph = heawood.to_networkx()
    expected = {
        Perm(tuple(mapping[v] for v in range(14)))
        for mapping in GraphMatcher(graph, graph).isomorphisms_iter()
    }
    assert expected == set(aut.elements)


@pytest.mark.parametrize("graph, order", [
    (petersen_graph(), 120),
    (complete_graph(4), 24),
    (complete_graph(3), 6),
    (cycle_graph(6), 12),
    (path_graph(4), 2),
    (SimpleGraph.from_edges(4, [(0, 1), (2, 3)]), 8),
    (SimpleGraph(3, frozenset()), 6),
])
def test_automorphism_group_orders(graph, order):
    G = automorphism_group(graph)
    assert G.order == order
    assert all(is_automorphism(p, graph) for p in G.elements)
    assert PermGroup(G.generators, graph.vertex_count).order == order


def test_automorphism_search_vertex_limit():
    with pytest.raises(InputError):
        automorphism_group(cycle_graph(33))


def test_explicit_permutations(heawood):
    assert is_automorphism(REFLECTION, heawood)
    assert is_automorphism(ROTATION, heawood)
    assert not is_automorphism(PRINTED_ROTATION, heawood)


def test_induced_action_rejects_non_automorphisms(heawood):
    with pytest.raises(InputError):
        induced_action(PermGroup([PRINTED_ROTATION]), heawood, Domain.VERTICES)
    with pytest.raises(InputError):
        induced_action(PermGroup([ROTATION]), heawood, Domain.CYCLES)


def test_perm_of_requires_group_membership(heawood):
    action = induced_action(PermGroup([ROTATION]), heawood, "vertices")
    assert action.perm_of(ROTATION) == ROTATION
    with pytest.raises(InputError):
        action.perm_of(REFLECTION)


def test_transitivity(aut, context):
    assert is_transitive(aut, context.vertex_action)
    assert is_transitive(aut, context.edge_action)
    assert is_transitive(aut, context.cycle_action(12))
    assert is_transitive(aut, context.cycle_action(14))
    rotations = PermGroup([ROTATION])
    assert not is_transitive(rotations, induced_action(rotations, context.graph, Domain.VERTICES))


def test_orbits_of_a_single_rotation(heawood):
    action = induced_action(PermGroup([ROTATION]), heawood, Domain.EDGES)
    orbits = orbit_partition(ROTATION, action)
    assert sorted(len(o) for o in orbits) == [7, 7, 7]
    assert orbits == sorted(orbits, key=lambda o: o[0])


def test_fixed_points_on_cycles(context):
    outer = Cycle.from_sequence(range(14))
    invariant = fixed_points(ROTATION, context.cycle_action(14))
    assert outer in invariant
    assert len(invariant) == 3


def test_pointwise_fixed_edges(heawood):
    assert len(pointwise_fixed_edges(Perm.identity(14), heawood)) == 21
    assert pointwise_fixed_edges(ROTATION, heawood) == []


def test_burnside_matches_orbit_count_for_every_subgroup(context, census):
    actions = [
        context.vertex_action,
        context.edge_action,
        context.cycle_action(6),
        context.cycle_action(12),
        context.cycle_action(14),
    ]
    for record in census:
        H = record.as_group()
        for action in actions:
            quotient = burnside_orbit_count(H, action)
            assert quotient.is_integral
            assert quotient.value == len(orbit_partition(H, action))


def test_burnside_override_gives_thirty_twelfths(context, census):
    H = next(r for r in census if r.iso_type == A4).as_group()
    quotient = burnside_orbit_count(H, context.vertex_action, override_by_order(H, {1: 14, 2: 0, 3: 2}))
    assert quotient == BurnsideQuotient(30, 12)
    assert str(quotient) == "30/12"
    assert quotient.value == Fraction(5, 2)
    assert not quotient.is_integral


def test_burnside_override_must_cover_the_group(context, census):
    H = next(r for r in census if r.iso_type == A4).as_group()
    with pytest.raises(InputError):
        burnside_orbit_count(H, context.vertex_action, {})
    with pytest.raises(InputError):
        override_by_order(H, {1: 14, 3: 2})


def test_cycle_action_descriptor():
    outer = Cycle.from_sequence(range(14))
    rotation = cycle_action_descriptor(ROTATION, outer)
    assert (rotation.kind, rotation.step, rotation.length) == ("rotation", 2, 14)
    assert rotation.turns == Fraction(1, 7)
    assert cycle_action_descriptor(REFLECTION, outer).kind == "reflection"
    assert cycle_action_descriptor(Perm.identity(14), outer).kind == "identity"


def test_cycle_action_descriptor_rejects_moved_cycles(heawood):
    hexagon = enumerate_cycles(heawood, 6)[0]
    with pytest.raises(InputError):
        cycle_action_descriptor(ROTATION, hexagon)


def test_order_three_elements_rotate_their_twelve_cycles(aut, context):
    for p in aut.elements:
        if element_order(p) != 3:
            continue
        for c in fixed_points(p, context.cycle_action(12)):
            assert cycle_action_descriptor(p, c).step in (4, 8)


@pytest.mark.parametrize("k", [6, 12, 14])
def test_cycle_action_is_a_homomorphism(aut, context, k):
    action = context.cycle_action(k)
    sample = aut.elements[::7]
    for p in sample:
        for q in sample:
            assert action.perm_of(p * q) == action.perm_of(p) * action.perm_of(q)
            for x in action.points:
                assert action.act(p * q, x) == action.act(p, action.act(q, x))


def test_vertex_and_edge_actions_are_homomorphisms(aut, context):
    sample = aut.elements[::11]
    for action in (context.vertex_action, context.edge_action):
        for p in sample:
            for q in sample:
                assert action.perm_of(p * q) == action.perm_of(p) * action.perm_of(q)
