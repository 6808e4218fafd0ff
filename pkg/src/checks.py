"""Machine-checkable claims about the Heawood graph, one registered function per check.

Each check receives a shared `CheckContext` (graph, automorphism group, cycle
censuses, actions and subgroup census, all computed once) and an `Evidence`
collector. A check passes only if every `require` it made held.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Any, Callable, Optional

from pydantic import BaseModel, Field

from config import config
from errors import InputError
from graph_core import (
    Cycle,
    LabelingMap,
    SimpleGraph,
    cycles_avoiding,
    cycles_by_length,
    enumerate_cycles,
    heawood_standard,
    removal_component_sizes,
    twelve_cycle_labelings,
    vertex_connectivity_at_least,
)
from perm_core import (
    A4,
    FROBENIUS_21,
    FROBENIUS_42,
    PGL27,
    PSL27,
    S4,
    TRIVIAL,
    UNRECOGNIZED,
    Perm,
    PermGroup,
    SubgroupRecord,
    element_order,
    enumerate_subgroups,
    find_isomorphism,
    format_perm,
    generate_group,
    iso_type,
    isotype_sort_key,
    make_dihedral,
    make_dihedral_product,
    model_group,
    odd_order_elements_commute,
    order_spectrum,
    parse_perm,
    subgroup_conjugacy_classes,
    subgroups_within,
)
from symmetry import (
    Domain,
    GroupAction,
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

logging.basicConfig(level=getattr(logging, config.LOG_LEVEL), format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 5

EXPECTED_CYCLE_COUNTS = {3: 0, 4: 0, 5: 0, 6: 28, 12: 56, 14: 24}
EXPECTED_SPECTRUM_ORDERS = {1, 2, 3, 4, 6, 7, 8}
EXPECTED_PROPER_SUBGROUP_TYPES = frozenset({
    "Z2", "Z3", "Z4", "Z6", "Z7", "Z8",
    "D2", "D3", "D4", "D6", "D7", "D8",
    A4, S4, FROBENIUS_21, FROBENIUS_42, PSL27,
})

REFLECTION_NOTATION = "(1,14)(2,13)(3,12)(4,11)(5,10)(6,9)(7,8)"
PRINTED_ROTATION_NOTATION = "(1,3,5,7,9,11,13)(2,4,6,8,10,12)"
CORRECTED_ROTATION_NOTATION = "(1,3,5,7,9,11,13)(2,4,6,8,10,12,14)"
GLIDE_NOTATION = "(v,w)(10,11,6,7,2,3)(1,4,9,12,5,8)"
GLIDE_HEXAGON = ("10", "11", "6", "7", "2", "3")


class CheckStatus(str, Enum):
    VERIFIED = "VERIFIED"
    FAILED = "FAILED"


class CheckResult(BaseModel):
    id: str
    title: str
    statement: str
    claim: str
    paper_ref: str
    status: CheckStatus
    witnesses: dict[str, Any] = Field(default_factory=dict)
    counterexamples: list[dict[str, Any]] = Field(default_factory=list)
    failed_assertions: int = 0


class Evidence:
    """Collects witnesses and failed assertions while a check runs."""

    def __init__(self):
        self.witnesses: dict[str, Any] = {}
        self.failures: list[dict[str, Any]] = []

    def record(self, key: str, value: Any) -> None:
        self.witnesses[key] = value

    def require(self, condition: bool, assertion: str, **counterexample: Any) -> bool:
        if not condition:
            self.failures.append({"assertion": assertion, **counterexample})
        return bool(condition)

    @property
    def passed(self) -> bool:
        return not self.failures


class CheckContext:
    """Shared, lazily computed inputs of every check for one graph."""

    def __init__(self, graph: Optional[SimpleGraph] = None):
        self.graph = graph if graph is not None else heawood_standard()
        self._cycles: dict[int, list[Cycle]] = {}
        self._cycle_actions: dict[int, GroupAction] = {}

    @cached_property
    def labeling(self) -> LabelingMap:
        return LabelingMap.standard(self.graph.vertex_count)

    def cycles(self, k: int) -> list[Cycle]:
        if k not in self._cycles:
            n = self.graph.vertex_count
            self._cycles[k] = enumerate_cycles(self.graph, k) if 3 <= k <= n else []
        return self._cycles[k]

    @cached_property
    def group(self) -> PermGroup:
        return automorphism_group(self.graph)

    @cached_property
    def spectrum(self) -> dict[int, int]:
        return order_spectrum(self.group)

    @cached_property
    def census(self) -> list[SubgroupRecord]:
        return enumerate_subgroups(self.group)

    @cached_property
    def vertex_action(self) -> GroupAction:
        return induced_action(self.group, self.graph, Domain.VERTICES)

    @cached_property
    def edge_action(self) -> GroupAction:
        return induced_action(self.group, self.graph, Domain.EDGES)

    def cycle_action(self, k: int) -> GroupAction:
        if k not in self._cycle_actions:
            self._cycle_actions[k] = induced_action(self.group, self.graph, Domain.CYCLES, k, cycles=self.cycles(k))
        return self._cycle_actions[k]

    def elements_of_order(self, k: int) -> list[Perm]:
        return [p for p, m in zip(self.group.elements, self.group.element_orders) if m == k]

    def involutions(self) -> list[Perm]:
        return self.elements_of_order(2)

    def warm(self) -> None:
        """Compute the shared inputs up front so concurrent checks only read them."""
        n = self.graph.vertex_count
        pending = [k for k in EXPECTED_CYCLE_COUNTS if 3 <= k <= n and k not in self._cycles]
        self._cycles.update(cycles_by_length(self.graph, pending))
        self.group.cayley_table
        self.vertex_action
        self.edge_action
        self.cycle_action(12)
        self.cycle_action(14)
        self.census
        logger.info(f"Context ready: |Aut| = {self.group.order}, {len(self.census)} subgroups")

    def fmt(self, p: Perm) -> str:
        return format_perm(p, self.labeling)

    def fmt_cycle(self, c: Cycle) -> str:
        return self.labeling.format_cycle(c)

    def fmt_vertices(self, vertices) -> list[str]:
        return [self.labeling.label_of(v) for v in vertices]

    def fmt_edge(self, edge) -> str:
        u, v = edge
        return f"{self.labeling.label_of(u)}-{self.labeling.label_of(v)}"


CheckFn = Callable[[CheckContext, Evidence], None]


@dataclass(frozen=True)
class CheckDefinition:
    check_id: str
    title: str
    statement: str
    claim: str
    run: CheckFn
    paper_ref: str = ""


CHECKS: dict[str, CheckDefinition] = {}


def check(check_id: str, title: str, statement: str, claim: str, paper_ref: str) -> Callable[[CheckFn], CheckFn]:
    def register(fn: CheckFn) -> CheckFn:
        CHECKS[check_id] = CheckDefinition(check_id, title, statement, claim, fn, paper_ref)
        return fn
    return register


def check_ids() -> list[str]:
    return sorted(CHECKS, key=lambda c: int(c[1:]))


def run_check(check_id: str, context: Optional[CheckContext] = None) -> CheckResult:
    definition = CHECKS.get(check_id)
    if definition is None:
        raise InputError(f"unknown check id {check_id!r}; known: {', '.join(check_ids())}")
    context = context if context is not None else CheckContext()
    evidence = Evidence()
    try:
        definition.run(context, evidence)
    except Exception as e:
        logger.error(f"{check_id} raised {type(e).__name__}: {e}")
        evidence.require(False, "check completed without raising", error=f"{type(e).__name__}: {e}")
    status = CheckStatus.VERIFIED if evidence.passed else CheckStatus.FAILED
    if status is CheckStatus.FAILED:
        logger.warning(f"{check_id} FAILED: {evidence.failures[0]['assertion']}")
    else:
        logger.info(f"{check_id} VERIFIED")
    return CheckResult(
        id=check_id,
        title=definition.title,
        statement=definition.statement,
        claim=definition.claim,
        paper_ref=definition.paper_ref,
        status=status,
        witnesses=evidence.witnesses,
        counterexamples=evidence.failures[:MAX_COUNTEREXAMPLES],
        failed_assertions=len(evidence.failures),
    )


@check(
    "K1",
    "Cycle censuses and girth",
    "The graph is cubic on 14 vertices and 21 edges, has no cycles of length 3, 4 or 5, "
    "and has exactly 28 six-cycles, 56 twelve-cycles and 24 fourteen-cycles.",
    "C14 has 28 6-cycles, which are its shortest cycles, 56 12-cycles and 24 14-cycles.",
    r'§2, "28 $6$-cycles, its shortest cycles, and 24 $14$-cycles"; Lemma 2.2(1), "has $56$ $12$-cycles"',
)
def cycle_censuses(ctx: CheckContext, ev: Evidence) -> None:
    g = ctx.graph
    ev.record("vertices", g.vertex_count)
    ev.record("edges", g.edge_count)
    ev.require(g.vertex_count == 14, "graph has 14 vertices", found=g.vertex_count)
    ev.require(g.edge_count == 21, "graph has 21 edges", found=g.edge_count)
    irregular = [v for v in range(g.vertex_count) if g.degree(v) != 3]
    ev.require(not irregular, "every vertex has degree 3", vertices=ctx.fmt_vertices(irregular))

    counts = {k: len(ctx.cycles(k)) for k in EXPECTED_CYCLE_COUNTS}
    ev.record("cycle_counts", {str(k): v for k, v in counts.items()})
    for k, expected in EXPECTED_CYCLE_COUNTS.items():
        ev.require(counts[k] == expected, f"{k}-cycle count is {expected}", length=k, found=counts[k])
    for k in EXPECTED_CYCLE_COUNTS:
        for c in ctx.cycles(k):
            if not ev.require(c.is_cycle_of(g), "every enumerated cycle is a simple cycle of the graph", cycle=ctx.fmt_cycle(c)):
                break

    shortest = next((k for k in range(3, g.vertex_count + 1) if ctx.cycles(k)), None)
    ev.record("girth", shortest)
    ev.require(shortest == 6, "girth is 6", found=shortest)


@check(
    "K2",
    "3-connectivity",
    "Removing any two vertices leaves the graph connected.",
    "C14 is 3-connected.",
    r'Lemma 3.1 proof, "since $C_{14}$ is $3$-connected"',
)
def three_connected(ctx: CheckContext, ev: Evidence) -> None:
    connected = vertex_connectivity_at_least(ctx.graph, 3)
    ev.record("vertex_connectivity_at_least_3", connected)
    ev.require(connected, "graph is 3-connected")


@check(
    "K3",
    "Automorphism group order and spectrum",
    "Aut(C14) has order 336, its element orders are exactly {1, 2, 3, 4, 6, 7, 8}, "
    "no element has order 14 or 21, and the group is recognised as PGL(2,7).",
    "Aut(C14) is isomorphic to PGL(2,7), of order 336; it has no elements of order 14 or 21.",
    r'§2, "whose order is $336=2^4\times 3\times 7$"; Theorem 4.2 proof, "no element of order $14$"; Theorem 4.7 proof, "no element of order $21$"',
)
def automorphism_spectrum(ctx: CheckContext, ev: Evidence) -> None:
    G = ctx.group
    ev.record("order", G.order)
    ev.record("generators", [ctx.fmt(p) for p in G.generators])
    ev.require(G.order == 336, "|Aut| = 336", found=G.order)

    regenerated = generate_group(G.generators, G.degree)
    ev.require(set(regenerated.elements) == set(G.elements), "the generators close to the searched group", closure_order=regenerated.order)
    for p in G.elements:
        if not ev.require(is_automorphism(p, ctx.graph), "every element preserves every edge", element=ctx.fmt(p)):
            break

    spectrum = ctx.spectrum
    ev.record("spectrum", {str(k): v for k, v in spectrum.items()})
    ev.require(set(spectrum) == EXPECTED_SPECTRUM_ORDERS, "element orders are {1,2,3,4,6,7,8}", found=sorted(spectrum))
    for forbidden in (14, 21):
        ev.require(forbidden not in spectrum, f"no element of order {forbidden}", count=spectrum.get(forbidden, 0))

    label = iso_type(G)
    ev.record("iso_type", label)
    ev.require(label == PGL27, "Aut(C14) is recognised as PGL(2,7)", found=label)


@check(
    "K4",
    "Transitivity on 12- and 14-cycles",
    "Aut(C14) acts transitively on the 56 twelve-cycles and on the 24 fourteen-cycles.",
    "Aut(C14) acts transitively on the set of 14-cycles and on the set of 12-cycles.",
    r'Lemma 2.2(2), "acts transitively on the set of $14$-cycles and the set of $12$-cycles"',
)
def cycle_transitivity(ctx: CheckContext, ev: Evidence) -> None:
    for k in (12, 14):
        action = ctx.cycle_action(k)
        orbits = orbit_partition(ctx.group, action)
        ev.record(f"orbits_on_{k}_cycles", [len(o) for o in orbits])
        ev.require(action.size > 0 and is_transitive(ctx.group, action), f"transitive on {k}-cycles", orbit_sizes=[len(o) for o in orbits])


@check(
    "K5",
    "Distance-3 pairs and avoiding 12-cycles",
    "For every pair of vertices at distance 3 there are exactly two 12-cycles that avoid both.",
    "For every pair of vertices at distance 3, exactly two 12-cycles avoid the pair.",
    r'Lemma 2.2(3), "has exactly two $12$-cycles"',
)
def distance_three_pairs(ctx: CheckContext, ev: Evidence) -> None:
    g = ctx.graph
    pairs = [(u, v) for u, v in combinations(range(g.vertex_count), 2) if g.distances[u][v] == 3]
    ev.record("distance_3_pairs", len(pairs))
    ev.require(bool(pairs), "some pair of vertices is at distance 3")
    twelve = ctx.cycles(12)
    tally = Counter()
    for u, v in pairs:
        avoiding = cycles_avoiding(g, 12, (u, v), cycles=twelve)
        tally[len(avoiding)] += 1
        ev.require(len(avoiding) == 2, "exactly two 12-cycles avoid the pair", pair=ctx.fmt_vertices((u, v)), found=len(avoiding))
    ev.record("avoiding_counts", {str(k): v for k, v in sorted(tally.items())})


@check(
    "K6",
    "Order-7 automorphisms",
    "Every automorphism of order 7 leaves exactly three 14-cycles invariant, acting on each "
    "as a rotation by an even step; it has three edge orbits of size 7, each invariant "
    "14-cycle is the union of two of them, and it fixes no vertex.",
    "An automorphism of order 7 leaves exactly three 14-cycles setwise invariant, rotating each, "
    "has three edge orbits of size 7, and fixes no vertices.",
    r'Lemma 2.3(1), "setwise fixes precisely three $14$-cycles"; "there are precisely three such edge orbits"',
)
def order_seven(ctx: CheckContext, ev: Evidence) -> None:
    sevens = ctx.elements_of_order(7)
    ev.record("order_7_elements", len(sevens))
    ev.require(len(sevens) == 48, "Aut has 48 elements of order 7", found=len(sevens))
    steps = set()
    for p in sevens:
        invariant = fixed_points(p, ctx.cycle_action(14))
        ev.require(len(invariant) == 3, "exactly three invariant 14-cycles", element=ctx.fmt(p), found=len(invariant))
        for c in invariant:
            d = cycle_action_descriptor(p, c)
            steps.add(d.step)
            ev.require(d.kind == "rotation" and d.step % 2 == 0, "acts on the 14-cycle as a rotation by an even step",
                       element=ctx.fmt(p), cycle=ctx.fmt_cycle(c), action=d.describe())
        orbits = orbit_partition(p, ctx.edge_action)
        sizes = sorted(len(o) for o in orbits)
        ev.require(sizes == [7, 7, 7], "three edge orbits of size 7", element=ctx.fmt(p), found=sizes)
        ev.require(not p.fixed_points(), "fixes no vertex", element=ctx.fmt(p), fixed=ctx.fmt_vertices(p.fixed_points()))
        orbit_of = {e: i for i, orbit in enumerate(orbits) for e in orbit}
        for c in invariant:
            meeting = {orbit_of[e] for e in c.edges}
            union = {e for i in meeting for e in orbits[i]}
            ev.require(len(meeting) == 2 and union == set(c.edges), "each invariant 14-cycle is the union of two edge orbits",
                       element=ctx.fmt(p), cycle=ctx.fmt_cycle(c))
    ev.record("rotation_steps", sorted(steps))


@check(
    "K7",
    "Order-3 automorphisms",
    "Every automorphism of order 3 fixes exactly two vertices, which are at distance 3; it "
    "leaves exactly two 12-cycles invariant, namely the two avoiding its fixed pair, and "
    "rotates each by a third of a turn.",
    "An automorphism of order 3 fixes exactly two vertices, at distance 3, and leaves exactly "
    "two 12-cycles setwise invariant, rotating each by 2π/3 or 4π/3.",
    r'Lemma 2.3(2), "fixes precisely two vertices and setwise fixes precisely two $12$-cycles"; "rotating each by $\pm\frac{2\pi }{3}$"',
)
def order_three(ctx: CheckContext, ev: Evidence) -> None:
    g = ctx.graph
    threes = ctx.elements_of_order(3)
    ev.record("order_3_elements", len(threes))
    ev.require(len(threes) == 56, "Aut has 56 elements of order 3", found=len(threes))
    steps = set()
    for p in threes:
        fixed = p.fixed_points()
        if not ev.require(len(fixed) == 2, "fixes exactly two vertices", element=ctx.fmt(p), fixed=ctx.fmt_vertices(fixed)):
            continue
        u, v = fixed
        ev.require(g.distances[u][v] == 3, "the fixed vertices are at distance 3", element=ctx.fmt(p), found=g.distances[u][v])
        invariant = fixed_points(p, ctx.cycle_action(12))
        ev.require(len(invariant) == 2, "exactly two invariant 12-cycles", element=ctx.fmt(p), found=len(invariant))
        avoiding = cycles_avoiding(g, 12, fixed, cycles=ctx.cycles(12))
        ev.require(sorted(invariant) == sorted(avoiding), "the invariant 12-cycles are those avoiding the fixed pair", element=ctx.fmt(p))
        for c in invariant:
            d = cycle_action_descriptor(p, c)
            steps.add(d.step)
            ev.require(d.kind == "rotation" and d.step in (4, 8), "rotates the 12-cycle by a third of a turn",
                       element=ctx.fmt(p), cycle=ctx.fmt_cycle(c), action=d.describe())
    ev.record("rotation_steps", sorted(steps))


@check(
    "K8",
    "Involutions with an invariant 12- or 14-cycle",
    "Every involution leaving some 12-cycle or 14-cycle invariant fixes no vertex. Supporting "
    "graph facts: the two vertices off any 12-cycle are at distance 3 and every vertex of the "
    "12-cycle has exactly one neighbour on it adjacent to one of them; deleting the ends of any "
    "chord of a 14-cycle splits it into paths of 4 and 8 vertices.",
    "If an involution leaves a 12-cycle or a 14-cycle setwise invariant then it fixes no vertices.",
    r'Lemma 2.4, "Then no vertex is fixed by $\alpha$"',
)
def involution_without_fixed_vertices(ctx: CheckContext, ev: Evidence) -> None:
    g = ctx.graph
    involutions = ctx.involutions()
    ev.record("involutions", len(involutions))
    ev.require(bool(involutions), "Aut has involutions")
    with_invariant = 0
    profiles = Counter()
    for p in involutions:
        inv12 = fixed_points(p, ctx.cycle_action(12))
        inv14 = fixed_points(p, ctx.cycle_action(14))
        fixed = p.fixed_points()
        profiles[(len(fixed), len(inv12), len(inv14))] += 1
        if inv12 or inv14:
            with_invariant += 1
            ev.require(not fixed, "an involution with an invariant 12- or 14-cycle fixes no vertex",
                       element=ctx.fmt(p), fixed=ctx.fmt_vertices(fixed))
    ev.record("involutions_with_invariant_cycle", with_invariant)
    ev.require(with_invariant > 0, "some involution leaves a 12- or 14-cycle invariant")
    ev.record("involution_profiles", [
        {"fixed_vertices": f, "invariant_12_cycles": a, "invariant_14_cycles": b, "count": n}
        for (f, a, b), n in sorted(profiles.items())
    ])

    for c in ctx.cycles(12):
        off = [v for v in range(g.vertex_count) if v not in c]
        if not ev.require(len(off) == 2, "two vertices lie off each 12-cycle", cycle=ctx.fmt_cycle(c)):
            continue
        v, w = off
        ev.require(g.distances[v][w] == 3, "the off-cycle vertices are at distance 3", cycle=ctx.fmt_cycle(c))
        attached = g.neighbors(v) | g.neighbors(w)
        for x in c.vertices:
            on_cycle = [y for y in g.neighbors(x) if y in c and y in attached]
            ev.require(len(on_cycle) == 1, "each 12-cycle vertex has one neighbour on the cycle adjacent to the off-cycle pair",
                       cycle=ctx.fmt_cycle(c), vertex=ctx.labeling.label_of(x), found=len(on_cycle))
    splits = Counter()
    for c in ctx.cycles(14):
        ring = c.as_graph(g.vertex_count)
        for a, b in g.sorted_edges:
            if (a, b) in c.edges:
                continue
            sizes = removal_component_sizes(ring, (a, b))
            splits[sizes] += 1
            ev.require(sizes == (4, 8), "removing a chord's ends splits the 14-cycle into 4 and 8 vertices",
                       cycle=ctx.fmt_cycle(c), chord=ctx.fmt_edge((a, b)), found=list(sizes))
    ev.record("chord_splits", {"-".join(map(str, k)): v for k, v in sorted(splits.items())})


@check(
    "K9",
    "Involutions fix an odd number of edges",
    "The graph has 21 edges and every involution of Aut(C14) setwise fixes an odd number of them.",
    "Since C14 has 21 edges, every involution setwise fixes an odd number of edges.",
    r'Theorem 4.3 proof, "Since $C_{14}$ has 21 edges, $\alpha$ and $\beta$ each setwise fix an odd number of edges"',
)
def involution_odd_fixed_edges(ctx: CheckContext, ev: Evidence) -> None:
    ev.record("edges", ctx.graph.edge_count)
    ev.require(ctx.graph.edge_count == 21, "graph has 21 edges", found=ctx.graph.edge_count)
    involutions = ctx.involutions()
    ev.require(bool(involutions), "Aut has involutions")
    tally = Counter()
    for p in involutions:
        n = len(fixed_points(p, ctx.edge_action))
        tally[n] += 1
        ev.require(n % 2 == 1, "setwise fixes an odd number of edges", element=ctx.fmt(p), found=n)
    ev.record("fixed_edge_counts", {str(k): v for k, v in sorted(tally.items())})


@check(
    "K10",
    "Orders 4 and 8 leave no 12- or 14-cycle invariant",
    "No automorphism of order 4 or 8 leaves a 12-cycle or a 14-cycle invariant, and every "
    "even-order automorphism leaving a 14-cycle invariant is an involution.",
    "No automorphism of order 4 or 8 leaves a 12-cycle or 14-cycle setwise invariant.",
    r'Lemma 3.1(3) proof, "If $\alpha$ setwise fixes a $14$-cycle, then $\mathrm{order}(\alpha)=2$"',
)
def no_order_four_or_eight(ctx: CheckContext, ev: Evidence) -> None:
    for k in (4, 8):
        elements = ctx.elements_of_order(k)
        ev.record(f"order_{k}_elements", len(elements))
        ev.require(bool(elements), f"Aut has elements of order {k}")
        for p in elements:
            for length in (12, 14):
                invariant = fixed_points(p, ctx.cycle_action(length))
                ev.require(not invariant, f"an element of order {k} leaves no {length}-cycle invariant",
                           element=ctx.fmt(p), cycles=[ctx.fmt_cycle(c) for c in invariant[:3]])
    orders_with_14 = set()
    for p, m in zip(ctx.group.elements, ctx.group.element_orders):
        if m % 2 == 0 and fixed_points(p, ctx.cycle_action(14)):
            orders_with_14.add(m)
            ev.require(m == 2, "even-order elements with an invariant 14-cycle have order 2", element=ctx.fmt(p), order=m)
    ev.record("even_orders_with_invariant_14_cycle", sorted(orders_with_14))


@check(
    "K11",
    "Subgroup census",
    "The isomorphism types of the nontrivial proper subgroups of Aut(C14) are exactly Z2, Z3, Z4, "
    "Z6, Z7, Z8, D2, D3, D4, D6, D7, D8, A4, S4, Z7⋊Z3, Z7⋊Z6 and PSL(2,7); every class "
    "representative of order at most 48 is confirmed by an explicit isomorphism.",
    "The nontrivial proper subgroups of PGL(2,7) are Z2, Z3, Z4, Z6, Z7, Z8, D2, D3, D4, D6, D7, "
    "D8, A4, S4, Z7⋊Z3, Z7⋊Z6 and PSL(2,7).",
    r'§4, "the nontrivial proper subgroups of $\mathrm{PGL}(2,7)$ are"',
)
def subgroup_census(ctx: CheckContext, ev: Evidence) -> None:
    G = ctx.group
    census = ctx.census
    ev.record("subgroups", len(census))
    proper = {r.iso_type for r in census if 1 < r.order < G.order}
    ev.record("proper_types", sorted(proper, key=isotype_sort_key))
    ev.require(proper == EXPECTED_PROPER_SUBGROUP_TYPES, "proper subgroup types match the catalog",
               missing=sorted(EXPECTED_PROPER_SUBGROUP_TYPES - proper), unexpected=sorted(proper - EXPECTED_PROPER_SUBGROUP_TYPES))
    ev.require(UNRECOGNIZED not in {r.iso_type for r in census}, "every subgroup type is recognised")
    whole = [r for r in census if r.order == G.order]
    ev.require(len(whole) == 1 and whole[0].iso_type == PGL27, "the whole group is PGL(2,7)")
    ev.require(any(r.iso_type == TRIVIAL for r in census), "the trivial subgroup is listed")
    for r in census:
        if G.order % r.order:
            ev.require(False, "subgroup orders divide |G|", subgroup=r.iso_type, order=r.order)

    classes = subgroup_conjugacy_classes(G, census)
    per_type = Counter(r.iso_type for r in census)
    class_count = Counter(cls[0].iso_type for cls in classes)
    ev.record("subgroups_by_type", {t: per_type[t] for t in sorted(per_type, key=isotype_sort_key)})
    ev.record("classes_by_type", {t: class_count[t] for t in sorted(class_count, key=isotype_sort_key)})
    confirmed = 0
    for cls in classes:
        rep = cls[0]
        ev.require(all(r.iso_type == rep.iso_type for r in cls), "conjugate subgroups share a type", subgroup=rep.iso_type)
        if rep.order <= config.ISOMORPHISM_ORACLE_ORDER_BOUND and rep.iso_type != UNRECOGNIZED:
            phi = find_isomorphism(rep.as_group(), model_group(rep.iso_type))
            ev.require(phi is not None, "an explicit isomorphism to the model group exists", subgroup=rep.iso_type)
            confirmed += 1
    ev.record("classes_confirmed_by_isomorphism", confirmed)


@check(
    "K12",
    "A4 orbit count is not an integer",
    "With every order-3 element fixing 2 vertices, every involution fixing none and the "
    "identity fixing all 14, averaging fixed vertices over A4 gives 30/12, which is not an "
    "integer; the A4 subgroups of Aut(C14) have eight elements of order 3 and three involutions.",
    "As this is not an integer, A4 cannot act on the vertices in this way.",
    r'Theorem 4.4, "=\frac{30}{12}"; "As this is not an integer"',
)
def alternating_burnside(ctx: CheckContext, ev: Evidence) -> None:
    a4s = [r for r in ctx.census if r.iso_type == A4]
    ev.record("A4_subgroups", len(a4s))
    if not ev.require(bool(a4s), "Aut has A4 subgroups"):
        return
    for r in a4s:
        spectrum = order_spectrum(r.as_group())
        ev.require(spectrum == {1: 1, 2: 3, 3: 8}, "A4 has 8 elements of order 3 and 3 involutions", found={str(k): v for k, v in spectrum.items()})
    H = a4s[0].as_group()
    counts = {1: ctx.graph.vertex_count, 2: 0, 3: 2}
    quotient = burnside_orbit_count(H, ctx.vertex_action, override_by_order(H, counts))
    ev.record("fixed_counts_by_order", {str(k): v for k, v in counts.items()})
    ev.record("fixed_count_sources", {"3": "K7", "2": "K8 with axiom A3", "1": "vertex count"})
    ev.record("orbit_count", str(quotient))
    ev.require(tuple(quotient) == (30, 12), "the orbit count is 30/12", found=str(quotient))
    ev.require(not quotient.is_integral, "the orbit count is not an integer", found=str(quotient))


@check(
    "K13",
    "Commuting involutions share a pointwise fixed edge",
    "For every pair of distinct commuting involutions α, β of Aut(C14) some edge is setwise fixed "
    "by both, and every such edge is fixed pointwise by α, β or αβ; every D6 subgroup contains a D2.",
    "At least one of the involutions α, β, or αβ must pointwise fix e.",
    r'Theorem 4.3 proof, "at least one of the involutions $\alpha$, $\beta$, or $\alpha\beta$ must pointwise fix $e$"',
)
def commuting_involutions(ctx: CheckContext, ev: Evidence) -> None:
    g = ctx.graph
    involutions = ctx.involutions()
    setwise = {p: set(fixed_points(p, ctx.edge_action)) for p in involutions}
    pairs = 0
    for a, b in combinations(involutions, 2):
        if not a.commutes_with(b):
            continue
        pairs += 1
        common = setwise[a] & setwise[b]
        ev.require(bool(common), "some edge is setwise fixed by both", alpha=ctx.fmt(a), beta=ctx.fmt(b))
        pointwise = set(pointwise_fixed_edges(a, g)) | set(pointwise_fixed_edges(b, g)) | set(pointwise_fixed_edges(a * b, g))
        for e in sorted(common - pointwise):
            ev.require(False, "α, β or αβ fixes the common edge pointwise", alpha=ctx.fmt(a), beta=ctx.fmt(b), edge=ctx.fmt_edge(e))
    ev.record("commuting_involution_pairs", pairs)
    ev.require(pairs > 0, "some pair of distinct involutions commutes")

    d6s = [r for r in ctx.census if r.iso_type == "D6"]
    ev.record("D2_subgroups", sum(1 for r in ctx.census if r.iso_type == "D2"))
    ev.record("D6_subgroups", len(d6s))
    for r in d6s:
        ev.require(bool(subgroups_within(r, ctx.census, "D2")), "every D6 contains a D2", generators=[ctx.fmt(p) for p in r.generators])


@check(
    "K14",
    "Odd-order elements of Dm × Dm commute",
    "For every odd m up to 15, elements of odd order in Dm × Dm commute with each other; "
    "Aut(C14) has no element of order 21; in every Z7⋊Z3 subgroup some elements of order 3 "
    "and 7 fail to commute, and every Z7⋊Z6 subgroup contains a Z7⋊Z3.",
    "Neither Z7⋊Z3 nor Z7⋊Z6 is a subgroup of Dm × Dm for odd m.",
    r'Theorem 4.7 proof, "all elements of odd order in $D_m\times D_m$ commute"; "the elements of $G$ of order $3$ and $7$ cannot commute"',
)
def dihedral_products(ctx: CheckContext, ev: Evidence) -> None:
    checked = []
    for m in range(1, 16, 2):
        product = make_dihedral_product(m)
        ev.require(odd_order_elements_commute(product), "odd-order elements of Dm × Dm commute", m=m)
        checked.append(m)
    ev.record("odd_m_checked", checked)
    ev.require(21 not in ctx.spectrum, "Aut has no element of order 21")

    f21 = [r for r in ctx.census if r.iso_type == FROBENIUS_21]
    f42 = [r for r in ctx.census if r.iso_type == FROBENIUS_42]
    ev.record("Z7⋊Z3_subgroups", len(f21))
    ev.record("Z7⋊Z6_subgroups", len(f42))
    ev.require(bool(f21), "Aut has Z7⋊Z3 subgroups")
    for r in f21:
        ev.require(not odd_order_elements_commute(r.as_group()), "Z7⋊Z3 has non-commuting odd-order elements",
                   generators=[ctx.fmt(p) for p in r.generators])
    for r in f42:
        ev.require(bool(subgroups_within(r, ctx.census, FROBENIUS_21)), "every Z7⋊Z6 contains a Z7⋊Z3",
                   generators=[ctx.fmt(p) for p in r.generators])


@check(
    "K15",
    "Subgroups of D14 containing D7",
    "In the dihedral group D14 of order 28, the only subgroups containing the index-2 subgroup "
    "D7 are D7 and D14, and D14 has an element of order 14.",
    "The only subgroups of D14 containing D7 are D7 and D14.",
    r'Theorem 4.2 proof, "$D_7$ is the only subgroup of $D_{14}$ containing $D_7$"',
)
def dihedral_overgroups(ctx: CheckContext, ev: Evidence) -> None:
    d14 = make_dihedral(14)
    rotation, reflection = d14.generators
    d7 = generate_group([rotation * rotation, reflection])
    ev.record("D7_type", iso_type(d7))
    ev.require(iso_type(d7) == "D7", "the index-2 subgroup is D7", found=iso_type(d7))
    ev.require(14 in order_spectrum(d14), "D14 has an element of order 14")
    members = set(d7.elements)
    overgroups = [r for r in enumerate_subgroups(d14) if members <= r.elements]
    labels = [r.iso_type for r in overgroups]
    ev.record("overgroups", labels)
    ev.require(labels == ["D7", "D14"], "only D7 and D14 contain D7", found=labels)


@check(
    "K16",
    "Explicit automorphisms",
    "The reflection (1,14)(2,13)...(7,8) and the rotation (1,3,5,7,9,11,13)(2,4,6,8,10,12,14) are "
    "automorphisms of the standard Heawood graph generating D7; the rotation as printed without 14 "
    "has order 42 and is not an automorphism. Under a labeling derived from a 12-cycle, the glide "
    "(v,w)(10,11,6,7,2,3)(1,4,9,12,5,8) is an automorphism of order 6 whose square has order 3 and "
    "cube order 2, leaving the 6-cycle 10,11,6,7,2,3 invariant. Together they exhibit element "
    "orders 2, 3, 6 and 7.",
    "Thus D7 ≤ TSG(Γ).",
    r'Theorem 4.2 proof, "Thus $D_7\leq \mathrm{TSG}(\Gamma)$"; Figure 4 caption, "glide rotation inducing $(v,w)(10,11, 6, 7, 2, 3)(1,4, 9, 12, 5, 8)$"',
)
def explicit_automorphisms(ctx: CheckContext, ev: Evidence) -> None:
    g = ctx.graph
    if not ev.require(g.vertex_count == 14, "graph has 14 vertices", found=g.vertex_count):
        return
    standard = LabelingMap.standard(14)
    reflection = parse_perm(REFLECTION_NOTATION, standard)
    corrected = parse_perm(CORRECTED_ROTATION_NOTATION, standard)
    printed = parse_perm(PRINTED_ROTATION_NOTATION, standard)
    ev.record("printed_rotation", {
        "notation": PRINTED_ROTATION_NOTATION,
        "order": element_order(printed),
        "is_automorphism": is_automorphism(printed, g),
    })
    ev.record("corrected_rotation", CORRECTED_ROTATION_NOTATION)
    ev.require(is_automorphism(reflection, g), "the reflection is an automorphism")
    ev.require(element_order(reflection) == 2, "the reflection has order 2")
    ev.require(is_automorphism(corrected, g), "the corrected rotation is an automorphism")
    ev.require(element_order(corrected) == 7, "the corrected rotation has order 7")
    d7 = generate_group([corrected, reflection])
    ev.record("generated_type", iso_type(d7))
    ev.require(iso_type(d7) == "D7", "rotation and reflection generate D7", found=iso_type(d7))

    twelve = ctx.cycles(12)
    if not ev.require(bool(twelve), "the graph has 12-cycles"):
        return
    matches = []
    for labeling in twelve_cycle_labelings(g, twelve[0]):
        glide = parse_perm(GLIDE_NOTATION, labeling)
        if is_automorphism(glide, g):
            matches.append((labeling, glide))
    ev.record("glide_labelings", len(matches))
    if not ev.require(bool(matches), "the glide is an automorphism under some derived labeling"):
        return
    labeling, glide = matches[0]
    ev.record("glide_labeling", list(labeling.labels))
    ev.require(element_order(glide) == 6, "the glide has order 6", found=element_order(glide))
    ev.require(element_order(glide ** 2) == 3, "the glide's square has order 3")
    ev.require(element_order(glide ** 3) == 2, "the glide's cube has order 2")
    hexagon = Cycle.from_sequence(labeling.index_of(x) for x in GLIDE_HEXAGON)
    ev.require(hexagon.is_cycle_of(g), "10,11,6,7,2,3 is a 6-cycle")
    ev.require(hexagon.image(glide) == hexagon, "the glide leaves the 6-cycle invariant")

    exhibited = sorted({element_order(x) for x in (reflection, glide ** 2, glide, corrected)})
    ev.record("realizable_orders", exhibited)
    ev.require(exhibited == [2, 3, 6, 7], "orders 2, 3, 6 and 7 are exhibited", found=exhibited)
