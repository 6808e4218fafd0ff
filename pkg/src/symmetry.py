from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Hashable, Mapping, NamedTuple, Optional, Sequence, Union

from config import config
from errors import HeawoodError, InputError
from graph_core import Cycle, Edge, SimpleGraph, enumerate_cycles
from perm_core import Perm, PermGroup, element_order

logging.basicConfig(level=getattr(logging, config.LOG_LEVEL), format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


class Domain(str, Enum):
    VERTICES = "vertices"
    EDGES = "edges"
    CYCLES = "cycles"


def is_automorphism(p: Perm, g: SimpleGraph) -> bool:
    if p.degree != g.vertex_count:
        return False
    return all(g.has_edge(p[u], p[v]) for u, v in g.edges)


def automorphism_group(g: SimpleGraph) -> PermGroup:
    """All automorphisms of g by backtracking over a refined vertex colouring.

    Vertices start coloured by (degree, sorted distance profile) and the colours
    are refined by neighbour colours until stable. Vertices are mapped in
    breadth-first order and a candidate image must keep every distance to the
    vertices already mapped, so each complete assignment is an automorphism.
    """
    n = g.vertex_count
    if n > config.AUTOMORPHISM_VERTEX_LIMIT:
        raise InputError(f"automorphism search is limited to {config.AUTOMORPHISM_VERTEX_LIMIT} vertices, got {n}")
    dist = g.distances
    adjacency = g.adjacency

    def profile(v: int) -> tuple:
        return (len(adjacency[v]), tuple(sorted(-1 if d is None else d for d in dist[v])))

    colour = _refine([profile(v) for v in range(n)], adjacency)
    order = _breadth_first_order(n, adjacency)

    mapping = [-1] * n
    used = [False] * n
    found: list[Perm] = []

    def backtrack(i: int) -> None:
        if i == n:
            found.append(Perm(mapping))
            return
        v = order[i]
        for c in range(n):
            if used[c] or colour[c] != colour[v]:
                continue
            if any(dist[v][u] != dist[c][mapping[u]] for u in order[:i]):
                continue
            mapping[v] = c
            used[c] = True
            backtrack(i + 1)
            used[c] = False
            mapping[v] = -1

    backtrack(0)

    for p in found:
        if not is_automorphism(p, g):
            raise HeawoodError(f"automorphism search produced a non-automorphism {p}")

    search_result = PermGroup([], n, elements=found)
    generators = search_result.small_generating_set()
    group = PermGroup(generators, n, elements=found)
    logger.info(f"automorphism_group: {group.order} automorphisms, {len(generators)} generators")
    return group


def _refine(initial: Sequence[Hashable], adjacency: Sequence[frozenset[int]]) -> list[int]:
    colours = _compress(initial)
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[w] for w in adjacency[v]))) for v in range(len(colours))
        ]
        refined = _compress(signatures)
        if len(set(refined)) == len(set(colours)):
            return refined
        colours = refined


def _compress(keys: Sequence[Hashable]) -> list[int]:
    palette = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [palette[key] for key in keys]


def _breadth_first_order(n: int, adjacency: Sequence[frozenset[int]]) -> list[int]:
    order: list[int] = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        for v in queue:
            order.append(v)
            for w in sorted(adjacency[v]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


Point = Union[int, Edge, Cycle]


class GroupAction:
    """The action of a group of graph automorphisms on vertices, edges or k-cycles.

    Each element's action is materialised once as a permutation of domain
    indices; points are kept in sorted order.
    """

    def __init__(self, group: PermGroup, graph: SimpleGraph, domain: Domain, points: Sequence[Point], cycle_length: Optional[int] = None):
        self.group = group
        self.graph = graph
        self.domain = domain
        self.cycle_length = cycle_length
        self.points = tuple(points)
        self.point_index = {x: i for i, x in enumerate(self.points)}
        self._perms: dict[Perm, Perm] = {}

    @property
    def name(self) -> str:
        return f"{self.cycle_length}-cycles" if self.domain is Domain.CYCLES else self.domain.value

    @property
    def size(self) -> int:
        return len(self.points)

    def _image(self, p: Perm, x: Point) -> Point:
        if self.domain is Domain.VERTICES:
            return p[x]
        if self.domain is Domain.EDGES:
            u, v = p[x[0]], p[x[1]]
            return (u, v) if u < v else (v, u)
        return x.image(p)

    def perm_of(self, p: Perm) -> Perm:
        cached = self._perms.get(p)
        if cached is not None:
            return cached
        if p not in self.group:
            raise InputError(f"{p} is not an element of the acting group")
        images = []
        for x in self.points:
            y = self._image(p, x)
            if y not in self.point_index:
                raise InputError(f"{p} maps {x} outside the {self.name} of the graph")
            images.append(self.point_index[y])
        perm = Perm(images)
        self._perms[p] = perm
        return perm

    def act(self, p: Perm, x: Point) -> Point:
        return self.points[self.perm_of(p)[self.point_index[x]]]


def induced_action(
    G: PermGroup,
    g: SimpleGraph,
    domain: Union[Domain, str],
    cycle_length: Optional[int] = None,
    cycles: Optional[Sequence[Cycle]] = None,
) -> GroupAction:
    domain = Domain(domain)
    for p in G.generators:
        if not is_automorphism(p, g):
            raise InputError(f"{p} is not an automorphism of the graph")
    if domain is Domain.VERTICES:
        points: Sequence[Point] = range(g.vertex_count)
    elif domain is Domain.EDGES:
        points = g.sorted_edges
    else:
        if cycle_length is None:
            raise InputError("the cycle domain needs a cycle length")
        points = enumerate_cycles(g, cycle_length) if cycles is None else sorted(cycles)
    action = GroupAction(G, g, domain, points, cycle_length if domain is Domain.CYCLES else None)
    logger.debug(f"induced_action: group of order {G.order} on {action.size} {action.name}")
    return action


def fixed_points(p: Perm, A: GroupAction) -> list[Point]:
    """Points mapped to themselves; on edges and cycles this is setwise invariance."""
    image = A.perm_of(p)
    return [A.points[i] for i, j in enumerate(image.images) if i == j]


def pointwise_fixed_edges(p: Perm, g: SimpleGraph) -> list[Edge]:
    return [(u, v) for u, v in g.sorted_edges if p[u] == u and p[v] == v]


def orbit_partition(subject: Union[PermGroup, Perm], A: GroupAction) -> list[list[Point]]:
    """Orbits of the group generated by `subject`, each sorted, ordered by least point."""
    generators = [subject] if isinstance(subject, Perm) else list(subject.generators)
    moves = [A.perm_of(p).images for p in generators]
    block_of = [-1] * A.size
    blocks: list[list[int]] = []
    for start in range(A.size):
        if block_of[start] != -1:
            continue
        block_of[start] = len(blocks)
        block = [start]
        for x in block:
            for move in moves:
                y = move[x]
                if block_of[y] == -1:
                    block_of[y] = len(blocks)
                    block.append(y)
        blocks.append(sorted(block))
    return [[A.points[i] for i in block] for block in blocks]


def is_transitive(G: PermGroup, A: GroupAction) -> bool:
    return len(orbit_partition(G, A)) == 1


class BurnsideQuotient(NamedTuple):
    """Total fixed-point count over group order, kept unreduced (30/12 stays 30/12)."""

    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def is_integral(self) -> bool:
        return self.numerator % self.denominator == 0

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def override_by_order(G: PermGroup, counts: Mapping[int, int]) -> dict[Perm, int]:
    """Assign each element the fixed-point count listed for its order."""
    override = {}
    for p in G.elements:
        k = element_order(p)
        if k not in counts:
            raise InputError(f"no fixed-point count given for elements of order {k}")
        override[p] = counts[k]
    return override


def burnside_orbit_count(G: PermGroup, A: GroupAction, fix_override: Optional[Mapping[Perm, int]] = None) -> BurnsideQuotient:
    """(1/|G|) times the sum of |fix(p)| over G, or of the override counts when given."""
    if fix_override is not None:
        missing = [p for p in G.elements if p not in fix_override]
        if missing:
            raise InputError(f"fix_override has no count for {len(missing)} group elements, e.g. {missing[0]}")
        total = sum(fix_override[p] for p in G.elements)
    else:
        total = sum(len(fixed_points(p, A)) for p in G.elements)
    return BurnsideQuotient(total, G.order)


@dataclass(frozen=True)
class RotationDescriptor:
    """How a permutation moves an invariant k-cycle: position i goes to i + step
    for a rotation, to step - i for a reflection."""

    kind: str
    step: int
    length: int

    @property
    def turns(self) -> Fraction:
        """Rotation angle as a fraction of a full turn."""
        return Fraction(self.step, self.length) if self.kind == "rotation" else Fraction(0)

    def describe(self) -> str:
        if self.kind == "rotation":
            return f"rotation by {self.step} of {self.length} positions ({self.turns} turn)"
        return self.kind


def cycle_action_descriptor(p: Perm, c: Cycle) -> RotationDescriptor:
    seq = c.vertices
    k = len(seq)
    image = [p[v] for v in seq]
    if image[0] not in c:
        raise InputError(f"cycle {seq} is not invariant under {p}")
    j = seq.index(image[0])
    if all(image[i] == seq[(j + i) % k] for i in range(k)):
        return RotationDescriptor("identity" if j == 0 else "rotation", j, k)
    if all(image[i] == seq[(j - i) % k] for i in range(k)):
        return RotationDescriptor("reflection", j, k)
    raise InputError(f"cycle {seq} is not invariant under {p}")
