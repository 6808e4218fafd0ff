from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx

from config import config
from errors import InputError

logging.basicConfig(level=getattr(logging, config.LOG_LEVEL), format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

VertexId = int
Edge = tuple[int, int]

HEAWOOD_ORDER = 14
HEAWOOD_CHORD_SPAN = 5


def _normalise_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..vertex_count-1.

    Edges are stored as (u, v) pairs with u < v. Instances are immutable;
    derived data (adjacency, distances, the networkx view) is cached on first use.
    """

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError(f"vertex_count must be non-negative, got {self.vertex_count}")
        for u, v in self.edges:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < v < self.vertex_count):
                raise InputError(f"edge ({u}, {v}) is not a normalised pair of vertices in range")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
        normalised = set()
        for edge in edges:
            u, v = edge
            pair = _normalise_edge(int(u), int(v))
            if pair in normalised:
                raise InputError(f"parallel edge {pair}")
            normalised.add(pair)
        return cls(vertex_count, frozenset(normalised))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> SimpleGraph:
        relabelled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
        return cls.from_edges(relabelled.number_of_nodes(), relabelled.edges())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.sorted_edges)
        return graph

    @cached_property
    def nx_graph(self) -> nx.Graph:
        # read-only view shared by the distance and component queries
        return nx.freeze(self.to_networkx())

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(n) for n in neighbours)

    @cached_property
    def distances(self) -> tuple[tuple[Optional[int], ...], ...]:
        """All-pairs shortest path lengths; None marks unreachable pairs."""
        lengths = dict(nx.all_pairs_shortest_path_length(self.nx_graph))
        return tuple(
            tuple(lengths[u].get(v) for v in range(self.vertex_count))
            for u in range(self.vertex_count)
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise InputError(f"vertex {v!r} is not in range [0, {self.vertex_count})")
        return v

    def neighbors(self, v: VertexId) -> frozenset[int]:
        return self.adjacency[self.check_vertex(v)]

    def degree(self, v: VertexId) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return _normalise_edge(u, v) in self.edges


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle in canonical form.

    The canonical form is the lexicographically least vertex sequence over all
    rotations and both orientations, so it always starts at the least vertex.
    Build instances with `Cycle.from_sequence`.
    """

    vertices: tuple[int, ...]

    @classmethod
    def from_sequence(cls, sequence: Iterable[int]) -> Cycle:
        return canonical_cycle(sequence)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    @cached_property
    def edges(self) -> frozenset[Edge]:
        k = len(self.vertices)
        return frozenset(
            _normalise_edge(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)
        )

    def image(self, mapping: Sequence[int]) -> Cycle:
        return canonical_cycle(mapping[v] for v in self.vertices)

    def is_cycle_of(self, g: SimpleGraph) -> bool:
        return len(set(self.vertices)) == len(self.vertices) and all(g.has_edge(u, v) for u, v in self.edges)

    def as_graph(self, vertex_count: int) -> SimpleGraph:
        return SimpleGraph(vertex_count, self.edges)


def canonical_cycle(sequence: Iterable[int]) -> Cycle:
    seq = tuple(sequence)
    if len(seq) < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {len(seq)}")
    if len(set(seq)) != len(seq):
        raise InputError(f"cycle vertices must be distinct: {seq}")
    start = seq.index(min(seq))
    forward = seq[start:] + seq[:start]
    backward = (forward[0],) + tuple(reversed(forward[1:]))
    return Cycle(min(forward, backward))


@dataclass(frozen=True)
class LabelingMap:
    """Bijection between internal vertex ids and presentation labels."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise InputError(f"labels are not distinct: {self.labels}")

    @classmethod
    def standard(cls, vertex_count: int) -> LabelingMap:
        return cls(tuple(str(i + 1) for i in range(vertex_count)))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def label_of(self, v: VertexId) -> str:
        if not 0 <= v < len(self.labels):
            raise InputError(f"vertex {v} has no label")
        return self.labels[v]

    def index_of(self, label: str) -> VertexId:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown label {label!r}") from None

    def format_cycle(self, cycle: Cycle) -> str:
        return " ".join(self.label_of(v) for v in cycle.vertices)


def heawood_standard() -> SimpleGraph:
    """Heawood graph as a 14-cycle plus chords {i, i+5} from every odd label i.

    Internal vertex j carries label j+1, so odd labels are the even ids.
    """
    outer = [(i, (i + 1) % HEAWOOD_ORDER) for i in range(HEAWOOD_ORDER)]
    chords = [(j, (j + HEAWOOD_CHORD_SPAN) % HEAWOOD_ORDER) for j in range(0, HEAWOOD_ORDER, 2)]
    return SimpleGraph.from_edges(HEAWOOD_ORDER, outer + chords)


def petersen_graph() -> SimpleGraph:
    return SimpleGraph.from_networkx(nx.petersen_graph())


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_networkx(nx.complete_graph(n))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_networkx(nx.cycle_graph(n))


def rewire_edge(g: SimpleGraph, remove: Edge, add: Edge) -> SimpleGraph:
    """Copy of g with one edge dropped and another inserted."""
    old, new = _normalise_edge(*remove), _normalise_edge(*add)
    if old not in g.edges:
        raise InputError(f"edge {old} is not in the graph")
    if new in g.edges:
        raise InputError(f"edge {new} is already in the graph")
    return SimpleGraph(g.vertex_count, (g.edges - {old}) | {new})


def _check_vertex_set(g: SimpleGraph, vertices: Iterable[int]) -> frozenset[int]:
    return frozenset(g.check_vertex(v) for v in vertices)


def enumerate_cycles(g: SimpleGraph, k: int) -> list[Cycle]:
    """All simple cycles of length k, each once, sorted by canonical form.

    Depth-first search from the least vertex of each prospective cycle, only
    visiting larger vertices, and abandoning a path once the way back to its
    start is longer than the number of edges still available.
    """
    if not 3 <= k <= g.vertex_count:
        raise InputError(f"cycle length must lie in [3, {g.vertex_count}], got {k}")

    adjacency = g.adjacency
    dist = g.distances
    found: list[Cycle] = []

    for start in range(g.vertex_count):
        path = [start]
        on_path = {start}

        def extend(v: int) -> None:
            depth = len(path)
            if depth == k:
                # each cycle is reached in both orientations; keep one
                if start in adjacency[v] and path[1] < path[-1]:
                    found.append(Cycle(tuple(path)))
                return
            edges_left = k - depth
            for w in sorted(adjacency[v]):
                if w <= start or w in on_path:
                    continue
                d = dist[w][start]
                if d is None or d > edges_left:
                    continue
                path.append(w)
                on_path.add(w)
                extend(w)
                on_path.discard(w)
                path.pop()

        extend(start)

    found.sort()
    logger.debug(f"enumerate_cycles: {len(found)} cycles of length {k}")
    return found


def cycles_by_length(g: SimpleGraph, lengths: Iterable[int]) -> dict[int, list[Cycle]]:
    return {k: enumerate_cycles(g, k) for k in lengths}


def girth(g: SimpleGraph) -> Optional[int]:
    for k in range(3, g.vertex_count + 1):
        if enumerate_cycles(g, k):
            return k
    return None


def distance(g: SimpleGraph, u: VertexId, v: VertexId) -> int:
    d = g.distances[g.check_vertex(u)][g.check_vertex(v)]
    if d is None:
        raise InputError(f"vertices {u} and {v} lie in different components")
    return d


def vertex_connectivity_at_least(g: SimpleGraph, k: int) -> bool:
    """True iff g has more than k vertices and no set of fewer than k vertices disconnects it."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    if g.vertex_count <= k:
        return False
    vertices = range(g.vertex_count)
    for size in range(k):
        for removed in combinations(vertices, size):
            rest = [v for v in vertices if v not in removed]
            if not nx.is_connected(g.nx_graph.subgraph(rest)):
                logger.debug(f"removing {removed} disconnects the graph")
                return False
    return True


def cycles_avoiding(
    g: SimpleGraph,
    k: int,
    avoided: Iterable[VertexId],
    cycles: Optional[Iterable[Cycle]] = None,
) -> list[Cycle]:
    """k-cycles of g that meet none of the avoided vertices.

    A precomputed census can be passed as `cycles` to skip the enumeration.
    """
    removed = _check_vertex_set(g, avoided)
    census = enumerate_cycles(g, k) if cycles is None else cycles
    return [c for c in census if len(c) == k and removed.isdisjoint(c.vertices)]


def removal_component_sizes(g: SimpleGraph, removed: Iterable[VertexId]) -> tuple[int, ...]:
    gone = _check_vertex_set(g, removed)
    rest = g.nx_graph.subgraph(v for v in range(g.vertex_count) if v not in gone)
    return tuple(sorted(len(component) for component in nx.connected_components(rest)))


def off_cycle_vertices(g: SimpleGraph, cycle: Cycle) -> tuple[int, ...]:
    return tuple(v for v in range(g.vertex_count) if v not in cycle)


def twelve_cycle_labelings(g: SimpleGraph, cycle: Cycle) -> Iterator[LabelingMap]:
    """Every labeling that numbers `cycle` 1..12 along a traversal and names the
    two remaining vertices v and w.

    Yields 48 maps: 12 starting vertices, 2 directions, 2 ways to name the pair.
    """
    if len(cycle) != 12 or g.vertex_count != 14:
        raise InputError("twelve-cycle labelings need a 12-cycle in a 14-vertex graph")
    first, second = off_cycle_vertices(g, cycle)
    for start in range(12):
        for reverse in (False, True):
            ring = cycle.vertices[start:] + cycle.vertices[:start]
            if reverse:
                ring = (ring[0],) + tuple(reversed(ring[1:]))
            for v_vertex, w_vertex in ((first, second), (second, first)):
                labels = [""] * 14
                for position, vertex in enumerate(ring):
                    labels[vertex] = str(position + 1)
                labels[v_vertex] = "v"
                labels[w_vertex] = "w"
                yield LabelingMap(tuple(labels))


def derived_twelve_cycle_labeling(g: SimpleGraph, cycles: Optional[Sequence[Cycle]] = None) -> LabelingMap:
    """The first traversal labeling of the first canonical 12-cycle of g."""
    census = enumerate_cycles(g, 12) if cycles is None else cycles
    if not census:
        raise InputError("graph has no 12-cycle to derive a labeling from")
    return next(twelve_cycle_labelings(g, census[0]))


def edge_list_text(g: SimpleGraph) -> str:
    return "".join(f"{u + 1} {v + 1}\n" for u, v in g.sorted_edges)


def graph_digest(g: SimpleGraph) -> str:
    return hashlib.sha256(edge_list_text(g).encode("utf-8")).hexdigest()


def parse_edge_list(text: str, vertex_count: Optional[int] = None) -> SimpleGraph:
    """Parse "u v" lines of 1-based labels; blank lines and '#' comments are skipped."""
    pairs = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"line {line_number}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputError(f"line {line_number}: labels must be integers, got {raw!r}") from None
        if u < 1 or v < 1:
            raise InputError(f"line {line_number}: labels are 1-based, got {raw!r}")
        pairs.append((u - 1, v - 1))
    n = vertex_count if vertex_count is not None else max((max(p) + 1 for p in pairs), default=0)
    if n > config.AUTOMORPHISM_VERTEX_LIMIT:
        raise InputError(f"edge list declares {n} vertices, above the limit of {config.AUTOMORPHISM_VERTEX_LIMIT}")
    return SimpleGraph.from_edges(n, pairs)


def read_edge_list(path: str | Path) -> SimpleGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Failed to read edge list {path}: {e}")
        raise InputError(f"cannot read edge list {path}: {e}") from e
    graph = parse_edge_list(text)
    logger.info(f"Loaded graph with {graph.vertex_count} vertices and {graph.edge_count} edges from {path}")
    return graph


def write_edge_list(g: SimpleGraph, path: str | Path) -> None:
    Path(path).write_text(edge_list_text(g), encoding="utf-8")


if __name__ == "__main__":
    heawood = heawood_standard()
    for length in (6, 12, 14):
        print(f"{length}-cycles: {len(enumerate_cycles(heawood, length))}")
    print(f"3-connected: {vertex_connectivity_at_least(heawood, 3)}")
