from __future__ import annotations

import functools
import logging
import math
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from config import config
from errors import InputError, PermParseError, ResourceLimitError
from graph_core import LabelingMap

logging.basicConfig(level=getattr(logging, config.LOG_LEVEL), format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

TRIVIAL = "trivial"
A4 = "A4"
S4 = "S4"
FROBENIUS_21 = "Z7⋊Z3"
FROBENIUS_42 = "Z7⋊Z6"
PSL27 = "PSL(2,7)"
PGL27 = "PGL(2,7)"
UNRECOGNIZED = "unrecognized"

PGL_ORDER = 336

IsoType = str

_SPORADIC_BY_ORDER = {
    12: (A4,),
    21: (FROBENIUS_21,),
    24: (S4,),
    42: (FROBENIUS_42,),
    168: (PSL27,),
    336: (PGL27,),
}

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def cyclic_label(n: int) -> IsoType:
    return TRIVIAL if n == 1 else f"Z{n}"


def dihedral_label(n: int) -> IsoType:
    return f"D{n}"


def isotype_sort_key(label: IsoType) -> tuple:
    """Orders labels as trivial, Z_n, D_n, then the named groups by order."""
    if label == TRIVIAL:
        return (0, 1, label)
    match = re.fullmatch(r"([ZD])(\d+)", label)
    if match:
        family, n = match.groups()
        return (1 if family == "Z" else 2, int(n), label)
    named = [A4, S4, FROBENIUS_21, FROBENIUS_42, PSL27, PGL27]
    if label in named:
        return (3, named.index(label), label)
    return (4, 0, label)


@functools.total_ordering
class Perm:
    """A permutation of {0, ..., n-1} stored as its image sequence.

    Composition reads right to left: (p * q)(x) == p(q(x)).
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Perm:
        perm = cls.__new__(cls)
        perm.images = images
        perm._hash = hash(images)
        return perm

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if point in seen:
                    raise InputError(f"point {point} appears in more than one cycle")
                if not 0 <= point < degree:
                    raise InputError(f"point {point} outside 0..{degree - 1}")
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __getitem__(self, x: int) -> int:
        return self.images[x]

    def __len__(self) -> int:
        return len(self.images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Perm) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Perm({format_perm(self)})"

    def compose(self, other: Perm) -> Perm:
        if other.degree != self.degree:
            raise InputError(f"cannot compose permutations of degree {self.degree} and {other.degree}")
        return Perm._trusted(tuple(map(self.images.__getitem__, other.images)))

    __mul__ = compose

    def inverse(self) -> Perm:
        images = [0] * self.degree
        for i, x in enumerate(self.images):
            images[x] = i
        return Perm._trusted(tuple(images))

    def __pow__(self, k: int) -> Perm:
        base = self if k >= 0 else self.inverse()
        result = Perm.identity(self.degree)
        for _ in range(abs(k) % element_order(self)):
            result = base * result
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point, ordered by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def commutes_with(self, other: Perm) -> bool:
        return self * other == other * self


def element_order(p: Perm) -> int:
    return math.lcm(*(len(c) for c in p.cycles()))


def parse_perm(notation: str, ground: LabelingMap) -> Perm:
    """Parse disjoint cycle notation such as "(v,w)(1,4,9)" over the labels of `ground`."""
    text = "".join(notation.split())
    if text in ("", "()"):
        return Perm.identity(len(ground))
    if _CYCLE_RE.sub("", text):
        raise PermParseError(f"malformed cycle notation: {notation!r}")
    cycles = []
    seen: set[str] = set()
    for body in _CYCLE_RE.findall(text):
        if not body:
            continue
        labels = body.split(",")
        if any(not label for label in labels):
            raise PermParseError(f"empty label in cycle ({body})")
        cycle = []
        for label in labels:
            if label in seen:
                raise PermParseError(f"label {label!r} repeated in {notation!r}")
            seen.add(label)
            try:
                cycle.append(ground.index_of(label))
            except InputError:
                raise PermParseError(f"unknown label {label!r} in {notation!r}") from None
        cycles.append(cycle)
    return Perm.from_cycles(len(ground), cycles)


def format_perm(p: Perm, labeling: Optional[LabelingMap] = None) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    label = (lambda v: str(v + 1)) if labeling is None else labeling.label_of
    return "".join("(" + ",".join(label(v) for v in cycle) + ")" for cycle in cycles)


def _closure_indices(table: Sequence[Sequence[int]], generators: Iterable[int], identity: int = 0) -> list[int]:
    gens = list(dict.fromkeys(generators))
    elements = [identity]
    seen = {identity}
    for x in elements:
        for s in gens:
            y = table[x][s]
            if y not in seen:
                seen.add(y)
                elements.append(y)
    return elements


def _mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def _indices_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class PermGroup:
    """A permutation group given by generators, with its element set computed on demand.

    Elements are kept sorted by image sequence, so the identity is always
    element 0 and every index-based table is reproducible.
    """

    def __init__(
        self,
        generators: Sequence[Perm],
        degree: Optional[int] = None,
        elements: Optional[Iterable[Perm]] = None,
    ):
        gens = tuple(generators)
        degrees = {g.degree for g in gens}
        if degree is None:
            if len(degrees) > 1:
                raise InputError(f"generators act on ground sets of different sizes: {sorted(degrees)}")
            degree = degrees.pop() if degrees else 0
        elif degrees - {degree}:
            raise InputError(f"generators must all have degree {degree}, got {sorted(degrees)}")
        self.degree = degree
        self.generators = gens
        if elements is not None:
            self.__dict__["elements"] = tuple(sorted(set(elements)))

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order}, degree={self.degree})"

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        identity = Perm.identity(self.degree)
        seen = {identity}
        frontier = [identity]
        while frontier:
            fresh = []
            for x in frontier:
                for g in self.generators:
                    y = x * g
                    if y not in seen:
                        seen.add(y)
                        fresh.append(y)
            frontier = fresh
        return tuple(sorted(seen))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self.index

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    @cached_property
    def index(self) -> dict[Perm, int]:
        return {p: i for i, p in enumerate(self.elements)}

    @cached_property
    def cayley_table(self) -> list[list[int]]:
        """table[a][b] is the index of elements[a] * elements[b]."""
        by_images = {p.images: i for i, p in enumerate(self.elements)}
        table = []
        for a in self.elements:
            lookup = a.images.__getitem__
            table.append([by_images[tuple(map(lookup, b.images))] for b in self.elements])
        return table

    @cached_property
    def inverse_indices(self) -> list[int]:
        table = self.cayley_table
        return [row.index(0) for row in table]

    @cached_property
    def element_orders(self) -> list[int]:
        return [element_order(p) for p in self.elements]

    @property
    def _spanning(self) -> tuple[Perm, ...]:
        return self.generators or self.elements

    def is_abelian(self) -> bool:
        return all(a.commutes_with(b) for a, b in combinations(self._spanning, 2))

    def center(self) -> PermGroup:
        central = [z for z in self.elements if all(z.commutes_with(g) for g in self._spanning)]
        return PermGroup(central, self.degree, elements=central)

    def derived_subgroup(self) -> PermGroup:
        indices = _derived_indices(self, range(self.order))
        members = [self.elements[i] for i in indices]
        return PermGroup(members, self.degree, elements=members)

    def small_generating_set(self) -> tuple[Perm, ...]:
        """Greedy generating set, preferring elements of large order."""
        if self.order == 1:
            return ()
        table = self.cayley_table
        ranked = sorted(range(self.order), key=lambda i: (-self.element_orders[i], i))
        chosen: list[int] = []
        span = 1
        for i in ranked:
            if span >> i & 1:
                continue
            chosen.append(i)
            span = _mask_of(_closure_indices(table, chosen))
            if span.bit_count() == self.order:
                break
        return tuple(self.elements[i] for i in chosen)


@dataclass(frozen=True)
class SubgroupRecord:
    """One subgroup of a parent PermGroup.

    `mask` has bit i set when the parent's element i belongs to the subgroup; it
    is the deduplication key.
    """

    elements: frozenset[Perm]
    order: int
    iso_type: IsoType
    generators: tuple[Perm, ...] = field(compare=False)
    mask: int = field(compare=False)

    def as_group(self) -> PermGroup:
        degree = next(iter(self.elements)).degree
        return PermGroup(self.generators, degree, elements=self.elements)

    def contains(self, other: SubgroupRecord) -> bool:
        return other.mask & ~self.mask == 0


def generate_group(gens: Sequence[Perm], degree: Optional[int] = None) -> PermGroup:
    group = PermGroup(gens, degree)
    logger.debug(f"generate_group: {len(group.generators)} generators close to order {group.order}")
    return group


def order_spectrum(G: PermGroup) -> dict[int, int]:
    counts = Counter(G.element_orders)
    return dict(sorted(counts.items()))


def conjugacy_classes(G: PermGroup) -> list[list[Perm]]:
    """Conjugacy classes ordered by element order, then by least member."""
    table = G.cayley_table
    inverse = G.inverse_indices
    assigned = [False] * G.order
    classes = []
    for x in range(G.order):
        if assigned[x]:
            continue
        members = sorted({table[table[g][x]][inverse[g]] for g in range(G.order)})
        for m in members:
            assigned[m] = True
        classes.append([G.elements[m] for m in members])
    classes.sort(key=lambda c: (element_order(c[0]), c[0]))
    return classes


def _derived_indices(G: PermGroup, members: Iterable[int]) -> list[int]:
    table = G.cayley_table
    inverse = G.inverse_indices
    members = list(members)
    commutators = {
        table[table[inverse[a]][inverse[b]]][table[a][b]] for a in members for b in members
    }
    return _closure_indices(table, sorted(commutators))


def _signature(G: PermGroup, members: Sequence[int]) -> tuple:
    """(order, abelian, element-order histogram, derived order, center order)."""
    table = G.cayley_table
    orders = G.element_orders
    histogram = tuple(sorted(Counter(orders[i] for i in members).items()))
    center = [z for z in members if all(table[z][h] == table[h][z] for h in members)]
    derived = _derived_indices(G, members)
    return (len(members), len(center) == len(members), histogram, len(derived), len(center))


def _candidate_labels(order: int) -> list[IsoType]:
    if order == 1:
        return [TRIVIAL]
    labels = [cyclic_label(order)]
    if order % 2 == 0 and order >= 4:
        labels.append(dihedral_label(order // 2))
    labels.extend(_SPORADIC_BY_ORDER.get(order, ()))
    return labels


def model_group(label: IsoType) -> PermGroup:
    """A concrete permutation group of the named isomorphism type."""
    if label == TRIVIAL:
        return make_cyclic(1)
    match = re.fullmatch(r"([ZD])(\d+)", label)
    if match:
        family, n = match.group(1), int(match.group(2))
        return make_cyclic(n) if family == "Z" else make_dihedral(n)
    builders = {
        A4: make_alternating4,
        S4: make_symmetric4,
        FROBENIUS_21: lambda: make_frobenius(7, 3),
        FROBENIUS_42: lambda: make_frobenius(7, 6),
        PSL27: lambda: make_projective_linear(7, special=True),
        PGL27: lambda: make_projective_linear(7, special=False),
    }
    if label not in builders:
        raise InputError(f"no model group for {label!r}")
    return builders[label]()


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _rotation_histogram(n: int) -> Counter:
    return Counter({d: _totient(d) for d in range(1, n + 1) if n % d == 0})


@functools.lru_cache(maxsize=None)
def catalog_signature(label: IsoType) -> tuple:
    """Signature of a catalog type.

    Cyclic and dihedral families are computed in closed form so that large
    members never need a model group; the named groups use their models.
    """
    match = re.fullmatch(r"([ZD])(\d+)", label)
    if label == TRIVIAL or (match and match.group(1) == "Z"):
        n = 1 if label == TRIVIAL else int(match.group(2))
        return (n, True, tuple(sorted(_rotation_histogram(n).items())), 1, n)
    if match:
        n = int(match.group(2))
        histogram = _rotation_histogram(n)
        histogram[2] += n
        if n <= 2:
            return (2 * n, True, tuple(sorted(histogram.items())), 1, 2 * n)
        derived = n if n % 2 else n // 2
        center = 1 if n % 2 else 2
        return (2 * n, False, tuple(sorted(histogram.items())), derived, center)
    model = model_group(label)
    return _signature(model, range(model.order))


def _label_for_signature(signature: tuple) -> IsoType:
    order = signature[0]
    if order > PGL_ORDER:
        return UNRECOGNIZED
    matches = [label for label in _candidate_labels(order) if catalog_signature(label) == signature]
    return matches[0] if len(matches) == 1 else UNRECOGNIZED


def iso_type(H: PermGroup) -> IsoType:
    """Isomorphism type from the invariant chain; "unrecognized" outside the catalog."""
    if H.order > PGL_ORDER:
        logger.warning(f"iso_type: order {H.order} is beyond the recognised catalog")
        return UNRECOGNIZED
    return _label_for_signature(_signature(H, range(H.order)))


def _extend_subgroup(
    table: Sequence[Sequence[int]],
    members: Sequence[int],
    mask: int,
    gens: Sequence[int],
    g: int,
) -> tuple[list[int], int]:
    """Closure of a subgroup and one more element, built coset by coset."""
    elements = list(members)
    reps = [g]
    for h in members:
        y = table[h][g]
        elements.append(y)
        mask |= 1 << y
    all_gens = list(gens) + [g]
    i = 0
    while i < len(reps):
        r = reps[i]
        for s in all_gens:
            x = table[r][s]
            if not mask >> x & 1:
                for h in members:
                    y = table[h][x]
                    elements.append(y)
                    mask |= 1 << y
                reps.append(x)
        i += 1
    return elements, mask


def enumerate_subgroups(G: PermGroup, bound: Optional[int] = None) -> list[SubgroupRecord]:
    """Every subgroup of G exactly once, ordered by (order, membership mask).

    Seeds with the cyclic subgroups and joins each known subgroup with each
    cyclic subgroup it does not contain until nothing new appears.
    """
    bound = config.SUBGROUP_ORDER_BOUND if bound is None else bound
    if G.order > bound:
        raise ResourceLimitError(f"group of order {G.order} exceeds the subgroup enumeration bound {bound}")
    table = G.cayley_table

    cyclic: dict[int, int] = {}
    for a in range(G.order):
        mask = _mask_of(_closure_indices(table, [a]))
        cyclic.setdefault(mask, a)
    cyclic_seeds = sorted(cyclic.items(), key=lambda item: (item[0].bit_count(), item[0]))

    known: dict[int, tuple[list[int], tuple[int, ...]]] = {}
    queue: deque[int] = deque()
    for mask, a in cyclic_seeds:
        known[mask] = (_indices_of(mask), (a,) if a != 0 else ())
        queue.append(mask)

    while queue:
        h_mask = queue.popleft()
        members, gens = known[h_mask]
        for c_mask, c in cyclic_seeds:
            if c_mask & ~h_mask == 0:
                continue
            elements, k_mask = _extend_subgroup(table, members, h_mask, gens, c)
            if k_mask not in known:
                known[k_mask] = (sorted(elements), gens + (c,))
                queue.append(k_mask)

    logger.info(f"enumerate_subgroups: group of order {G.order} has {len(known)} subgroups")

    records = []
    for mask, (members, gens) in sorted(known.items(), key=lambda item: (item[0].bit_count(), item[0])):
        records.append(SubgroupRecord(
            elements=frozenset(G.elements[i] for i in members),
            order=len(members),
            iso_type=_label_for_signature(_signature(G, members)),
            generators=tuple(G.elements[i] for i in gens),
            mask=mask,
        ))
    return records


def subgroup_conjugacy_classes(G: PermGroup, records: Sequence[SubgroupRecord]) -> list[list[SubgroupRecord]]:
    """Partition census records of G into conjugacy classes, in census order."""
    table = G.cayley_table
    inverse = G.inverse_indices
    position = {r.mask: i for i, r in enumerate(records)}
    assigned: set[int] = set()
    classes = []
    for record in records:
        if record.mask in assigned:
            continue
        members = _indices_of(record.mask)
        conjugates = {
            _mask_of(table[table[g][h]][inverse[g]] for h in members) for g in range(G.order)
        }
        members_of_class = sorted((m for m in conjugates if m in position), key=position.__getitem__)
        assigned.update(members_of_class)
        classes.append([records[position[m]] for m in members_of_class])
    return classes


def subgroups_by_generating_sets(G: PermGroup) -> set[frozenset[Perm]]:
    """Brute-force subgroup oracle: closures of every subset of size at most log2 |G|.

    A subgroup of order m needs at most floor(log2 m) generators, since each
    new generator at least doubles the span.
    """
    table = G.cayley_table
    limit = max(G.order.bit_length() - 1, 1)
    found = set()
    for size in range(limit + 1):
        for subset in combinations(range(G.order), size):
            members = _closure_indices(table, subset)
            found.add(frozenset(G.elements[i] for i in members))
    return found


def find_isomorphism(H: PermGroup, K: PermGroup) -> Optional[dict[Perm, Perm]]:
    """Search for an explicit isomorphism H -> K by assigning images to a
    generating set of H and extending along the Cayley graph."""
    if H.order != K.order:
        return None
    if _signature(H, range(H.order)) != _signature(K, range(K.order)):
        return None
    table_h, table_k = H.cayley_table, K.cayley_table
    gens = [H.index[g] for g in H.small_generating_set()]
    candidates = [
        [y for y in range(K.order) if K.element_orders[y] == H.element_orders[g]] for g in gens
    ]

    def extend(images: Sequence[int]) -> Optional[list[int]]:
        phi = [-1] * H.order
        phi[0] = 0
        frontier = [0]
        for x in frontier:
            for s, t in zip(gens, images):
                y = table_h[x][s]
                target = table_k[phi[x]][t]
                if phi[y] == -1:
                    phi[y] = target
                    frontier.append(y)
                elif phi[y] != target:
                    return None
        return phi if len(set(phi)) == H.order else None

    def search(depth: int, chosen: list[int]) -> Optional[list[int]]:
        if depth == len(gens):
            return extend(chosen)
        for y in candidates[depth]:
            found = search(depth + 1, chosen + [y])
            if found is not None:
                return found
        return None

    phi = search(0, [])
    if phi is None:
        return None
    return {H.elements[x]: K.elements[phi[x]] for x in range(H.order)}


def make_cyclic(n: int) -> PermGroup:
    if n < 1:
        raise InputError(f"cyclic group order must be positive, got {n}")
    if n == 1:
        return PermGroup([], 1)
    return PermGroup([Perm._trusted(tuple((i + 1) % n for i in range(n)))])


def make_dihedral(n: int) -> PermGroup:
    """D_n of order 2n.

    For n >= 3 it acts on the vertices of an n-gon; D_1 and D_2, which have no
    faithful action on so few points, act regularly on 2 and 4 points.
    """
    if n < 1:
        raise InputError(f"dihedral index must be positive, got {n}")
    if n == 1:
        return PermGroup([Perm._trusted((1, 0))])
    if n == 2:
        return PermGroup([Perm._trusted((1, 0, 3, 2)), Perm._trusted((2, 3, 0, 1))])
    rotation = Perm._trusted(tuple((i + 1) % n for i in range(n)))
    reflection = Perm._trusted(tuple((-i) % n for i in range(n)))
    return PermGroup([rotation, reflection])


def make_alternating4() -> PermGroup:
    return PermGroup([Perm._trusted((1, 2, 0, 3)), Perm._trusted((0, 2, 3, 1))])


def make_symmetric4() -> PermGroup:
    return PermGroup([Perm._trusted((1, 0, 2, 3)), Perm._trusted((1, 2, 3, 0))])


def make_frobenius(p: int, k: int) -> PermGroup:
    """Z_p ⋊ Z_k as the maps x -> a x + b on Z_p with a of multiplicative order k."""
    if (p - 1) % k:
        raise InputError(f"{k} does not divide {p - 1}")
    a = next(x for x in range(1, p) if _multiplicative_order(x, p) == k)
    translation = Perm._trusted(tuple((x + 1) % p for x in range(p)))
    scaling = Perm._trusted(tuple((a * x) % p for x in range(p)))
    return PermGroup([translation, scaling])


def _multiplicative_order(x: int, p: int) -> int:
    k, y = 1, x % p
    while y != 1:
        y = (y * x) % p
        k += 1
    return k


def make_projective_linear(q: int, special: bool = False) -> PermGroup:
    """PGL(2,q), or PSL(2,q) when `special`, acting on the projective line.

    Points 0..q-1 are field elements and q is the point at infinity. Generated by
    x -> x+1, x -> a x and x -> -1/x, with `a` a primitive root (PGL) or a
    generator of the non-zero squares (PSL).
    """
    infinity = q
    primitive = next(x for x in range(2, q) if _multiplicative_order(x, q) == q - 1)
    a = primitive * primitive % q if special else primitive

    def moebius(f) -> Perm:
        return Perm(f(x) for x in range(q + 1))

    translate = moebius(lambda x: infinity if x == infinity else (x + 1) % q)
    scale = moebius(lambda x: infinity if x == infinity else (a * x) % q)
    invert = moebius(lambda x: infinity if x == 0 else 0 if x == infinity else (-pow(x, -1, q)) % q)
    return PermGroup([translate, scale, invert])


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    """G x H acting on the disjoint union of their ground sets."""
    shift = G.degree
    degree = G.degree + H.degree
    left = [Perm._trusted(g.images + tuple(range(shift, degree))) for g in G.generators]
    right = [Perm._trusted(tuple(range(shift)) + tuple(x + shift for x in h.images)) for h in H.generators]
    return PermGroup(left + right, degree)


def make_dihedral_product(m: int) -> PermGroup:
    if m < 1 or m % 2 == 0:
        raise InputError(f"D_m x D_m is only built for odd m, got {m}")
    return direct_product(make_dihedral(m), make_dihedral(m))


def odd_order_elements_commute(G: PermGroup) -> bool:
    odd = [p for p in G.elements if element_order(p) % 2 == 1]
    return all(a.commutes_with(b) for a, b in combinations(odd, 2))


def subgroups_within(record: SubgroupRecord, census: Iterable[SubgroupRecord], label: Optional[IsoType] = None) -> list[SubgroupRecord]:
    """Census members contained in `record`, optionally of one iso type."""
    return [
        r for r in census
        if record.contains(r) and (label is None or r.iso_type == label)
    ]

