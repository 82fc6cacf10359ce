"""Dynkin diagrams, their automorphisms and Galois actions on them.

Vertices are numbered 1..rank as in the usual textbook pictures used by the
catalog tables (not Bourbaki): chains for A, B, C; D forks at n-2 into n-1
and n; E6/E7/E8 are chains 1..5/1..6/1..7 with the extra vertex attached to
3/4/5; F4 is 1-2=3-4; G2 is 1≡2.  ``BOURBAKI`` translates to Bourbaki labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DomainError, SchemaError, ValidationError

TYPE_LABELS = "ABCDEFG"

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class Edge:
    """An edge ``i - j`` with ``i < j``.

    ``short`` is the vertex carrying the short root when ``multiplicity > 1``.
    """

    i: int
    j: int
    multiplicity: int = 1
    short: int | None = None

    def __post_init__(self):
        if self.i >= self.j:
            raise ValidationError(f"edge endpoints must satisfy i < j, got {self.i}, {self.j}")
        if self.multiplicity not in (1, 2, 3):
            raise ValidationError(f"edge multiplicity must be 1, 2 or 3, got {self.multiplicity}")
        if (self.multiplicity == 1) != (self.short is None):
            raise ValidationError("exactly the multiple edges carry a short-root vertex")
        if self.short is not None and self.short not in (self.i, self.j):
            raise ValidationError(f"short vertex {self.short} is not an endpoint of {self.i}-{self.j}")

    def image(self, perm):
        a, b = perm[self.i - 1], perm[self.j - 1]
        short = None if self.short is None else perm[self.short - 1]
        return Edge(min(a, b), max(a, b), self.multiplicity, short)

    def to_json(self):
        out = [self.i, self.j, self.multiplicity]
        if self.short is not None:
            out.append({"toward_short": self.short})
        return out


def rank_bounds(type_label):
    try:
        return _RANK_BOUNDS[type_label]
    except KeyError:
        raise DomainError(f"unknown Dynkin type {type_label!r}; expected one of {TYPE_LABELS}") from None


def check_rank(type_label, rank):
    lo, hi = rank_bounds(type_label)
    if not isinstance(rank, int) or rank < lo or (hi is not None and rank > hi):
        valid = f"{lo}..{hi}" if hi is not None and hi != lo else (str(lo) if hi == lo else f">= {lo}")
        raise DomainError(f"rank {rank!r} out of range for type {type_label}: valid range {valid}")


def _chain(n, start=1):
    return [Edge(k, k + 1) for k in range(start, start + n - 1)]


def _edges(type_label, n):
    if type_label == "A":
        return _chain(n)
    if type_label == "B":
        return _chain(n - 1) + [Edge(n - 1, n, 2, short=n)]
    if type_label == "C":
        return _chain(n - 1) + [Edge(n - 1, n, 2, short=n - 1)]
    if type_label == "D":
        return _chain(n - 2) + [Edge(n - 2, n - 1), Edge(n - 2, n)]
    if type_label == "E":
        branch = {6: 3, 7: 4, 8: 5}[n]
        return _chain(n - 1) + [Edge(branch, n)]
    if type_label == "F":
        return [Edge(1, 2), Edge(2, 3, 2, short=2), Edge(3, 4)]
    return [Edge(1, 2, 3, short=1)]


@dataclass(frozen=True)
class DynkinDiagram:
    type_label: str
    rank: int
    edges: tuple[Edge, ...] = field(compare=False, repr=False, default=())

    def __post_init__(self):
        check_rank(self.type_label, self.rank)
        if not self.edges:
            object.__setattr__(self, "edges", tuple(sorted(_edges(self.type_label, self.rank))))

    @property
    def name(self):
        return f"{self.type_label}{self.rank}"

    @property
    def vertices(self):
        return tuple(range(1, self.rank + 1))

    @cached_property
    def edge_set(self):
        return frozenset(self.edges)

    @cached_property
    def neighbors(self):
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            adj[e.i].add(e.j)
            adj[e.j].add(e.i)
        return {v: frozenset(s) for v, s in adj.items()}

    def is_automorphism(self, perm):
        return self.violated_edge(perm) is None

    def violated_edge(self, perm):
        """First edge whose image is not an edge (``None`` for automorphisms)."""
        perm = normalize_permutation(perm, self.rank)
        for e in self.edges:
            try:
                if e.image(perm) not in self.edge_set:
                    return e
            except ValidationError:
                return e
        return None

    def to_json(self):
        return {"type": self.name, "rank": self.rank, "edges": [e.to_json() for e in self.edges]}

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict):
            raise SchemaError("diagram", "expected an object")
        name = doc.get("type")
        if not isinstance(name, str) or not name or name[0] not in TYPE_LABELS:
            raise SchemaError("diagram.type", f"expected a type like 'E6', got {name!r}")
        rank = doc.get("rank")
        if rank is None and name[1:].isdigit():
            rank = int(name[1:])
        if not isinstance(rank, int):
            raise SchemaError("diagram.rank", f"expected an integer, got {rank!r}")
        if name[1:] and name[1:] != str(rank):
            raise SchemaError("diagram.rank", f"rank {rank} disagrees with type {name!r}")
        diagram = build_diagram(name[0], rank)
        if "edges" in doc:
            given = {_edge_from_json(e) for e in doc["edges"]}
            if given != set(diagram.edges):
                raise SchemaError("diagram.edges", f"edges do not match the canonical {diagram.name} diagram")
        return diagram


def _edge_from_json(item):
    if not isinstance(item, list) or len(item) not in (3, 4):
        raise SchemaError("diagram.edges", f"malformed edge {item!r}")
    i, j, m = item[:3]
    short = None
    if len(item) == 4:
        extra = item[3]
        if not isinstance(extra, dict) or "toward_short" not in extra:
            raise SchemaError("diagram.edges", f"malformed arrow annotation {extra!r}")
        short = extra["toward_short"]
    try:
        return Edge(min(i, j), max(i, j), m, short)
    except (TypeError, ValidationError) as exc:
        raise SchemaError("diagram.edges", str(exc)) from None


def build_diagram(type_label, rank):
    """The canonical Dynkin diagram of the given type and rank."""
    return DynkinDiagram(type_label, rank)


def parse_diagram_name(name):
    """``"E6"`` -> ``DynkinDiagram('E', 6)``."""
    if len(name) < 2 or name[0] not in TYPE_LABELS or not name[1:].isdigit():
        raise DomainError(f"cannot parse diagram name {name!r}")
    return build_diagram(name[0], int(name[1:]))


def normalize_permutation(perm, rank):
    """Accept a tuple of images (``perm[i-1]`` is the image of ``i``) or a dict."""
    if isinstance(perm, dict):
        perm = tuple(perm.get(v, v) for v in range(1, rank + 1))
    else:
        perm = tuple(perm)
    if sorted(perm) != list(range(1, rank + 1)):
        raise ValidationError(f"{perm!r} is not a permutation of 1..{rank}")
    return perm


def identity(rank):
    return tuple(range(1, rank + 1))


def compose(f, g):
    """``f ∘ g`` as image tuples."""
    return tuple(f[g[i] - 1] for i in range(len(g)))


def automorphism_group(diagram):
    """All diagram automorphisms, sorted, found by backtracking on adjacency."""
    order = _bfs_order(diagram)
    labels = {}
    for e in diagram.edges:
        labels[(e.i, e.j)] = labels[(e.j, e.i)] = (e.multiplicity, e.short)
    found = []

    def extend(k, image, used):
        if k == len(order):
            perm = tuple(image[v] for v in diagram.vertices)
            if diagram.is_automorphism(perm):
                found.append(perm)
            return
        v = order[k]
        for w in diagram.vertices:
            if w in used or len(diagram.neighbors[w]) != len(diagram.neighbors[v]):
                continue
            ok = True
            for u in diagram.neighbors[v]:
                if u in image:
                    target = labels.get((w, image[u]))
                    if target is None or target[0] != labels[(v, u)][0]:
                        ok = False
                        break
            if ok:
                image[v] = w
                used.add(w)
                extend(k + 1, image, used)
                del image[v]
                used.discard(w)

    extend(0, {}, set())
    return sorted(found)


def _bfs_order(diagram):
    seen = [1]
    for v in seen:
        for u in sorted(diagram.neighbors[v]):
            if u not in seen:
                seen.append(u)
    return seen


def generated_group(generators, rank):
    group = {identity(rank)}
    frontier = list(group)
    gens = [normalize_permutation(g, rank) for g in generators]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = compose(g, x)
            if y not in group:
                group.add(y)
                frontier.append(y)
    return frozenset(group)


def orbit_partition(group, rank):
    orbits = []
    seen = set()
    for v in range(1, rank + 1):
        if v in seen:
            continue
        orbit = tuple(sorted({g[v - 1] for g in group}))
        seen.update(orbit)
        orbits.append(orbit)
    return tuple(sorted(orbits))


@dataclass(frozen=True)
class GaloisAction:
    """The image of the absolute Galois group in ``Aut(diagram)``.

    Two actions are equal when they have the same diagram and the same
    permutation group, whatever generators were used to build them.
    """

    diagram: DynkinDiagram
    group: frozenset
    generators: tuple = field(compare=False, default=())

    @property
    def t(self):
        return len(self.group)

    @cached_property
    def orbit_partition(self):
        return orbit_partition(self.group, self.diagram.rank)

    def orbit_of(self, v):
        for orbit in self.orbit_partition:
            if v in orbit:
                return orbit
        raise DomainError(f"vertex {v} is not on {self.diagram.name}")

    def is_subgroup_of(self, other):
        return self.diagram == other.diagram and self.group <= other.group


def make_action(diagram, generators):
    """Validate ``generators`` as automorphisms and close them under composition."""
    gens = []
    for g in generators:
        g = normalize_permutation(g, diagram.rank)
        bad = diagram.violated_edge(g)
        if bad is not None:
            raise ValidationError(
                f"{g!r} is not an automorphism of {diagram.name}: edge {bad.to_json()} is not preserved"
            )
        gens.append(g)
    group = generated_group(gens, diagram.rank)
    if len(group) not in (1, 2, 3, 6):
        raise ValidationError(f"action of order {len(group)} is not realizable on {diagram.name}")
    return GaloisAction(diagram, group, tuple(gens))


def trivial_action(diagram):
    return make_action(diagram, [])


def standard_action(diagram, t):
    """The conventional action of order ``t`` used for quasi-split types ``tX_n``."""
    n = diagram.rank
    if t == 1:
        return trivial_action(diagram)
    kind = diagram.type_label
    if kind == "A" and n >= 2 and t == 2:
        return make_action(diagram, [tuple(n + 1 - i for i in range(1, n + 1))])
    if kind == "D" and t == 2:
        return make_action(diagram, [identity(n - 2) + (n, n - 1)])
    if kind == "D" and n == 4 and t == 3:
        # 1 -> 3 -> 4 -> 1
        return make_action(diagram, [(3, 2, 4, 1)])
    if kind == "D" and n == 4 and t == 6:
        return make_action(diagram, [(3, 2, 4, 1), (1, 2, 4, 3)])
    if kind == "E" and n == 6 and t == 2:
        return make_action(diagram, [(5, 4, 3, 2, 1, 6)])
    raise DomainError(f"no action of order {t} on {diagram.name}")


def brute_force_automorphisms(diagram):
    """Exhaustive check over all permutations; usable for small ranks only."""
    return sorted(p for p in itertools.permutations(diagram.vertices) if diagram.is_automorphism(p))


# Table-2 numbering -> Bourbaki numbering, per diagram name (classical types
# agree with Bourbaki and are omitted).
BOURBAKI = {
    "E6": {1: 1, 2: 3, 3: 4, 4: 5, 5: 6, 6: 2},
    "E7": {1: 7, 2: 6, 3: 5, 4: 4, 5: 3, 6: 1, 7: 2},
    "E8": {1: 8, 2: 7, 3: 6, 4: 5, 5: 4, 6: 3, 7: 1, 8: 2},
    "F4": {1: 4, 2: 3, 3: 2, 4: 1},
    "G2": {1: 1, 2: 2},
}

# The E7 and E8 index pictures in the source tables attach the branch vertex to
# chain vertex 3, mirroring the diagrams above.  Their printed labels translate
# to Bourbaki through these maps instead of ``BOURBAKI``.
TABLE_PICTURE_BOURBAKI = {
    "E7": {1: 1, 2: 3, 3: 4, 4: 5, 5: 6, 6: 7, 7: 2},
    "E8": {1: 1, 2: 3, 3: 4, 4: 5, 5: 6, 6: 7, 7: 8, 8: 2},
}


def picture_to_diagram(name):
    """Map from printed table-picture labels to this module's numbering."""
    pic = TABLE_PICTURE_BOURBAKI.get(name)
    if pic is None:
        return None
    back = {b: v for v, b in BOURBAKI[name].items()}
    return {k: back[b] for k, b in pic.items()}


def to_bourbaki(diagram, vertices):
    table = BOURBAKI.get(diagram.name)
    if table is None:
        return tuple(sorted(vertices))
    return tuple(sorted(table[v] for v in vertices))
