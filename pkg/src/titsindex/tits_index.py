"""The Tits index value type: a diagram, a Galois action and circled orbits."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .diagrams import DynkinDiagram, GaloisAction, make_action, standard_action, trivial_action
from .errors import DomainError, SchemaError

SCHEMA = "tits-index/1"


def _canonical_orbits(orbits):
    return tuple(sorted(tuple(sorted(o)) for o in orbits))


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def to_json(self):
        return {"code": self.code, "message": self.message}


@dataclass(frozen=True)
class TitsIndex:
    """A Tits index.

    ``distinguished`` holds the circled orbits (the set usually written
    delta_0); the anisotropic part ``Delta_0`` is its complement.  Orbits are
    kept sorted, each as an ascending tuple, so equal indexes compare and hash
    equal and serialize identically.  Construction does not validate; call
    :func:`validate`.
    """

    action: GaloisAction
    distinguished: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "distinguished", _canonical_orbits(self.distinguished))

    @property
    def diagram(self):
        return self.action.diagram

    @property
    def t(self):
        return self.action.t

    @property
    def orbits(self):
        return self.action.orbit_partition

    @cached_property
    def distinguished_vertices(self):
        return frozenset(v for o in self.distinguished for v in o)

    @cached_property
    def anisotropic_vertices(self):
        return frozenset(self.diagram.vertices) - self.distinguished_vertices

    @property
    def quasi_split_type(self):
        return quasi_split_type_name(self.diagram, self.t)

    def to_json(self):
        return {
            "schema": SCHEMA,
            "diagram": self.diagram.to_json(),
            "t": self.t,
            "orbits": [list(o) for o in self.orbits],
            "distinguished": [list(o) for o in self.distinguished],
        }

    def dumps(self):
        """Canonical one-line serialization."""
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __str__(self):
        circled = "".join("{" + ",".join(map(str, o)) + "}" for o in self.distinguished)
        return f"{self.quasi_split_type}[{circled or '-'}]"

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict):
            raise SchemaError("index", "expected an object")
        schema = doc.get("schema", SCHEMA)
        if schema != SCHEMA:
            raise SchemaError("schema", f"expected {SCHEMA!r}, got {schema!r}")
        if "diagram" not in doc:
            raise SchemaError("diagram", "missing")
        diagram = DynkinDiagram.from_json(doc["diagram"])
        orbits = doc.get("orbits")
        if orbits is None:
            t = doc.get("t", 1)
            if not isinstance(t, int):
                raise SchemaError("t", f"expected an integer, got {t!r}")
            try:
                action = standard_action(diagram, t)
            except DomainError as exc:
                raise SchemaError("t", str(exc)) from None
        else:
            action = _action_from_orbits(diagram, _int_lists(orbits, "orbits"))
            if "t" in doc and doc["t"] != action.t:
                raise SchemaError("t", f"t={doc['t']} disagrees with the orbit structure (order {action.t})")
        distinguished = doc.get("distinguished")
        if distinguished is None:
            raise SchemaError("distinguished", "missing")
        return cls(action, _int_lists(distinguished, "distinguished"))

    @classmethod
    def loads(cls, text):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError("index", f"invalid JSON: {exc}") from None
        return cls.from_json(doc)


def quasi_split_type_name(diagram, t):
    """``"2A5"``, ``"1D6"``, ``"1E6"``, ``"B4"``, ``"E8"`` ..."""
    if diagram.type_label in "AD" or diagram.name == "E6":
        return f"{t}{diagram.name}"
    return diagram.name


def _int_lists(value, field):
    if not isinstance(value, list) or not all(
        isinstance(o, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in o) for o in value
    ):
        raise SchemaError(field, "expected a list of integer lists")
    return value


def _action_from_orbits(diagram, orbits):
    """Recover the standard action whose orbit partition is ``orbits``."""
    wanted = _canonical_orbits(orbits)
    for t in (1, 2, 3, 6):
        try:
            action = standard_action(diagram, t)
        except DomainError:
            continue
        if action.orbit_partition == wanted:
            return action
    if diagram.type_label == "D" and diagram.rank == 4:
        # order-2 actions on D4 fixing 3 or 4 instead of 1
        for gen in [(4, 2, 3, 1), (3, 2, 1, 4)]:
            action = make_action(diagram, [gen])
            if action.orbit_partition == wanted:
                return action
    raise SchemaError("orbits", f"{[list(o) for o in wanted]} is not the orbit set of a diagram action on {diagram.name}")


def make_index(diagram, distinguished, t=1, action=None):
    """Convenience constructor; ``distinguished`` may be ``"all"``."""
    if action is None:
        action = trivial_action(diagram) if t == 1 else standard_action(diagram, t)
    if distinguished == "all":
        distinguished = action.orbit_partition
    else:
        distinguished = [action.orbit_of(v) if isinstance(v, int) else v for v in distinguished]
    return TitsIndex(action, distinguished)


def quasi_split(action):
    return TitsIndex(action, action.orbit_partition)


def anisotropic(action):
    return TitsIndex(action, ())


def validate(index):
    """Return the list of violated index axioms (empty when the index is valid)."""
    found = []
    orbits = set(index.orbits)
    vertices = set(index.diagram.vertices)
    seen = set()
    for o in index.distinguished:
        stray = [v for v in o if v not in vertices]
        if stray:
            found.append(Violation("unknown_vertex", f"vertices {stray} are not on {index.diagram.name}"))
            continue
        if o not in orbits:
            found.append(
                Violation("not_an_orbit", f"{{{','.join(map(str, o))}}} is not an orbit of the Galois action")
            )
        if seen & set(o):
            found.append(Violation("overlap", f"{{{','.join(map(str, o))}}} overlaps another distinguished orbit"))
        seen |= set(o)
    if len(set(index.distinguished)) != len(index.distinguished):
        found.append(Violation("duplicate", "an orbit is listed twice"))
    return found


def is_valid(index):
    return not validate(index)


def is_quasi_split(index):
    return set(index.distinguished) == set(index.orbits)


def is_anisotropic(index):
    return not index.distinguished


def split_rank(index):
    return len(index.distinguished)


def base_change_leq(lower, higher):
    """Whether ``higher`` can be the index of ``lower``'s group over an extension.

    The Galois image can only shrink and circled vertices can only be added.
    """
    if lower.diagram != higher.diagram:
        raise DomainError(f"cannot compare indexes on {lower.diagram.name} and {higher.diagram.name}")
    return higher.action.group <= lower.action.group and lower.distinguished_vertices <= higher.distinguished_vertices
