"""Invariant profiles of a group and the dictionary between profiles and p-indexes.

Cohomology classes (Tits classes, Rost-invariant values ``a``, ``b``,
``f3``, ``f5``, ``g3``) are modelled as elements of a finite abelian group
``Z/n1 + ... + Z/nk`` declared by the caller.  Properties that cannot be
decided abstractly -- whether a class is a symbol, whether it dies over the
quadratic extension ``K`` -- are carried as flags on the element.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field, fields, replace
from math import gcd

from . import catalog
from .catalog import family_rule, p_primary_part, parse_family, row_index
from .errors import DomainError, InconsistentProfile, MissingSlots, SchemaError
from .tits_index import TitsIndex

PROFILE_SCHEMA = "tits-profile/1"


@dataclass(frozen=True)
class CohGroup:
    cyclic_orders: tuple[int, ...]
    generator_labels: tuple[str, ...] = ()

    def __post_init__(self):
        orders = tuple(self.cyclic_orders)
        if not orders or any(not isinstance(m, int) or m < 1 for m in orders):
            raise DomainError(f"cyclic orders must be positive integers, got {self.cyclic_orders!r}")
        labels = tuple(self.generator_labels) or tuple(f"e{i + 1}" for i in range(len(orders)))
        if len(labels) != len(orders) or len(set(labels)) != len(labels):
            raise DomainError("generator labels must be unique, one per cyclic factor")
        object.__setattr__(self, "cyclic_orders", orders)
        object.__setattr__(self, "generator_labels", labels)

    @property
    def order(self):
        out = 1
        for m in self.cyclic_orders:
            out *= m
        return out

    @property
    def exponent(self):
        out = 1
        for m in self.cyclic_orders:
            out = out * m // gcd(out, m)
        return out

    def element(self, *coords, is_symbol=False, killed_by_K=False):
        return CohElement(self, tuple(coords), is_symbol, killed_by_K)

    def zero(self):
        return CohElement(self, (0,) * len(self.cyclic_orders))

    def elements(self):
        for coords in itertools.product(*(range(m) for m in self.cyclic_orders)):
            yield CohElement(self, coords)


def cyclic(m):
    return CohGroup((m,))


@dataclass(frozen=True)
class CohElement:
    """An element of a :class:`CohGroup` with semantic flags.

    The zero element always counts as a symbol killed by ``K``.
    """

    group: CohGroup
    coordinates: tuple[int, ...]
    is_symbol: bool = False
    killed_by_K: bool = False

    def __post_init__(self):
        coords = tuple(self.coordinates)
        if len(coords) != len(self.group.cyclic_orders):
            raise DomainError(f"expected {len(self.group.cyclic_orders)} coordinates, got {len(coords)}")
        coords = tuple(c % m for c, m in zip(coords, self.group.cyclic_orders))
        object.__setattr__(self, "coordinates", coords)
        if not any(coords):
            object.__setattr__(self, "is_symbol", True)
            object.__setattr__(self, "killed_by_K", True)

    @property
    def is_zero(self):
        return not any(self.coordinates)

    def __bool__(self):
        return not self.is_zero

    def _same_group(self, other):
        if not isinstance(other, CohElement) or other.group != self.group:
            raise DomainError("elements belong to different groups")

    def __mul__(self, k):
        return CohElement(self.group, tuple(k * c for c in self.coordinates), self.is_symbol, self.killed_by_K)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __add__(self, other):
        self._same_group(other)
        return CohElement(self.group, tuple(a + b for a, b in zip(self.coordinates, other.coordinates)))

    def __sub__(self, other):
        return self + (-other)

    def same_value(self, other):
        """Equality of the underlying group elements, ignoring flags."""
        self._same_group(other)
        return self.coordinates == other.coordinates

    @property
    def order(self):
        out = 1
        for c, m in zip(self.coordinates, self.group.cyclic_orders):
            k = m // gcd(c, m)
            out = out * k // gcd(out, k)
        return out

    def multiples(self):
        return {(k * self).coordinates for k in range(self.order)}

    def p_component(self, p):
        """The p-primary component, as an element of the same group."""
        n = self.group.exponent
        q = p_primary_part(n, p)
        rest = n // q
        # e = 1 mod q, e = 0 mod rest
        e = rest * pow(rest, -1, q) if q > 1 else 0
        return CohElement(self.group, tuple(e * c for c in self.coordinates), self.is_symbol, self.killed_by_K)

    def to_json(self):
        return {
            "group": list(self.group.cyclic_orders),
            "coords": list(self.coordinates),
            "is_symbol": self.is_symbol,
            "killed_by_K": self.killed_by_K,
        }

    @classmethod
    def from_json(cls, doc, field_name="element"):
        if not isinstance(doc, dict):
            raise SchemaError(field_name, "expected an object")
        group, coords = doc.get("group"), doc.get("coords")
        if not isinstance(group, list) or not all(isinstance(m, int) for m in group):
            raise SchemaError(f"{field_name}.group", "expected a list of cyclic orders")
        if not isinstance(coords, list) or not all(isinstance(c, int) for c in coords):
            raise SchemaError(f"{field_name}.coords", "expected a list of integers")
        try:
            return cls(CohGroup(tuple(group)), tuple(coords), bool(doc.get("is_symbol", False)), bool(doc.get("killed_by_K", False)))
        except DomainError as exc:
            raise SchemaError(field_name, str(exc)) from None


def same_subgroup(e1, e2):
    """Whether ``e1`` and ``e2`` generate the same cyclic subgroup."""
    e1._same_group(e2)
    return e1.multiples() == e2.multiples()


# -- profiles ---------------------------------------------------------------

_COH_SLOTS = ("tits_class", "f3", "f5", "g3", "b", "c")
_INT_SLOTS = ("n", "ind_A", "witt_index", "r", "tits_class_order")

# degree bounding the Tits algebra index, by rule key
_IND_DEGREE = {"1A": lambda n: n + 1, "2A": lambda n: n + 1, "C": lambda n: 2 * n, "1D": lambda n: 2 * n,
               "2D": lambda n: 2 * n, "1E6": lambda n: 27, "E7": lambda n: 8}


@dataclass(frozen=True)
class InvariantProfile:
    """Algebraic and cohomological data attached to one group.

    Unknown slots are ``None``.  ``a_components`` maps a prime to the
    p-torsion component of ``a``; for type 1E6 it falls back to ``f3``
    (p = 2) and ``g3`` (p = 3).  ``c`` is carried but never consulted.
    """

    family: str
    n: int | None = None
    ind_A: int | None = None
    witt_index: int | None = None
    r: int | None = None
    discriminant_trivial: bool | None = None
    tits_class: CohElement | None = None
    tits_class_order: int | None = None
    f3: CohElement | None = None
    f5: CohElement | None = None
    g3: CohElement | None = None
    b: CohElement | None = None
    c: CohElement | None = None
    a_components: tuple = ()
    J3: tuple[int, int] | None = None

    def __post_init__(self):
        qtype = parse_family(self.family, self.n)
        object.__setattr__(self, "family", qtype.name)
        object.__setattr__(self, "n", qtype.rank)
        comps = self.a_components
        if isinstance(comps, dict):
            comps = comps.items()
        object.__setattr__(self, "a_components", tuple(sorted((int(p), e) for p, e in comps)))
        if self.J3 is not None:
            object.__setattr__(self, "J3", tuple(self.J3))
        self._check(qtype)

    def _check(self, qtype):
        key = qtype.key
        if self.ind_A is not None:
            if not isinstance(self.ind_A, int) or self.ind_A < 1:
                raise DomainError(f"ind_A must be a positive integer, got {self.ind_A!r}")
            if key in _IND_DEGREE and _IND_DEGREE[key](qtype.rank) % self.ind_A:
                raise InconsistentProfile(
                    f"ind_A = {self.ind_A} does not divide {_IND_DEGREE[key](qtype.rank)} for {qtype.name}"
                )
        if self.tits_class_order not in (None, 1, 2, 3):
            raise DomainError(f"tits_class_order must be 1, 2 or 3, got {self.tits_class_order!r}")
        if self.tits_class_order is not None and self.ind_A is not None and key in ("1E6", "E7"):
            if (self.tits_class_order == 1) != (self.ind_A == 1):
                raise InconsistentProfile("the Tits algebra is split exactly when the Tits class is trivial")
        if self.discriminant_trivial is not None and key in ("1D", "2D"):
            if self.discriminant_trivial != (key == "1D"):
                raise InconsistentProfile(f"{qtype.name} needs discriminant_trivial = {key == '1D'}")
        if key == "F4" and self.f5 is not None and self.f3 is not None and self.f5 and not self.f3:
            raise InconsistentProfile("f5 is a multiple of f3: f3 = 0 forces f5 = 0")
        if self.J3 is not None and (len(self.J3) != 2 or any(not isinstance(j, int) or j < 0 for j in self.J3)):
            raise DomainError(f"J3 must be a pair of nonnegative integers, got {self.J3!r}")
        if self.b is not None and self.a_components and self.tits_trivial():
            for p, comp in self.a_components:
                if comp.group == self.b.group and self.b.group.exponent % p == 0:
                    if not comp.p_component(p).same_value(self.b.p_component(p)):
                        raise InconsistentProfile(f"the {p}-component of a must equal that of b when t_G = 0")

    @property
    def qtype(self):
        return parse_family(self.family, self.n)

    def a_component(self, p):
        for q, e in self.a_components:
            if q == p:
                return e
        if self.qtype.key == "1E6":
            return {2: self.f3, 3: self.g3}.get(p)
        return None

    def tits_trivial(self):
        """``True``/``False`` when known, else ``None``."""
        if self.tits_class is not None:
            return self.tits_class.is_zero
        if self.tits_class_order is not None:
            return self.tits_class_order == 1
        if self.ind_A is not None and self.qtype.key in ("1A", "C", "1E6", "E7"):
            return self.ind_A == 1
        return None

    def slots(self):
        return [f.name for f in fields(self) if f.name != "family" and getattr(self, f.name) not in (None, ())]

    def with_zeroed(self, slot):
        """Copy with one cohomological slot set to zero."""
        if slot == "a_components":
            return replace(self, a_components=tuple((p, e.group.zero()) for p, e in self.a_components))
        value = getattr(self, slot)
        if not isinstance(value, CohElement):
            raise DomainError(f"{slot} is not a cohomological slot")
        return replace(self, **{slot: value.group.zero()})

    def to_json(self):
        out = {"schema": PROFILE_SCHEMA, "family": self.family}
        for name in ("n", "ind_A", "witt_index", "r", "discriminant_trivial", "tits_class_order"):
            if getattr(self, name) is not None:
                out[name] = getattr(self, name)
        for name in _COH_SLOTS:
            if getattr(self, name) is not None:
                out[name] = getattr(self, name).to_json()
        if self.a_components:
            out["a_components"] = {str(p): e.to_json() for p, e in self.a_components}
        if self.J3 is not None:
            out["J3"] = list(self.J3)
        return out

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict):
            raise SchemaError("profile", "expected an object")
        schema = doc.get("schema", PROFILE_SCHEMA)
        if schema != PROFILE_SCHEMA:
            raise SchemaError("schema", f"expected {PROFILE_SCHEMA!r}, got {schema!r}")
        known = {f.name for f in fields(cls)} | {"schema"}
        for key in doc:
            if key not in known:
                raise SchemaError(key, "unknown profile slot")
        if not isinstance(doc.get("family"), str):
            raise SchemaError("family", "missing or not a string")
        kwargs = {"family": doc["family"]}
        for name in _INT_SLOTS:
            if name in doc:
                if not isinstance(doc[name], int) or isinstance(doc[name], bool):
                    raise SchemaError(name, "expected an integer")
                kwargs[name] = doc[name]
        if "discriminant_trivial" in doc:
            if not isinstance(doc["discriminant_trivial"], bool):
                raise SchemaError("discriminant_trivial", "expected a boolean")
            kwargs["discriminant_trivial"] = doc["discriminant_trivial"]
        for name in _COH_SLOTS:
            if name in doc:
                kwargs[name] = CohElement.from_json(doc[name], name)
        if "a_components" in doc:
            comps = doc["a_components"]
            if not isinstance(comps, dict) or not all(k.isdigit() for k in comps):
                raise SchemaError("a_components", "expected an object keyed by primes")
            kwargs["a_components"] = {int(k): CohElement.from_json(v, f"a_components.{k}") for k, v in comps.items()}
        if "J3" in doc:
            if not isinstance(doc["J3"], list) or len(doc["J3"]) != 2:
                raise SchemaError("J3", "expected a pair of integers")
            kwargs["J3"] = tuple(doc["J3"])
        try:
            return cls(**kwargs)
        except DomainError as exc:
            if isinstance(exc, SchemaError):
                raise
            raise SchemaError("profile", str(exc)) from None

    @classmethod
    def loads(cls, text):
        try:
            return cls.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise SchemaError("profile", f"invalid JSON: {exc}") from None


# -- profile -> index --------------------------------------------------------


@dataclass(frozen=True)
class Underdetermined:
    """The profile is compatible with several indexes; ``needs`` names what would decide."""

    candidates: tuple[TitsIndex, ...]
    needs: tuple[str, ...]
    reason: str

    def to_json(self):
        return {
            "underdetermined": True,
            "candidates": [ix.to_json() for ix in self.candidates],
            "needs": list(self.needs),
            "reason": self.reason,
        }


def _need(profile, *slots):
    missing = [s for s in slots if getattr(profile, s) is None]
    if missing:
        raise MissingSlots(f"{profile.family} needs slots {missing}", missing)
    return [getattr(profile, s) for s in slots]


def _comp(element, p):
    return None if element is None else element.p_component(p)


def _b_at(profile, p):
    (b,) = _need(profile, "b")
    return b.p_component(p)


def allowed_ind(text):
    """Parse an ``ind A`` table entry into the set of admissible indexes."""
    text = text.strip()
    if text.isdigit():
        return frozenset({int(text)})
    if text.startswith("divides "):
        m = int(text.split()[1])
        return frozenset(d for d in range(1, m + 1) if m % d == 0)
    if " or " in text:
        return frozenset(int(x) for x in text.split(" or "))
    raise DomainError(f"cannot parse index entry {text!r}")


def index_from_profile(profile, p, rules=None):
    """The Tits p-index determined by ``profile``, or :class:`Underdetermined`."""
    qtype = profile.qtype
    rule = family_rule(qtype, p=p, rules=rules)
    action = qtype.action()
    if rule.parameter_names == ():
        return TitsIndex(action, action.orbit_partition)
    key = qtype.key
    n = qtype.rank
    if key in catalog.CLASSICAL:
        return rule.emit(_classical_parameters(profile, p, key, n))
    row = lambda rid: row_index(qtype, rid, rules)  # noqa: E731
    handler = _EXCEPTIONAL[key]
    return handler(profile, p, row, rules)


def _classical_parameters(profile, p, key, n):
    if key == "B":
        (iw,) = _need(profile, "witt_index")
        if not 0 <= iw <= n:
            raise InconsistentProfile(f"Witt index {iw} out of range 0..{n}")
        return {"i_w": iw}
    (ind,) = _need(profile, "ind_A")
    d = p_primary_part(ind, p)
    if key == "1A":
        return {"d": d}
    (r,) = _need(profile, "r")
    if r < 0:
        raise InconsistentProfile("r must be nonnegative")
    rd = r * d
    if key == "2A" and rd > (n + 1) // 2:
        raise InconsistentProfile(f"r*d = {rd} exceeds half the degree {n + 1}")
    if key == "C":
        if rd > n:
            raise InconsistentProfile(f"r*d = {rd} exceeds n = {n}")
        if d == 1 and rd != n:
            raise InconsistentProfile("a split algebra with symplectic involution is hyperbolic: r*d must equal n")
    if key == "1D":
        if rd > n or rd == n - 1:
            raise InconsistentProfile(f"r*d = {rd} is not a Witt index for trivial discriminant (n = {n})")
    if key == "2D" and rd > n - 1:
        raise InconsistentProfile(f"r*d = {rd} exceeds n-1 = {n - 1} for nontrivial discriminant")
    return {"d": d, "r": r}


def _dichotomy(profile, p, row, rules):
    b = _b_at(profile, p) if profile.qtype.key != "F4" else None
    return row("anisotropic") if b else row(_top_row(profile))


def _top_row(profile):
    return "quasi-split" if profile.qtype.key == "3D4" else "split"


def _f4(profile, p, row, rules):
    if p == 2:
        (f3,) = _need(profile, "f3")
        if not f3:
            return row("split")
        (f5,) = _need(profile, "f5")
        return row("anisotropic") if f5 else row("1")
    g3 = profile.g3 if profile.g3 is not None else _comp(profile.b, 3)
    if g3 is None:
        raise MissingSlots("F4 at p = 3 needs g3 (or b)", ["g3"])
    return row("anisotropic") if g3.p_component(3) else row("split")


def _e6_inner(profile, p, row, rules):
    if p == 2:
        a2 = profile.a_component(2)
        if a2 is None:
            raise MissingSlots("1E6 at p = 2 needs f3", ["f3"])
        return row("1,5") if a2.p_component(2) else row("split")
    rows = load_rows("1E6", rules)
    if profile.J3 is not None:
        entries = [e for e in catalog.load_rules(rules)["tables"]["J3_1E6"] if tuple(e["J3"]) == profile.J3]
        if not entries:
            raise InconsistentProfile(f"J3 = {profile.J3} is not a value of the mod-3 J-invariant of 1E6")
        entry = entries[0]
        if profile.ind_A is not None and profile.ind_A not in allowed_ind(entry["ind_A"]):
            raise InconsistentProfile(f"J3 = {profile.J3} requires ind_A in {sorted(allowed_ind(entry['ind_A']))}")
        a3 = profile.a_component(3)
        if a3 is not None and profile.tits_trivial():
            if bool(a3.p_component(3)) != (entry["row"] != "split"):
                raise InconsistentProfile("g3 and J3 disagree on whether the group is split")
        return row(entry["row"])
    a3 = profile.a_component(3)
    if profile.tits_trivial() and a3 is not None:
        return row("anisotropic") if a3.p_component(3) else row("split")
    if profile.ind_A is not None and p_primary_part(profile.ind_A, 3) >= 9:
        return row("anisotropic")
    candidates = [r for r in rows if 3 in r["primes"]]
    if profile.ind_A is not None:
        candidates = [r for r in candidates if p_primary_part(profile.ind_A, 3) in allowed_ind(r["ind_A"])]
    needs = ("J3",) if profile.tits_trivial() is False else ("J3", "g3")
    return Underdetermined(tuple(row(r["id"]) for r in candidates), needs,
                           "the 3-index of 1E6 is fixed by J3, or by g3 when the Tits class is trivial")


def _e6_outer(profile, p, row, rules):
    b = _b_at(profile, 2)
    if not b:
        return row("quasi-split")
    if 2 * b:
        return row("anisotropic")
    if not b.is_symbol:
        return row("6")
    return row("1,5;6") if b.killed_by_K else row("1,5")


def _e7(profile, p, row, rules):
    if p == 3:
        return row("6") if _b_at(profile, 3) else row("split")
    rows = [r for r in load_rows("E7", rules) if 2 in r["primes"]]
    if profile.ind_A is not None:
        ind = p_primary_part(profile.ind_A, 2)
        rows = [r for r in rows if ind in allowed_ind(r["ind_A"])]
    if len(rows) == 1:
        return row(rows[0]["id"])
    return Underdetermined(tuple(row(r["id"]) for r in rows), ("ind_A",) if profile.ind_A is None else (),
                           "no invariant separating the 2-indexes of E7 beyond ind A is available")


def _e8(profile, p, row, rules):
    if p == 5:
        return row("anisotropic") if _b_at(profile, 5) else row("split")
    if p == 3:
        by_b = None
        if profile.b is not None:
            b = profile.b.p_component(3)
            by_b = "split" if not b else ("6,7" if b.is_symbol else "anisotropic")
        by_j = None
        if profile.J3 is not None:
            entries = [e for e in catalog.load_rules(rules)["tables"]["J3_E8"] if tuple(e["J3"]) == profile.J3]
            if not entries:
                raise InconsistentProfile(f"J3 = {profile.J3} is not a value of the mod-3 J-invariant of E8")
            by_j = entries[0]["row"]
        if by_b and by_j and by_b != by_j:
            raise InconsistentProfile(f"b and J3 = {profile.J3} disagree")
        if by_b or by_j:
            return row(by_b or by_j)
        raise MissingSlots("E8 at p = 3 needs b or J3", ["b", "J3"])
    rows = [r for r in load_rows("E8", rules) if 2 in r["primes"]]
    return Underdetermined(tuple(row(r["id"]) for r in rows), (),
                           "no invariant separating the 2-indexes of E8 is available")


_EXCEPTIONAL = {"G2": _dichotomy, "3D4": _dichotomy, "F4": _f4, "1E6": _e6_inner, "2E6": _e6_outer,
                "E7": _e7, "E8": _e8}


def load_rows(key, rules=None):
    return catalog.load_rules(rules)["exceptional"][key]["rows"]


# -- index -> constraints ----------------------------------------------------


@dataclass(frozen=True)
class Condition:
    """A predicate on one profile slot.

    kinds: ``zero``/``nonzero`` (of the p-component), ``symbol``/``nonsymbol``
    (nonzero with that flag), ``h3_2`` (nonzero 2-torsion with the flags in
    ``value``), ``order4`` (not 2-torsion), ``eq``, ``in``.
    """

    slot: str
    kind: str
    value: object = None
    prime: int | None = None

    def holds(self, profile):
        v = getattr(profile, self.slot)
        if self.slot in ("f3", "g3") and v is None and profile.qtype.key == "1E6":
            v = profile.a_component({"f3": 2, "g3": 3}[self.slot])
        if v is None:
            return False
        if self.kind == "eq":
            return v == self.value
        if self.kind == "in":
            return v in self.value
        if self.prime is not None:
            v = v.p_component(self.prime)
        if self.kind == "zero":
            return v.is_zero
        if self.kind == "nonzero":
            return not v.is_zero
        if self.kind == "symbol":
            return not v.is_zero and v.is_symbol
        if self.kind == "nonsymbol":
            return not v.is_zero and not v.is_symbol
        if self.kind == "order4":
            return not (2 * v).is_zero
        if self.kind == "h3_2":
            symbol, killed = self.value
            return (not v.is_zero and (2 * v).is_zero and v.is_symbol == symbol
                    and (killed is None or v.killed_by_K == killed))
        raise DomainError(f"unknown condition kind {self.kind!r}")

    def describe(self):
        if self.kind in ("eq", "in"):
            shown = sorted(self.value) if self.kind == "in" else self.value
            return f"{self.slot} {'=' if self.kind == 'eq' else 'in'} {shown}"
        if self.kind == "h3_2":
            symbol, killed = self.value
            text = "symbol" if symbol else "non-symbol"
            if killed is not None:
                text += ", killed by K" if killed else ", not killed by K"
            return f"{self.slot}: nonzero 2-torsion {text}"
        return f"{self.slot}: {self.kind}"


@dataclass(frozen=True)
class Constraints:
    """Profiles mapping to one index: a disjunction of conjunctions of :class:`Condition`.

    ``summary`` repeats the table wording for the slots the tables list
    (e.g. ``ind_A: "divides 8"``).
    """

    family: str
    prime: int
    index: TitsIndex
    alternatives: tuple[tuple[Condition, ...], ...]
    summary: tuple[tuple[str, str], ...] = ()
    note: str = ""

    def get(self, slot):
        return dict(self.summary).get(slot)

    def satisfied_by(self, profile):
        return any(all(c.holds(profile) for c in alt) for alt in self.alternatives)

    def profiles(self):
        """Concrete sample profiles satisfying the constraints (small grids)."""
        out = []
        for alt in self.alternatives:
            choices = [[(c.slot, v) for v in _samples(c, self.family, self.prime)] for c in alt]
            for combo in itertools.product(*choices):
                kwargs = dict(combo)
                try:
                    prof = InvariantProfile(self.family, **kwargs)
                except InconsistentProfile:
                    continue
                if all(c.holds(prof) for c in alt):
                    out.append(prof)
        return out

    def to_json(self):
        return {
            "family": self.family,
            "prime": self.prime,
            "index": self.index.to_json(),
            "alternatives": [[c.describe() for c in alt] for alt in self.alternatives],
            "summary": dict(self.summary),
            "note": self.note,
        }


def _default_group(slot, family, p):
    if slot in ("f3", "f5"):
        return cyclic(2)
    if slot == "g3":
        return cyclic(3)
    key = parse_family(family).key
    if key == "2E6":
        return cyclic(4)
    return cyclic(p)


def _samples(cond, family, p):
    if cond.kind == "eq":
        return [cond.value]
    if cond.kind == "in":
        return sorted(cond.value)
    group = _default_group(cond.slot, family, p)
    elements = list(group.elements())
    out = []
    for e in elements:
        for symbol, killed in itertools.product((True, False), repeat=2):
            out.append(CohElement(group, e.coordinates, symbol, killed))
    return sorted(set(out), key=lambda e: (e.coordinates, e.is_symbol, e.killed_by_K))


def constraints_for_index(index, p, rules=None):
    """Conditions on a profile under which :func:`index_from_profile` yields ``index``."""
    qtype = catalog.family_of(index)
    rule = family_rule(qtype, p=p, rules=rules)
    if index not in rule.indexes():
        raise DomainError(f"{index} is not a Tits {p}-index")
    name = qtype.name
    if rule.parameter_names == ():
        return Constraints(name, p, index, ((),), (("all", "trivial"),), "only the split index occurs")
    key = qtype.key
    if key in catalog.CLASSICAL:
        return _classical_constraints(index, p, rule, qtype)
    return _exceptional_constraints(index, p, qtype, rules)


def _classical_constraints(index, p, rule, qtype):
    n = qtype.rank
    key = qtype.key
    alternatives = []
    degree = n + 1 if key in ("1A", "2A") else 2 * n
    for params in rule.parameters():
        if rule.emit(params) != index:
            continue
        conds = []
        if "d" in params:
            inds = frozenset(m for m in range(1, degree + 1) if degree % m == 0 and p_primary_part(m, p) == params["d"])
            conds.append(Condition("ind_A", "in", inds))
        if "r" in params:
            conds.append(Condition("r", "eq", params["r"]))
        if "i_w" in params:
            conds.append(Condition("witt_index", "eq", params["i_w"]))
        alternatives.append(tuple(conds))
    return Constraints(qtype.name, p, index, tuple(alternatives))


def _exceptional_constraints(index, p, qtype, rules):
    key = qtype.key
    row = next(r for r in load_rows(key, rules) if row_index(qtype, r["id"], rules) == index)
    rid = row["id"]
    summary = tuple((k, str(row[k])) for k in ("ind_A", "f3", "f5", "g3", "b", "condition") if k in row)
    zero = lambda slot: Condition(slot, "zero", prime=p)  # noqa: E731
    nonzero = lambda slot: Condition(slot, "nonzero", prime=p)  # noqa: E731
    top = rid in ("split", "quasi-split")
    note = ""
    if (key, p) in {("G2", 2), ("3D4", 3), ("E8", 5)}:
        alts = ((zero("b"),),) if top else ((nonzero("b"),),)
    elif key == "F4" and p == 2:
        alts = {"split": ((zero("f3"), zero("f5")),), "1": ((nonzero("f3"), zero("f5")),),
                "anisotropic": ((nonzero("f3"), nonzero("f5")),)}[rid]
    elif key == "F4":
        alts = ((zero("g3"),),) if top else ((nonzero("g3"),),)
    elif key == "1E6" and p == 2:
        alts = ((zero("f3"),),) if top else ((nonzero("f3"),),)
    elif key == "1E6":
        entries = [e for e in catalog.load_rules(rules)["tables"]["J3_1E6"] if e["row"] == rid]
        alts = tuple((Condition("J3", "eq", tuple(e["J3"])), Condition("ind_A", "in", allowed_ind(e["ind_A"])))
                     for e in entries)
        trivial = Condition("ind_A", "eq", 1)
        if rid == "split":
            alts += ((trivial, zero("g3")),)
        elif rid == "anisotropic":
            alts += ((trivial, nonzero("g3")),)
    elif key == "2E6":
        alts = {"quasi-split": ((zero("b"),),),
                "1,5;6": ((Condition("b", "h3_2", (True, True), 2),),),
                "1,5": ((Condition("b", "h3_2", (True, False), 2),),),
                "6": ((Condition("b", "h3_2", (False, None), 2),),),
                "anisotropic": ((Condition("b", "order4", prime=2),),)}[rid]
    elif key == "E7" and p == 3:
        alts = ((zero("b"),),) if top else ((nonzero("b"),),)
    elif key == "E7":
        alts = ((Condition("ind_A", "in", allowed_ind(row["ind_A"])),),)
        note = "ind A is the only tabulated invariant for the 2-indexes of E7"
    elif key == "E8" and p == 3:
        entries = [e for e in catalog.load_rules(rules)["tables"]["J3_E8"] if e["row"] == rid]
        by_b = {"split": zero("b"), "6,7": Condition("b", "symbol", prime=3),
                "anisotropic": Condition("b", "nonsymbol", prime=3)}[rid]
        alts = tuple((Condition("J3", "eq", tuple(e["J3"])),) for e in entries) + ((by_b,),)
    else:
        alts = ((),)
        note = "no invariant separating the 2-indexes of E8 is available"
    return Constraints(qtype.name, p, index, alts, summary, note)
