"""Admissible Tits p-indexes per quasi-split type and prime.

Classical families are generated from integer parameters (algebra index
``d``, Witt index ``r`` or ``i_w``); exceptional families are literal table
rows read from the rules file.  The rules file defaults to the copy shipped in
``titsindex/data`` and can be replaced with the ``TITS_RULES`` environment
variable or an explicit ``rules=`` argument.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .diagrams import build_diagram, check_rank, picture_to_diagram, standard_action
from .errors import DomainError
from .tits_index import TitsIndex, quasi_split_type_name

CLASSICAL = ("1A", "2A", "B", "C", "1D", "2D")


@lru_cache(maxsize=None)
def _load(path):
    if path is None:
        text = resources.files("titsindex").joinpath("data/rules.json").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    rules = json.loads(text)
    if rules.get("version") != 1:
        raise DomainError(f"unsupported rules version {rules.get('version')!r}")
    return rules


def load_rules(path=None):
    """The rule tables: ``path``, else ``$TITS_RULES``, else the packaged default."""
    if path is None:
        path = os.environ.get("TITS_RULES") or None
    return _load(path)


# -- small integer helpers -------------------------------------------------


def prime_factors(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(p):
    return isinstance(p, int) and p >= 2 and prime_factors(p) == [p]


def p_primary_part(d, p):
    """``p ** v_p(d)``."""
    if d < 1:
        raise DomainError(f"expected a positive integer, got {d}")
    out = 1
    while d % p == 0:
        d //= p
        out *= p
    return out


def p_power_divisors(m, p):
    out, d = [], 1
    while m % d == 0:
        out.append(d)
        d *= p
    return out


def is_power_of(t, p):
    while t % p == 0:
        t //= p
    return t == 1


# -- families ---------------------------------------------------------------

_FAMILY_RE = re.compile(r"^([1-6])?([A-G])(\d+)?$")


@dataclass(frozen=True)
class QuasiSplitType:
    """``t`` (order of the Galois image), Dynkin type and rank."""

    t: int
    type_label: str
    rank: int

    @property
    def name(self):
        return quasi_split_type_name(self.diagram, self.t)

    @property
    def diagram(self):
        return build_diagram(self.type_label, self.rank)

    @property
    def key(self):
        """Rule-table key: ``"1A"``, ``"2D"``, ``"B"``, ``"F4"``, ``"2E6"`` ..."""
        if self.type_label in "BC":
            return self.type_label
        if self.type_label in "AD" and not (self.type_label == "D" and self.t == 3):
            return f"{self.t}{self.type_label}"
        return self.name

    def action(self):
        return standard_action(self.diagram, self.t)

    def __str__(self):
        return self.name


def parse_family(family, rank=None):
    """Parse labels like ``"A"``, ``"2A"``, ``"2A5"``, ``"E8"``, ``"2E6"``, ``"3D4"``."""
    if isinstance(family, QuasiSplitType):
        return family
    m = _FAMILY_RE.match(str(family).strip())
    if not m:
        raise DomainError(f"cannot parse family {family!r}")
    t = int(m.group(1) or 1)
    type_label = m.group(2)
    if m.group(3):
        named = int(m.group(3))
        if rank is not None and rank != named:
            raise DomainError(f"rank {rank} disagrees with family {family!r}")
        rank = named
    if rank is None:
        fixed = {"F": 4, "G": 2}
        if type_label not in fixed:
            raise DomainError(f"family {family!r} needs a rank")
        rank = fixed[type_label]
    check_rank(type_label, rank)
    allowed = {1}
    if type_label == "A" and rank >= 2:
        allowed = {1, 2}
    elif type_label == "D":
        allowed = {1, 2, 3, 6} if rank == 4 else {1, 2}
    elif type_label == "E" and rank == 6:
        allowed = {1, 2}
    if t not in allowed:
        raise DomainError(f"no quasi-split type {t}{type_label}{rank}: t must be one of {sorted(allowed)}")
    return QuasiSplitType(t, type_label, rank)


def family_of(index):
    return parse_family(f"{index.t}{index.diagram.name}")


def torsion_primes(type_label, rank, rules=None):
    """Primes ``p`` for which a group of this type can have a non-split p-index."""
    check_rank(type_label, rank)
    if type_label == "A":
        return frozenset({2, *prime_factors(rank + 1)})
    by_type = load_rules(rules)["torsion_primes"]["by_type"]
    name = f"{type_label}{rank}"
    return frozenset(by_type.get(name, by_type.get(type_label, [])))


# -- rules ------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyRule:
    """Parameter space and emitter for the p-indexes of one quasi-split type.

    ``parameters()`` yields dicts of named integers (or a table row id for
    exceptional families); ``emit(params)`` turns one into a :class:`TitsIndex`.
    Different parameters may emit the same index.
    """

    family: QuasiSplitType
    prime: int
    parameter_names: tuple[str, ...]
    _params: tuple = field(repr=False, default=())
    _emit: object = field(repr=False, compare=False, default=None)

    def parameters(self):
        return [dict(p) for p in self._params]

    def emit(self, params):
        return self._emit(params)

    def indexes(self):
        return sort_indexes({self.emit(p) for p in self.parameters()})


def sort_indexes(indexes):
    """Descending split rank, then lexicographic distinguished orbits."""
    return sorted(indexes, key=lambda ix: (-len(ix.distinguished), ix.distinguished))


def _multiples(d, top):
    return [k for k in range(d, top + 1, d)]


def _classical_rule(family, p, entry):
    n = family.rank
    action = family.action()
    key = family.key
    a, b = entry.get("degree", [0, 0])
    degree = a * n + b

    def singletons(vs):
        return [(v,) for v in vs]

    if key == "1A":
        params = [(("d", d),) for d in p_power_divisors(n + 1, p)]

        def emit(q):
            return TitsIndex(action, singletons(_multiples(q["d"], n + 1 - q["d"])))

        return params, ("d",), emit

    if key == "2A":
        params = [(("d", d), ("r", r)) for d in p_power_divisors(degree, 2) for r in range((n + 1) // 2 // d + 1)]

        def emit(q):
            d, r = q["d"], q["r"]
            return TitsIndex(action, [tuple(sorted({i * d, n + 1 - i * d})) for i in range(1, r + 1)])

        return params, ("d", "r"), emit

    if key == "B":
        params = [(("i_w", i),) for i in range(n + 1)]

        def emit(q):
            return TitsIndex(action, singletons(range(1, q["i_w"] + 1)))

        return params, ("i_w",), emit

    max_rd = n + entry.get("max_rd_offset", 0)
    excluded = {n + off for off in entry.get("excluded_rd_offsets", [])}
    forced = entry.get("split_algebra_rd_offset")
    params = []
    for d in p_power_divisors(degree, 2):
        for r in range(max_rd // d + 1):
            if r * d in excluded:
                continue
            if forced is not None and d == 1 and r * d != n + forced:
                continue
            params.append((("d", d), ("r", r)))

    fork_rd = entry.get("fork_rd_offset")
    orbit_rd = entry.get("orbit_rd_offset")

    def emit(q):
        d, r = q["d"], q["r"]
        if fork_rd is not None and r * d == n + fork_rd:
            return TitsIndex(action, singletons(sorted(set(_multiples(d, (r - 1) * d)) | {n - 1, n})))
        if orbit_rd is not None and r * d == n + orbit_rd:
            return TitsIndex(action, singletons(_multiples(d, (r - 1) * d)) + [(n - 1, n)])
        return TitsIndex(action, singletons(_multiples(d, r * d)))

    return params, ("d", "r"), emit


def _row_index(action, row, relabel=None):
    if row["distinguished"] == "all":
        return TitsIndex(action, action.orbit_partition)
    relabel = relabel or {}
    return TitsIndex(action, [tuple(relabel.get(v, v) for v in o) for o in row["distinguished"]])


def _relabel(family, rules=None):
    """Row labels of E7/E8 follow the mirrored table pictures; translate them."""
    entry = load_rules(rules)["exceptional"].get(family.key, {})
    return picture_to_diagram(family.name) if "picture_branch_at" in entry else None


def exceptional_rows(family, rules=None):
    family = parse_family(family)
    try:
        return load_rules(rules)["exceptional"][family.key]["rows"]
    except KeyError:
        raise DomainError(f"no table rows for {family.name}") from None


def row_index(family, row_id, rules=None):
    family = parse_family(family)
    for row in exceptional_rows(family, rules):
        if row["id"] == row_id:
            return _row_index(family.action(), row, _relabel(family, rules))
    raise DomainError(f"{family.name} has no table row {row_id!r}")


def family_rule(family, rank=None, p=2, rules=None):
    """The :class:`FamilyRule` for ``family`` at prime ``p``."""
    family = parse_family(family, rank)
    if not is_prime(p):
        raise DomainError(f"{p!r} is not a prime")
    if not is_power_of(family.t, p):
        raise DomainError(
            f"{family.name} does not occur over {p}-special fields: the Galois image order {family.t} is not a power of {p}"
        )
    data = load_rules(rules)
    action = family.action()
    split = lambda q: TitsIndex(action, action.orbit_partition)  # noqa: E731
    only_split = FamilyRule(family, p, (), ((),), split)

    if p not in torsion_primes(family.type_label, family.rank, rules):
        return only_split
    for entry in data.get("split_only", []):
        if entry["family"] == family.name and entry["prime"] == p:
            return only_split

    key = family.key
    if key in data["classical"]:
        entry = data["classical"][key]
        if entry["primes"] != "any" and p not in entry["primes"]:
            return only_split
        params, names, emit = _classical_rule(family, p, entry)
        return FamilyRule(family, p, names, tuple(params), emit)

    if key in data["exceptional"]:
        rows = [r for r in data["exceptional"][key]["rows"] if p in r["primes"]]
        if not rows:
            return only_split
        by_id = {r["id"]: r for r in rows}
        relabel = _relabel(family, rules)
        return FamilyRule(
            family, p, ("row",), tuple((("row", r["id"]),) for r in rows),
            lambda q: _row_index(action, by_id[q["row"]], relabel),
        )
    raise DomainError(f"no rule for {family.name} at p = {p}")


def enumerate_indexes(family, rank=None, p=2, rules=None):
    """All Tits p-indexes of ``family``, duplicate-free, in canonical order."""
    return family_rule(family, rank, p, rules).indexes()


def admissible(index, p, rules=None):
    """Whether ``index`` occurs as a Tits p-index."""
    try:
        family = family_of(index)
        candidates = enumerate_indexes(family, p=p, rules=rules)
    except DomainError:
        return False
    return index in candidates


def signature_of_real_form(index, rules=None):
    """Killing-form signature of the real form with this index, if the tables list one."""
    try:
        family = family_of(index)
        rows = exceptional_rows(family, rules)
    except DomainError:
        return None
    action = index.action
    if action != family.action():
        return None
    relabel = _relabel(family, rules)
    for row in rows:
        if _row_index(action, row, relabel) == index:
            return row.get("signature")
    return None
