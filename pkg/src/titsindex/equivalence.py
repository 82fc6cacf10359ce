"""Motivic equivalence of two groups, prime by prime.

Each verdict is ``equivalent``, ``not_equivalent`` or
``criterion_unavailable``; the last is returned whenever no tabulated
criterion applies, instead of guessing from index equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import is_prime, p_primary_part, prime_factors, torsion_primes
from .errors import DomainError, MissingSlots
from .invariants import same_subgroup

EQUIVALENT = "equivalent"
NOT_EQUIVALENT = "not_equivalent"
UNAVAILABLE = "criterion_unavailable"

# exponent of the center of the simply connected group, by Dynkin type
_CENTER_EXPONENT = {"B": 2, "C": 2, "D": 2, "G": 1, "F": 1, "E6": 3, "E7": 2, "E8": 1}


@dataclass(frozen=True)
class Verdict:
    prime: int | None
    verdict: str
    criterion: str | None = None
    citations: tuple[str, ...] = ()
    note: str = ""
    per_prime: tuple["Verdict", ...] = ()

    def to_json(self):
        out = {"verdict": self.verdict}
        if self.prime is not None:
            out["prime"] = self.prime
        out["criterion"] = self.criterion
        out["citations"] = list(self.citations)
        if self.note:
            out["note"] = self.note
        if self.per_prime:
            out["per_prime"] = [v.to_json() for v in self.per_prime]
        return out


def _center_exponent(qtype):
    if qtype.type_label == "A":
        return qtype.rank + 1
    return _CENTER_EXPONENT.get(qtype.diagram.name, _CENTER_EXPONENT.get(qtype.type_label, 1))


def _tits_p_trivial(profile, p):
    if profile.tits_class is not None:
        return profile.tits_class.p_component(p).is_zero
    if profile.tits_class_order is not None:
        return profile.tits_class_order % p != 0
    if profile.ind_A is not None and profile.qtype.key in ("1A", "C", "1E6", "E7"):
        return p_primary_part(profile.ind_A, p) == 1
    return None


def tits_algebra_compatible(p1, p2, p):
    """Whether the p-parts of the Tits classes generate the same subgroup.

    A necessary condition for motivic equivalence mod p.  Raises
    :class:`MissingSlots` when the profiles do not decide it.
    """
    if p1.qtype != p2.qtype:
        raise DomainError(f"profiles have different types: {p1.family} and {p2.family}")
    if _center_exponent(p1.qtype) % p:
        return True
    if p1.tits_class is not None and p2.tits_class is not None:
        return same_subgroup(p1.tits_class.p_component(p), p2.tits_class.p_component(p))
    t1, t2 = _tits_p_trivial(p1, p), _tits_p_trivial(p2, p)
    if t1 is not None and t2 is not None and (t1 or t2):
        return t1 == t2
    raise MissingSlots("deciding Tits-class compatibility needs the classes themselves", ["tits_class"])


def _slot(profile, name, p):
    value = getattr(profile, name)
    if value is None and profile.qtype.key == "1E6" and name in ("f3", "g3"):
        value = profile.a_component({"f3": 2, "g3": 3}[name])
    if value is None:
        raise MissingSlots(f"{profile.family} needs slot {name}", [name])
    return value.p_component(p)


def motivic_equivalent_mod_p(p1, p2, p):
    """The tabulated criterion for motivic equivalence mod ``p``."""
    if not is_prime(p):
        raise DomainError(f"{p!r} is not a prime")
    if p1.qtype != p2.qtype:
        return Verdict(p, NOT_EQUIVALENT, "quasi_split_type", (),
                       f"no diagram isomorphism f: {p1.family} and {p2.family} have different quasi-split types")
    qtype = p1.qtype
    if p not in torsion_primes(qtype.type_label, qtype.rank):
        return Verdict(p, EQUIVALENT, "non_torsion_prime", ("torsion_primes",),
                       f"{p} is not a torsion prime: both groups are split over every {p}-special field")
    try:
        if not tits_algebra_compatible(p1, p2, p):
            return Verdict(p, NOT_EQUIVALENT, "tits_algebra_necessary", (),
                           "the p-parts of the Tits classes generate different subgroups")
    except MissingSlots:
        pass

    key = qtype.key
    if (key, p) in {("G2", 2), ("3D4", 3), ("F4", 3), ("E8", 5)}:
        name = "g3" if key == "F4" and p1.g3 is not None and p2.g3 is not None else "b"
        ok = same_subgroup(_slot(p1, name, p), _slot(p2, name, p))
        note = "for G2, motivic equivalence mod 2 coincides with isomorphism" if key == "G2" else ""
        return Verdict(p, EQUIVALENT if ok else NOT_EQUIVALENT, f"{key}_mod{p}_{name}_subgroup", ("dichotomy",), note)
    if (key, p) == ("F4", 2):
        ok = all(_slot(p1, s, 2).same_value(_slot(p2, s, 2)) for s in ("f3", "f5"))
        return Verdict(p, EQUIVALENT if ok else NOT_EQUIVALENT, "F4_mod2_f3_f5", ("F4",))
    if key == "1E6":
        if p == 2:
            ok = _slot(p1, "f3", 2).same_value(_slot(p2, "f3", 2))
            return Verdict(p, EQUIVALENT if ok else NOT_EQUIVALENT, "1E6_mod2_f3", ("1E6", "1E6_trivial_tits_class"))
        if p1.tits_trivial() and p2.tits_trivial():
            ok = same_subgroup(_slot(p1, "g3", 3), _slot(p2, "g3", 3))
            return Verdict(p, EQUIVALENT if ok else NOT_EQUIVALENT, "1E6_a_subgroup", ("1E6_trivial_tits_class",))
    if (key, p) == ("E7", 3):
        b1, b2 = _slot(p1, "b", 3), _slot(p2, "b", 3)
        ok = b1.same_value(b2) or b1.same_value(-b2)
        return Verdict(p, EQUIVALENT if ok else NOT_EQUIVALENT, "E7_mod3_pm_b", ("E7_mod3",))
    return Verdict(p, UNAVAILABLE, None, (), f"no criterion is tabulated for {qtype.name} at p = {p}")


def motivic_equivalent(p1, p2):
    """Conjunction over the torsion primes of the type.

    Any ``not_equivalent`` prime decides; otherwise any unavailable prime
    makes the whole verdict unavailable.
    """
    if p1.qtype != p2.qtype:
        return motivic_equivalent_mod_p(p1, p2, 2)
    qtype = p1.qtype
    primes = sorted(torsion_primes(qtype.type_label, qtype.rank))
    verdicts = tuple(motivic_equivalent_mod_p(p1, p2, p) for p in primes)
    kinds = {v.verdict for v in verdicts}
    if NOT_EQUIVALENT in kinds:
        overall = NOT_EQUIVALENT
    elif UNAVAILABLE in kinds:
        overall = UNAVAILABLE
    else:
        overall = EQUIVALENT
    criterion = "all_torsion_primes"
    if qtype.key == "F4" and overall == EQUIVALENT:
        criterion = "F4_f3_f5_g3"
    citations = tuple(dict.fromkeys(c for v in verdicts for c in v.citations))
    return Verdict(None, overall, criterion, citations, f"torsion primes {primes}", verdicts)


__all__ = ["EQUIVALENT", "NOT_EQUIVALENT", "UNAVAILABLE", "Verdict", "motivic_equivalent",
           "motivic_equivalent_mod_p", "prime_factors", "tits_algebra_compatible"]
