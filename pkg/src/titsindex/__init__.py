"""Tits p-indexes of simple algebraic groups: enumeration, invariants, equivalence, pictures."""

from .catalog import (
    admissible,
    enumerate_indexes,
    family_rule,
    parse_family,
    signature_of_real_form,
    torsion_primes,
)
from .diagrams import DynkinDiagram, GaloisAction, automorphism_group, build_diagram, make_action, standard_action
from .equivalence import Verdict, motivic_equivalent, motivic_equivalent_mod_p, tits_algebra_compatible
from .errors import DomainError, InconsistentProfile, MissingSlots, SchemaError, TitsError, ValidationError
from .invariants import (
    CohElement,
    CohGroup,
    Constraints,
    InvariantProfile,
    Underdetermined,
    constraints_for_index,
    index_from_profile,
    same_subgroup,
)
from .render import render_svg, render_text, render_tikz
from .tits_index import (
    TitsIndex,
    base_change_leq,
    is_anisotropic,
    is_quasi_split,
    is_valid,
    make_index,
    split_rank,
    validate,
)

__all__ = [
    "CohElement", "CohGroup", "Constraints", "DomainError", "DynkinDiagram", "GaloisAction",
    "InconsistentProfile", "InvariantProfile", "MissingSlots", "SchemaError", "TitsError", "TitsIndex",
    "Underdetermined", "ValidationError", "Verdict", "admissible", "automorphism_group", "base_change_leq",
    "build_diagram", "constraints_for_index", "enumerate_indexes", "family_rule", "index_from_profile",
    "is_anisotropic", "is_quasi_split", "is_valid", "make_action", "make_index", "motivic_equivalent",
    "motivic_equivalent_mod_p", "parse_family", "render_svg", "render_text", "render_tikz", "same_subgroup",
    "signature_of_real_form", "split_rank", "standard_action", "tits_algebra_compatible", "torsion_primes",
    "validate",
]
