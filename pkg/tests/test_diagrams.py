import pytest

from titsindex.diagrams import (
    BOURBAKI,
    DynkinDiagram,
    Edge,
    automorphism_group,
    brute_force_automorphisms,
    build_diagram,
    check_rank,
    make_action,
    picture_to_diagram,
    standard_action,
    to_bourbaki,
    trivial_action,
)
from titsindex.errors import DomainError, SchemaError, ValidationError

from oracles import cartan_automorphisms

SMALL = [("A", n) for n in range(1, 8)] + [("B", n) for n in range(2, 7)] + [("C", n) for n in range(3, 7)] + [
    ("D", n) for n in range(4, 8)
] + [("E", 6), ("E", 7), ("F", 4), ("G", 2)]


@pytest.mark.parametrize("kind,n", SMALL)
def test_automorphisms_match_cartan_oracle(kind, n):
    d = build_diagram(kind, n)
    assert sorted(automorphism_group(d)) == cartan_automorphisms(kind, n)


@pytest.mark.parametrize("kind,n", [("A", 5), ("D", 4), ("D", 5), ("E", 6), ("F", 4), ("G", 2), ("B", 3), ("C", 4)])
def test_automorphisms_match_brute_force(kind, n):
    d = build_diagram(kind, n)
    assert sorted(automorphism_group(d)) == brute_force_automorphisms(d)


@pytest.mark.parametrize(
    "kind,n,order", [("A", 1, 1), ("A", 4, 2), ("B", 5, 1), ("C", 5, 1), ("D", 4, 6), ("D", 6, 2), ("E", 6, 2),
                     ("E", 7, 1), ("E", 8, 1), ("F", 4, 1), ("G", 2, 1)]
)
def test_automorphism_group_orders(kind, n, order):
    assert len(automorphism_group(build_diagram(kind, n))) == order


def test_e8_automorphisms_trivial_without_enumerating_all_permutations():
    assert automorphism_group(build_diagram("E", 8)) == [tuple(range(1, 9))]


@pytest.mark.parametrize("kind,n", [("E", 9), ("E", 5), ("F", 3), ("G", 3), ("D", 3), ("B", 1), ("C", 2), ("A", 0)])
def test_bad_ranks_name_the_valid_range(kind, n):
    with pytest.raises(DomainError, match="valid range"):
        check_rank(kind, n)


def test_unknown_type():
    with pytest.raises(DomainError):
        build_diagram("H", 3)


def test_short_roots_and_edges():
    b = build_diagram("B", 4)
    c = build_diagram("C", 4)
    assert Edge(3, 4, 2, short=4) in b.edge_set
    assert Edge(3, 4, 2, short=3) in c.edge_set
    assert Edge(1, 2, 3, short=1) in build_diagram("G", 2).edge_set
    assert build_diagram("E", 7).neighbors[4] == {3, 5, 7}
    assert build_diagram("E", 8).neighbors[5] == {4, 6, 8}
    assert build_diagram("D", 6).neighbors[4] == {3, 5, 6}


def test_edge_validation():
    with pytest.raises(ValidationError):
        Edge(2, 1)
    with pytest.raises(ValidationError):
        Edge(1, 2, 2)
    with pytest.raises(ValidationError):
        Edge(1, 2, 2, short=3)


def test_diagram_json_round_trip():
    for kind, n in SMALL:
        d = build_diagram(kind, n)
        assert DynkinDiagram.from_json(d.to_json()) == d


def test_diagram_json_rejects_wrong_edges():
    doc = build_diagram("B", 3).to_json()
    doc["edges"][-1] = [2, 3, 2, {"toward_short": 2}]
    with pytest.raises(SchemaError) as info:
        DynkinDiagram.from_json(doc)
    assert info.value.field == "diagram.edges"


def test_make_action_rejects_non_automorphism_naming_edge():
    d = build_diagram("A", 4)
    with pytest.raises(ValidationError, match="edge"):
        make_action(d, [(2, 1, 3, 4)])


def test_standard_actions():
    assert standard_action(build_diagram("A", 5), 2).orbit_partition == ((1, 5), (2, 4), (3,))
    assert standard_action(build_diagram("D", 5), 2).orbit_partition == ((1,), (2,), (3,), (4, 5))
    assert standard_action(build_diagram("D", 4), 3).orbit_partition == ((1, 3, 4), (2,))
    assert standard_action(build_diagram("D", 4), 6).t == 6
    assert standard_action(build_diagram("E", 6), 2).orbit_partition == ((1, 5), (2, 4), (3,), (6,))
    with pytest.raises(DomainError):
        standard_action(build_diagram("B", 4), 2)


def test_action_equality_ignores_generators():
    d = build_diagram("D", 4)
    a = make_action(d, [(3, 2, 4, 1)])
    b = make_action(d, [(4, 2, 1, 3)])
    assert a == b and a.t == 3
    assert trivial_action(d).is_subgroup_of(a)


def test_bourbaki_maps_are_bijections():
    for name, table in BOURBAKI.items():
        assert sorted(table) == sorted(table.values()) == list(range(1, len(table) + 1)), name


def test_table_pictures_mirror_the_diagrams():
    # the printed pictures attach the branch to chain vertex 3
    assert picture_to_diagram("E7") == {1: 6, 2: 5, 3: 4, 4: 3, 5: 2, 6: 1, 7: 7}
    assert picture_to_diagram("E8") == {1: 7, 2: 6, 3: 5, 4: 4, 5: 3, 6: 2, 7: 1, 8: 8}
    assert picture_to_diagram("F4") is None


def test_to_bourbaki_e6_branch():
    assert to_bourbaki(build_diagram("E", 6), {6}) == (2,)
    assert to_bourbaki(build_diagram("A", 3), {3, 1}) == (1, 3)
