# Built-in imports
import os
import sys
import itertools

# Third-party imports
import pytest

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

# Local Imports
from src.errors import GroupParseError, GroupDomainError, UnsupportedGroupError, CapacityError
from src.groups.perms import Perm, parse_cycles, format_cycles
from src.groups.perm_group import generate, trivial_group
from src.groups.group_maps import quotient
from src.groups.subgroups import (
    derived_subgroup, normal_subgroups, center, centralizer, normalizer, sylow,
    complement, intersection, is_solvable, join, overgroups,
)
from src.groups.series import chief_series, minimal_normal_subgroups, h_composition_series
from src.ingestion.catalog import get_group
from src.settings import reload_settings



# --- Aux Funcs ---
def enumerate_closure(generators, degree):

    """Brute-force element set: closure under right multiplication by the generators."""

    identity = Perm.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = x * g
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen

def commutator_closure(G):

    """Derived subgroup by enumerating every commutator of two elements."""

    commutators = {a.commutator(b) for a in G.elements for b in G.elements}
    return enumerate_closure(list(commutators), G.degree)

def S4():
    return get_group("S4")



# --- Permutations ---
def test_product_applies_left_factor_first():
    p = parse_cycles("(0 1)", 3)
    q = parse_cycles("(1 2)", 3)
    assert (p * q)(0) == q(p(0)) == 2

def test_inverse_and_order():
    p = parse_cycles("(0 1 2)(3 4)", 5)
    assert (p * ~p).is_identity()
    assert p.order() == 6
    assert (p ** -1) == ~p

def test_cycle_text_round_trip():
    p = parse_cycles("(0 3)(1 2 4)", 5)
    assert parse_cycles(format_cycles(p), 5) == p
    assert format_cycles(Perm.identity(4)) == "()"

@pytest.mark.parametrize("word", ["(0 1 1)", "(0 4)", "(0 1", "", "(0 1)x"])
def test_malformed_cycles_rejected(word):
    with pytest.raises(GroupParseError):
        parse_cycles(word, 4)



# --- Generation ---
def test_generate_trivial_and_symmetric():
    assert generate(4, []).order == 1
    assert generate(4, ["(0 1)", "(0 1 2 3)"]).order == 24

def test_quaternion_regular_representation_matches_enumeration():
    Q8 = get_group("Q8")
    assert Q8.order == 8
    assert Q8.elements == frozenset(enumerate_closure(Q8.generators, Q8.degree))

@pytest.mark.parametrize("name", ["D12", "F21", "SL23", "G75"])
def test_chain_order_matches_enumeration(name):
    G = get_group(name)
    assert len(enumerate_closure(G.generators, G.degree)) == G.order

def test_orbits_and_hash():
    U = generate(4, ["(0 1)(2 3)", "(0 2)(1 3)"])
    V = generate(4, ["(0 3)(1 2)", "(0 1)(2 3)"])
    assert U == V and hash(U) == hash(V)
    assert U.orbits() == ((0, 1, 2, 3),)

    # Same order, different orbit partitions
    A = generate(4, ["(0 1)"])
    B = generate(4, ["(2 3)"])
    assert A.orbits() == ((0, 1), (2,), (3,))
    assert B.orbits() == ((0,), (1,), (2, 3))
    assert A != B
    assert len({A, B, U, V}) == 3

def test_capacity_bound():
    G = S4()
    reload_settings(max_order=10)
    try:
        fresh = generate(4, ["(0 1)", "(0 1 2 3)"])
        with pytest.raises(CapacityError):
            fresh.conjugacy_classes()
    finally:
        reload_settings()
    assert G.order == 24



# --- Conjugacy classes ---
def test_class_structure_of_s4():
    classes = S4().conjugacy_classes()
    assert sorted(c.size for c in classes) == [1, 3, 6, 6, 8]
    assert classes[0].representative.is_identity()
    assert sum(c.size for c in classes) == 24

def test_classes_of_trivial_and_q8():
    assert len(trivial_group(3).conjugacy_classes()) == 1
    assert len(get_group("Q8").conjugacy_classes()) == 5

def test_class_size_is_index_of_centralizer():
    G = get_group("D12")
    for c in G.conjugacy_classes():
        assert c.size * centralizer(G, c.representative).order == G.order



# --- Derived subgroups and normal subgroups ---
def test_derived_subgroups():
    assert derived_subgroup(S4()).order == 12
    assert derived_subgroup(S4()).elements == frozenset(commutator_closure(S4()))
    assert derived_subgroup(get_group("D8")).order == 2
    assert derived_subgroup(get_group("C6")).is_trivial()

def test_normal_subgroups():
    assert [N.order for N in normal_subgroups(S4())] == [1, 4, 12, 24]
    assert len(normal_subgroups(get_group("C6"))) == 4
    assert len(normal_subgroups(get_group("Q8"))) == 6

def test_normal_subgroups_match_class_union_oracle():
    G = get_group("D8")
    classes = G.conjugacy_classes()
    found = set()
    for r in range(1, len(classes) + 1):
        for combo in itertools.combinations(classes, r):
            elements = set().union(*(c.elements for c in combo))
            if G.identity in elements and enumerate_closure(list(elements), G.degree) == elements:
                found.add(frozenset(elements))
    assert found == {N.elements for N in normal_subgroups(G)}



# --- Quotients ---
def test_quotients():
    G = S4()
    V4, A4 = normal_subgroups(G)[1:3]
    Q, pi = quotient(G, V4)
    assert Q.order == 6 and not Q.is_abelian()
    assert pi.kernel() == V4
    assert quotient(G, A4)[0].order == 2
    assert quotient(G, G)[0].is_trivial()

def test_quotient_needs_normal_subgroup():
    G = S4()
    with pytest.raises(GroupDomainError):
        quotient(G, generate(4, ["(0 1)"]))

def test_preimage_of_image_contains_kernel():
    G = S4()
    V4 = normal_subgroups(G)[1]
    _, pi = quotient(G, V4)
    U = join(V4, generate(4, ["(0 1)"]))
    assert pi.preimage(pi.image_subgroup(U)) == U



# --- Centralizers, normalizers and Sylow subgroups ---
def test_center_normalizer_centralizer():
    G = S4()
    assert center(get_group("Q8")).order == 2
    P = sylow(G, 2)
    assert normalizer(G, P) == P
    assert centralizer(G, G.identity) == G

def test_centralizer_needs_element():
    with pytest.raises(GroupDomainError):
        centralizer(S4(), parse_cycles("(0 4)", 5))

def test_sylow_orders():
    G = S4()
    assert sylow(G, 2).order == 8
    assert sylow(G, 3).order == 3
    assert sylow(G, 5).order == 1
    with pytest.raises(GroupDomainError):
        sylow(G, 4)



# --- Series ---
def test_chief_series_of_s4():
    series = chief_series(S4())
    assert [S.order for S in series] == [1, 4, 12, 24]
    assert [N.order for N in minimal_normal_subgroups(S4())] == [4]

def test_chief_series_of_cyclic_six():
    series = chief_series(get_group("C6"))
    factors = sorted(b.order // a.order for a, b in zip(series, series[1:]))
    assert factors == [2, 3]

def test_nonsolvable_group_is_detected():
    A5 = generate(5, ["(0 1 2 3 4)", "(0 1 2)"])
    assert A5.order == 60
    assert not is_solvable(A5)
    with pytest.raises(UnsupportedGroupError):
        chief_series(A5)

def test_h_composition_series_through_anchors():
    G = S4()
    D8 = sylow(G, 2)
    V4, A4 = normal_subgroups(G)[1:3]
    series = h_composition_series(G, D8, [V4, A4])
    assert [S.order for S in series] == [1, 2, 4, 12, 24]
    assert series[1].is_invariant_under(D8)
    assert series[1].is_normal_in(series[2])

def test_h_composition_agrees_with_chief_series_of_kh():
    G = S4()
    D8 = sylow(G, 2)
    V4 = normal_subgroups(G)[1]

    # Chief series of V4.D8 = D8 cut down to V4
    cut = []
    for C in chief_series(join(V4, D8)):
        S = intersection(C, V4)
        if not cut or cut[-1] != S:
            cut.append(S)

    series = h_composition_series(G, D8, [V4])
    assert series[:3] == cut
    assert cut[1] == center(D8)

def test_h_composition_factors_are_h_simple():
    G = get_group("G75")
    H = sylow(G, 3)
    series = h_composition_series(G, H)
    for lower, upper in zip(series, series[1:]):
        X = join(upper, H)
        between = [N for N in normal_subgroups(X) if lower.order < N.order < upper.order
                   and lower.is_subgroup_of(N) and N.is_subgroup_of(upper)]
        assert between == []
    assert [S.order for S in series] == [1, 25, 75]

def test_h_composition_rejects_bad_anchor():
    G = S4()
    with pytest.raises(GroupDomainError):
        h_composition_series(G, sylow(G, 2), [generate(4, ["(0 1 2)"])])



# --- Complements and overgroups ---
def test_complements():
    G = S4()
    V4 = normal_subgroups(G)[1]
    C = complement(G, V4)
    assert C.order == 6 and intersection(C, V4).is_trivial()
    assert complement(get_group("C4"), normal_subgroups(get_group("C4"))[1]) is None
    G75 = get_group("G75")
    assert complement(G75, derived_subgroup(G75)).order == 3

def test_complement_needs_abelian_normal_subgroup():
    G = S4()
    with pytest.raises(GroupDomainError):
        complement(G, normal_subgroups(G)[2])

def test_overgroups_of_sylow_three():
    G = S4()
    P = sylow(G, 3)
    orders = sorted(U.order for U in overgroups(G, P))
    assert orders == [3, 6, 12, 24]



# Nameguard
if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
