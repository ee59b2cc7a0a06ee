# Built-in imports
import os
import sys

# Third-party imports
import pytest

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

# Local Imports
from src.errors import UnknownNameError, GroupDomainError
from src.formations.descriptors import FormationDescriptor, NILPOTENT, SUPERSOLVABLE, METANILPOTENT, is_member
from src.formations.projectors import (
    residual, projector, is_f_maximal, is_projector_of, verify_projector_properties,
    navarro_condition, navarro_triple_holds, hup_check,
)
from src.groups.group_maps import quotient
from src.groups.perm_group import generate
from src.groups.subgroups import normal_subgroups, sylow, derived_subgroup, are_conjugate, complement
from src.ingestion.catalog import get_group



# --- Aux Funcs ---
def S4():
    return get_group("S4")

def formation(text):
    return FormationDescriptor.parse(text)



# --- Descriptors ---
@pytest.mark.parametrize("text,name", [
    ("nilpotent", "nilpotent"),
    ("Supersolvable", "supersolvable"),
    ("p-groups:3", "p-groups:3"),
    ("pi-groups:3,2", "pi-groups:2,3"),
    ("p-nilpotent:2", "p-nilpotent:2"),
    ("nilpotent-length:2", "nilpotent-length:2"),
])
def test_formation_names_round_trip(text, name):
    F = formation(text)
    assert F.name == name
    assert formation(F.name) == F

@pytest.mark.parametrize("text", ["abelian", "p-groups:4", "pi-groups:", "nilpotent-length:x", "nilpotent:2"])
def test_unknown_formations_rejected(text):
    with pytest.raises(UnknownNameError):
        formation(text)

def test_which_formations_contain_the_nilpotent_groups():
    assert NILPOTENT.contains_nilpotent and SUPERSOLVABLE.contains_nilpotent
    assert formation("p-nilpotent:3").contains_nilpotent
    assert not formation("p-groups:2").contains_nilpotent
    assert not formation("nilpotent-length:0").contains_nilpotent



# --- Membership ---
@pytest.mark.parametrize("name,text,expected", [
    ("D8", "nilpotent", True),
    ("S3", "nilpotent", False),
    ("S4", "supersolvable", False),
    ("D12", "supersolvable", True),
    ("A4", "metanilpotent", True),
    ("S4", "metanilpotent", False),
    ("S4", "nilpotent-length:3", True),
    ("S3", "p-nilpotent:2", True),
    ("S4", "p-nilpotent:2", False),
    ("Q8", "p-groups:2", True),
    ("D12", "pi-groups:2,3", True),
    ("G75", "supersolvable", False),
])
def test_membership(name, text, expected):
    assert is_member(get_group(name), formation(text)) is expected



# --- Residuals ---
def test_residuals_of_s4():
    assert residual(S4(), NILPOTENT).order == 12
    assert residual(S4(), SUPERSOLVABLE).order == 4
    assert residual(S4(), METANILPOTENT).order == 4

def test_residual_of_member_is_trivial():
    assert residual(get_group("D8"), NILPOTENT).is_trivial()
    assert residual(get_group("G75"), METANILPOTENT).is_trivial()

def test_supersolvable_residual_of_g75():
    G = get_group("G75")
    assert residual(G, SUPERSOLVABLE) == derived_subgroup(G)

def test_quotient_by_residual_lies_in_formation():
    for name in ["S4", "G75", "SL23", "2S4"]:
        G = get_group(name)
        for F in (NILPOTENT, SUPERSOLVABLE):
            Q, _ = quotient(G, residual(G, F))
            assert is_member(Q, F)



# --- Projectors ---
@pytest.mark.parametrize("name,text,order", [
    ("S4", "nilpotent", 8),
    ("S4", "supersolvable", 6),
    ("S4", "metanilpotent", 6),
    ("G75", "supersolvable", 3),
    ("G75", "nilpotent", 3),
    ("G75", "metanilpotent", 75),
    ("A4", "nilpotent", 3),
    ("D8", "nilpotent", 8),
])
def test_projector_orders(name, text, order):
    assert projector(get_group(name), formation(text)).order == order

def test_nilpotent_projector_is_carter_subgroup():
    G = S4()
    H = projector(G, NILPOTENT)
    assert are_conjugate(G, H, sylow(G, 2)) is not None
    assert is_f_maximal(G, H, NILPOTENT)
    assert is_projector_of(G, H, NILPOTENT)

@pytest.mark.parametrize("name,text", [
    ("S4", "nilpotent"),
    ("S4", "supersolvable"),
    ("G75", "supersolvable"),
    ("SL23", "nilpotent"),
    ("2S4", "supersolvable"),
])
def test_projectors_from_different_seeds_are_conjugate(name, text):
    G, F = get_group(name), formation(text)
    base = projector(G, F)
    for seed in (1, 7, 99):
        H = projector(G, F, seed=seed)
        assert is_projector_of(G, H, F)
        assert are_conjugate(G, base, H) is not None

@pytest.mark.parametrize("name,text", [
    ("S4", "supersolvable"),
    ("G75", "supersolvable"),
])
def test_complements_of_residual_are_conjugate(name, text):
    G = get_group(name)
    A = residual(G, formation(text))
    found = [complement(G, A, seed) for seed in (1, 7, 99)]
    assert all(C is not None and C.order * A.order == G.order for C in found)
    assert all(are_conjugate(G, found[0], C) is not None for C in found[1:])

def test_normal_sylow_is_not_a_projector():
    G = S4()
    V4 = normal_subgroups(G)[1]
    assert not is_f_maximal(G, V4, NILPOTENT)
    assert not is_projector_of(G, V4, NILPOTENT)

@pytest.mark.parametrize("name,text", [
    ("S4", "nilpotent"),
    ("S4", "supersolvable"),
    ("G75", "supersolvable"),
    ("SL23", "nilpotent"),
    ("D12", "p-groups:2"),
])
def test_projector_properties(name, text):
    checked = verify_projector_properties(get_group(name), formation(text))
    assert checked.passed, checked.failures
    assert not checked.partially_verified

def test_self_normalizing_not_required_outside_nilpotent_formations():
    checked = verify_projector_properties(get_group("S3"), formation("p-groups:3"))
    assert checked.self_normalizing_required is False
    assert checked.properties["e"] is False
    assert checked.passed

def test_projector_avoids_chief_factor_intersection_failures():
    assert hup_check(S4(), NILPOTENT) == []
    assert hup_check(get_group("G75"), SUPERSOLVABLE) == []



# --- Navarro condition ---
def test_navarro_condition_on_s4():
    G = S4()
    _, V4, A4, _ = normal_subgroups(G)
    assert navarro_condition(G, A4, V4, NILPOTENT)
    assert not navarro_condition(G, G, A4, NILPOTENT)

def test_navarro_condition_needs_normal_subgroups():
    G = S4()
    with pytest.raises(GroupDomainError):
        navarro_condition(G, generate(4, ["(0 1 2)"]), generate(4, []), NILPOTENT)

def test_triple_with_explicit_subgroup():
    G = S4()
    _, V4, A4, _ = normal_subgroups(G)
    assert navarro_triple_holds(G, A4, V4, sylow(G, 2))
    assert not navarro_triple_holds(G, A4, V4, sylow(G, 3))



# Nameguard
if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
