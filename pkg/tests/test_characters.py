# Built-in imports
import os
import sys
from fractions import Fraction

# Third-party imports
import pytest

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

# Local Imports
from src.errors import CharacterError
from src.characters.cyclotomic import Cyclotomic
from src.characters.class_functions import (
    ClassFunction, inner_product, restrict, induce, kernel, regular_character,
    trivial_character, inflate, deflate, conjugate_character, is_invariant,
)
from src.characters.character_table import character_table, dixon_prime
from src.characters.clifford import (
    constituents, extensions, gallagher_family, lies_over, linear_characters,
    irreducibles_over, invariant_irreducibles,
)
from src.groups.group_maps import quotient
from src.groups.perm_group import trivial_group
from src.groups.subgroups import normal_subgroups, sylow, intersection
from src.ingestion.catalog import get_group, catalog_names



# --- Aux Funcs ---
def E(n, k=1):
    return Cyclotomic.root_of_unity(n, k)

def class_algebra_constants(G):

    """a[i][j][k] = #{x in C_i : x^-1 z_k in C_j} for the class representatives z_k."""

    classes = G.conjugacy_classes()
    a = [[[0] * len(classes) for _ in classes] for _ in classes]
    for i, Ci in enumerate(classes):
        for k, Ck in enumerate(classes):
            z = Ck.representative
            for x in Ci.elements:
                j = G.class_index(~x * z)
                a[i][j][k] += 1
    return a

SMALL_GROUPS = ["C1", "C5", "V4", "S3", "D8", "Q8", "A4", "S4", "D12", "F21", "SL23"]
CATALOG = catalog_names()



# --- Cyclotomic numbers ---
def test_roots_of_unity():
    assert E(4) ** 2 == -1
    assert E(3) + E(3, 2) == -1
    assert (E(8) + E(8, 7)) ** 2 == 2
    assert E(4).conjugate() == -E(4)

def test_values_compare_across_conductors():
    assert E(3).lift(6) == E(3)
    assert hash(E(3).lift(12)) == hash(E(3))
    assert E(6).reduced_conductor() == 3
    assert E(2) == -1

def test_inverse_and_division():
    x = 1 + E(5)
    assert x * x.inverse() == 1
    assert (x / x) == 1
    assert Cyclotomic.rational(3) / 4 == Fraction(3, 4)

def test_display_forms():
    assert str(Cyclotomic.rational(Fraction(1, 2))) == "1/2"
    assert str(E(3)) == "E(3)"
    assert E(6).to_json()["conductor"] == 3

def test_galois_needs_unit():
    with pytest.raises(CharacterError):
        E(6).galois(2)



# --- Character tables ---
def test_s4_degrees():
    table = character_table(get_group("S4"))
    assert table.degrees() == [1, 1, 2, 3, 3]
    assert table.trivial() == trivial_character(table.group)

def test_trivial_group_table():
    table = character_table(trivial_group(3))
    assert len(table) == 1 and table[0].degree == 1

@pytest.mark.parametrize("name,degrees", [
    ("Q8", [1, 1, 1, 1, 2]),
    ("A4", [1, 1, 1, 3]),
    ("G75", [1, 1, 1] + [3] * 8),
    ("2S4", [1, 1, 2, 2, 2, 3, 3, 4]),
])
def test_degree_patterns(name, degrees):
    assert character_table(get_group(name)).degrees() == degrees

@pytest.mark.parametrize("name", SMALL_GROUPS + ["G75", "2S4", "GL23"])
def test_orthogonality_and_degree_sum(name):
    G = get_group(name)
    table = character_table(G)
    assert sum(d * d for d in table.degrees()) == G.order
    assert len(table) == len(G.conjugacy_classes())

    for i, chi in enumerate(table):
        for j, psi in enumerate(table):
            assert inner_product(chi, psi) == (1 if i == j else 0)

    centralizers = table.centralizer_orders()
    for a in range(len(table.classes)):
        for b in range(len(table.classes)):
            total = sum((chi.values[a] * chi.values[b].conjugate() for chi in table), Cyclotomic.rational(0))
            assert total == (centralizers[a] if a == b else 0)

@pytest.mark.parametrize("name", CATALOG)
def test_degrees_divide_order_and_table_is_faithful(name):
    G = get_group(name)
    table = character_table(G)
    assert all(G.order % d == 0 for d in table.degrees())

    # The regular character is faithful: the irreducible kernels meet trivially
    common = G
    for chi in table:
        common = intersection(common, kernel(chi))
    assert common.is_trivial()

    # sum chi(1) chi vanishes off the identity and is |G| there
    rho = regular_character(G)
    total = rho * 0
    for chi in table:
        total = total + chi * chi.degree
    assert total == rho

@pytest.mark.parametrize("name", CATALOG)
def test_class_algebra_oracle(name):
    G = get_group(name)
    classes = G.conjugacy_classes()
    a = class_algebra_constants(G)
    for chi in character_table(G):
        omega = [chi.values[k] * Fraction(c.size, chi.degree) for k, c in enumerate(classes)]
        for i in range(len(classes)):
            for j in range(len(classes)):
                rhs = sum((omega[k] * a[i][j][k] for k in range(len(classes))), Cyclotomic.rational(0))
                assert omega[i] * omega[j] == rhs

def test_cyclic_group_values_need_fifth_roots():
    table = character_table(get_group("C5"))
    conductors = {v.reduced_conductor() for chi in table for v in chi.values}
    assert conductors == {1, 5}

def test_dixon_prime():
    q = dixon_prime(24, 12)
    assert q % 12 == 1 and q * q > 4 * 24
    assert dixon_prime(1, 1) >= 2

def test_table_json():
    payload = character_table(get_group("S3")).to_json()
    assert payload["order"] == 6
    assert [c["size"] for c in payload["classes"]] == [1, 2, 3]
    assert [r["degree"] for r in payload["irreducibles"]] == [1, 1, 2]



# --- Class functions ---
def test_kernels_of_s4_characters():
    table = character_table(get_group("S4"))
    assert [kernel(chi).order for chi in table] == [24, 12, 4, 1, 1]

def test_frobenius_reciprocity():
    G = get_group("S4")
    U = sylow(G, 2)
    for theta in character_table(U):
        induced = induce(theta, G)
        for chi in character_table(G):
            assert inner_product(induced, chi) == inner_product(theta, restrict(chi, U))

def test_restriction_needs_subgroup():
    chi = character_table(get_group("S4"))[2]
    with pytest.raises(CharacterError):
        restrict(chi, get_group("S3"))

def test_inflation_and_deflation():
    G = get_group("S4")
    V4 = normal_subgroups(G)[1]
    Q, pi = quotient(G, V4)
    inflated = [inflate(psi, pi) for psi in character_table(Q)]
    assert all(chi.is_irreducible() and V4.is_subgroup_of(kernel(chi)) for chi in inflated)
    assert [deflate(chi, pi) for chi in inflated] == list(character_table(Q))
    with pytest.raises(CharacterError):
        deflate(character_table(G)[3], pi)

def test_conjugation_action_on_v4():
    G = get_group("S4")
    V4 = normal_subgroups(G)[1]
    D8 = sylow(G, 2)
    fixed = invariant_irreducibles(V4, D8)
    assert len(fixed) == 2
    assert sum(1 for theta in character_table(V4) if is_invariant(theta, G)) == 1
    for theta in character_table(V4):
        for g in G.generators:
            assert conjugate_character(theta, g).is_irreducible()

def test_non_character_rejected():
    G = get_group("S3")
    half = ClassFunction(G, [Fraction(1, 2)] * 3)
    with pytest.raises(CharacterError):
        constituents(half)



# --- Clifford helpers ---
def test_extensions_and_gallagher_twists():
    G = get_group("S4")
    A4 = normal_subgroups(G)[2]
    trivial_A4 = trivial_character(A4)
    assert len(extensions(trivial_A4, G)) == 2
    degree_three = character_table(A4)[3]
    gammas = extensions(degree_three, G)
    assert len(gammas) == 2
    assert gallagher_family(gammas[0], A4) == gammas

def test_lies_over_and_irreducibles_over():
    G = get_group("S4")
    V4 = normal_subgroups(G)[1]
    trivial_V4 = trivial_character(V4)
    over = irreducibles_over(G, [trivial_V4])
    assert [chi.degree for chi in over] == [1, 1, 2]
    assert all(lies_over(chi, trivial_V4) for chi in over)
    assert len(linear_characters(G)) == 2



# Nameguard
if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
