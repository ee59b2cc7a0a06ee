# Local Imports
from src.errors import CharacterError
from src.characters.class_functions import ClassFunction, inner_product, restrict, is_invariant, kernel
from src.characters.character_table import character_table
from src.groups.perm_group import PermGroup




# --- Decomposition ---

def constituents(f: ClassFunction) -> list:

    """
    Decomposes a character into irreducibles of its group.

    Args:
        f (ClassFunction): A character.

    Returns:
        list: (irreducible, multiplicity) pairs with positive multiplicity, in
        table order.
    """

    out = []
    for chi in character_table(f.group):
        m = inner_product(f, chi)
        if not m.is_integer() or m.to_rational() < 0:
            raise CharacterError(f"not a character: multiplicity {m} against an irreducible")
        if m != 0:
            out.append((chi, int(m.to_rational())))
    return out

def lies_over(chi: ClassFunction, theta: ClassFunction) -> bool:

    """True when theta is a constituent of the restriction of chi to the group of theta."""

    return inner_product(restrict(chi, theta.group), theta) != 0

def irreducibles_over(X: PermGroup, delta) -> list:

    """Irr(X | delta): irreducibles of X lying over some member of delta."""

    return [chi for chi in character_table(X) if any(lies_over(chi, theta) for theta in delta)]

def restricts_irreducibly(chi: ClassFunction, U: PermGroup) -> bool:
    return restrict(chi, U).is_irreducible()

def invariant_constituents(f: ClassFunction, H: PermGroup) -> list:

    """Irreducible constituents of f fixed by conjugation under H."""

    return [theta for theta, _ in constituents(f) if is_invariant(theta, H)]

def invariant_irreducibles(N: PermGroup, H: PermGroup) -> list:

    """Irr_H(N): the H-invariant irreducible characters of N."""

    return [theta for theta in character_table(N) if is_invariant(theta, H)]


# --- Linear characters and extensions ---

def linear_characters(G: PermGroup) -> list:
    return [chi for chi in character_table(G) if chi.is_linear()]

def extensions(theta: ClassFunction, G: PermGroup) -> list:

    """All chi in Irr(G) whose restriction to the group of theta equals theta."""

    N = theta.group
    if not N.is_subgroup_of(G):
        raise CharacterError("extension target does not contain the subgroup")
    return [chi for chi in character_table(G) if chi.degree == theta.degree and restrict(chi, N) == theta]

def gallagher_family(gamma: ClassFunction, N: PermGroup) -> list:

    """
    Twists of gamma by the linear characters of G/N.

    Args:
        gamma (ClassFunction): Character of G irreducible on N.
        N (PermGroup): Normal subgroup of G.

    Returns:
        list: Distinct irreducibles lambda * gamma, in table order.
    """

    G = gamma.group
    if not N.is_normal_in(G):
        raise CharacterError("Gallagher twisting needs a normal subgroup")
    if not restricts_irreducibly(gamma, N):
        raise CharacterError("the restriction to the normal subgroup is reducible")

    table = character_table(G)
    twists = {lam * gamma for lam in linear_characters(G) if N.is_subgroup_of(kernel(lam))}
    return [chi for chi in table if chi in twists]
