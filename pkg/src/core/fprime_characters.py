# Builtin Imports
from dataclasses import dataclass, field

# Local Imports
from src.errors import CharacterError, InternalInconsistencyError
from src.characters.character_table import character_table
from src.characters.class_functions import ClassFunction, restrict, is_invariant
from src.characters.clifford import (
    irreducibles_over, restricts_irreducibly, invariant_constituents,
    invariant_irreducibles, lies_over, linear_characters, extensions,
)
from src.core.canonical_series import CanonicalSeries, NavarroTriple, canonical_series
from src.formations.descriptors import FormationDescriptor
from src.groups.perm_group import PermGroup
from src.groups.subgroups import join
from src.logger import get_logger




logger = get_logger("core.fprime_characters")


@dataclass
class AscentState:

    """One level of the ascent: delta on L_i and the resulting characters of K_i H."""

    index: int
    delta: list
    level: list


@dataclass
class DescendingWitness:

    """
    Result of the descending test.

    chain alternates (K_i, theta_i) and (L_i, phi_i) pairs from the top;
    failure names the first condition that broke.
    """

    character: ClassFunction
    passed: bool
    chain: list = field(default_factory=list)
    failure: str = None


# --- Unique invariant characters over a Navarro triple ---

def unique_invariant_below(theta: ClassFunction, triple: NavarroTriple) -> ClassFunction:

    """
    The only H-invariant irreducible constituent of theta restricted to L.

    Args:
        theta (ClassFunction): H-invariant irreducible character of K.
        triple (NavarroTriple): The triple (group, K, L) with its projector.

    Returns:
        ClassFunction: phi in Irr_H(L) under theta.
    """

    triple.check()
    if theta.group != triple.K:
        raise CharacterError("theta must be a character of K")
    if not is_invariant(theta, triple.H):
        raise CharacterError("theta is not invariant under the projector")

    candidates = invariant_constituents(restrict(theta, triple.L), triple.H)
    if len(candidates) != 1:
        raise InternalInconsistencyError(f"expected one invariant constituent below theta, found {len(candidates)}")
    return candidates[0]

def unique_invariant_above(phi: ClassFunction, triple: NavarroTriple) -> ClassFunction:

    """
    The only H-invariant irreducible character of K over phi.

    Args:
        phi (ClassFunction): H-invariant irreducible character of L.
        triple (NavarroTriple): The triple (group, K, L) with its projector.

    Returns:
        ClassFunction: theta in Irr_H(K) over phi.
    """

    triple.check()
    if phi.group != triple.L:
        raise CharacterError("phi must be a character of L")
    if not is_invariant(phi, triple.H):
        raise CharacterError("phi is not invariant under the projector")

    candidates = [theta for theta in invariant_irreducibles(triple.K, triple.H) if lies_over(theta, phi)]
    if len(candidates) != 1:
        raise InternalInconsistencyError(f"expected one invariant character above phi, found {len(candidates)}")
    return candidates[0]


# --- Auxiliar Functions ---

def _dedupe(characters) -> list:
    out = []
    for chi in characters:
        if chi not in out:
            out.append(chi)
    return out

def _in_table_order(G: PermGroup, characters) -> list:
    wanted = set(characters)
    return [chi for chi in character_table(G) if chi in wanted]


# --- Main Function ---

def fprime_ascent(G: PermGroup, F: FormationDescriptor, H: PermGroup = None, series: CanonicalSeries = None) -> tuple:

    """
    Builds Irr_F'(G) upwards along the canonical series.

    Starts from the linear characters of the projector H and, for i from
    m-1 down to 0, keeps the irreducibles of K_i H lying over the restrictions
    to L_i of the previous level whose restriction to K_i is irreducible.

    Args:
        G (PermGroup): A solvable group.
        F (FormationDescriptor): A formation containing the nilpotent groups.
        H (PermGroup): Optional. The projector; computed when absent.
        series (CanonicalSeries): Optional. A precomputed canonical series.

    Returns:
        tuple: (characters of G in table order, list of AscentState from the bottom level up).
    """

    series = series or canonical_series(G, F, H)
    H = series.projector

    level = linear_characters(H)
    states = []

    for i in reversed(range(series.m)):
        K, L = series.pairs[i]
        X = series.level_group(i)

        delta = []
        for chi in level:
            d = restrict(chi, L)
            if not d.is_irreducible():
                raise InternalInconsistencyError(f"restriction to L_{i} is reducible")
            delta.append(d)
        delta = _dedupe(delta)

        level = [chi for chi in irreducibles_over(X, delta) if restricts_irreducibly(chi, K)]
        states.append(AscentState(index=i, delta=delta, level=level))
        logger.debug(f"⏳ Level {i}: {len(delta)} characters of L, {len(level)} survive in K H")

    result = _in_table_order(G, level) if series.m else linear_characters(G)
    logger.info(f"✅ {len(result)} F'-characters in a group of order {G.order} for {F.name}")
    return result, states

def fprime_ascending(G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> list:

    """Irr_F'(G) in table order."""

    return fprime_ascent(G, F, H)[0]

def fprime_descending_test(chi: ClassFunction, G: PermGroup, F: FormationDescriptor, H: PermGroup = None,
                           series: CanonicalSeries = None) -> DescendingWitness:

    """
    Tests whether chi lies in Irr_F'(G) by descending the canonical series.

    theta_0 is chi on K_0; at level i, theta_i must extend to K_i H, phi_i is
    the unique H-invariant constituent below it on L_i, phi_i must extend to
    L_i H and theta_{i+1}, its restriction to K_{i+1}, must be irreducible.

    Args:
        chi (ClassFunction): An irreducible character of G.
        G (PermGroup): The group.
        F (FormationDescriptor): A formation containing the nilpotent groups.
        H (PermGroup): Optional. The projector; computed when absent.
        series (CanonicalSeries): Optional. A precomputed canonical series.

    Returns:
        DescendingWitness: Pass or the first failing condition, with the chain visited.
    """

    if chi.group != G:
        raise CharacterError("the character does not belong to G")
    if not chi.is_irreducible():
        raise CharacterError("the descending test needs an irreducible character")

    series = series or canonical_series(G, F, H)
    H = series.projector
    witness = DescendingWitness(character=chi, passed=False, chain=[(G, chi)])

    def fail(reason: str) -> DescendingWitness:
        witness.failure = reason
        return witness

    theta = restrict(chi, series.K(0))
    if not theta.is_irreducible():
        return fail("restriction to K_0 is reducible")
    witness.chain.append((series.K(0), theta))

    for i in range(series.m):
        triple = series.triple(i)
        if not extensions(theta, triple.group):
            return fail(f"theta_{i} does not extend to K_{i} H")

        phi = unique_invariant_below(theta, triple)
        witness.chain.append((triple.L, phi))
        if not extensions(phi, join(triple.L, H)):
            return fail(f"phi_{i} does not extend to L_{i} H")

        K_next = series.K(i + 1)
        theta = restrict(phi, K_next)
        if not theta.is_irreducible():
            return fail(f"restriction to K_{i + 1} is reducible")
        witness.chain.append((K_next, theta))

    witness.passed = True
    return witness
