# Builtin Imports
import random
import threading
from collections import deque
from itertools import product

# Third-party imports
from sympy import isprime, primefactors, multiplicity

# Local Imports
from src.errors import GroupDomainError
from src.groups.perms import Perm
from src.groups.perm_group import PermGroup, subgroup_from_elements, trivial_group
from src.groups.stabilizer_chain import StabilizerChain
from src.groups.group_maps import quotient
from src.settings import get_settings
from src.logger import get_logger




logger = get_logger("groups.subgroups")

_NORMAL_CACHE = {}
_NORMAL_LOCK = threading.Lock()


# --- Auxiliar Functions ---

def _require_subgroup(U: PermGroup, G: PermGroup, what: str = "subgroup") -> None:
    if not U.is_subgroup_of(G):
        raise GroupDomainError(f"{what} is not contained in the group")

def maximal_by_inclusion(groups: list) -> list:
    return [U for U in groups if not any(U.order < V.order and U.is_subgroup_of(V) for V in groups)]

def minimal_by_inclusion(groups: list) -> list:
    return [U for U in groups if not any(V.order < U.order and V.is_subgroup_of(U) for V in groups)]

def pick(groups: list, prefer: str = "first") -> PermGroup:

    """Deterministic choice from a list of subgroups by the fixed subgroup order."""

    ordered = sorted(groups, key=lambda U: U.sort_key())
    return ordered[0] if prefer == "first" else ordered[-1]


# --- Subgroup algebra ---

def join(A: PermGroup, B) -> PermGroup:

    """Subgroup generated by A together with B (a group or an iterable of elements)."""

    extra = B.generators if isinstance(B, PermGroup) else tuple(B)
    chain = StabilizerChain(A.degree)
    generators = [g for g in A.generators if chain.add_generator(g)]
    generators += [g for g in extra if chain.add_generator(g)]
    return PermGroup(A.degree, generators, chain=chain)

def intersection(A: PermGroup, B: PermGroup) -> PermGroup:
    small, large = (A, B) if A.order <= B.order else (B, A)
    return subgroup_from_elements(A.degree, [x for x in small.elements if large.contains(x)])

def normal_closure(G: PermGroup, elements) -> PermGroup:

    """
    Smallest normal subgroup of G containing the given elements.

    Args:
        G (PermGroup): Ambient group.
        elements: A subgroup or an iterable of elements of G.

    Returns:
        PermGroup: The normal closure.
    """

    seeds = elements.generators if isinstance(elements, PermGroup) else tuple(elements)
    chain = StabilizerChain(G.degree)
    generators = []
    queue = deque(seeds)

    while queue:
        x = queue.popleft()
        if chain.add_generator(x):
            generators.append(x)
            queue.extend(x.conjugate(g) for g in G.generators)

    return PermGroup(G.degree, generators, chain=chain)

def derived_subgroup(G: PermGroup) -> PermGroup:
    gens = G.generators
    commutators = [a.commutator(b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, commutators)

def derived_series(G: PermGroup) -> list:
    series = [G]
    while True:
        D = derived_subgroup(series[-1])
        if D.order == series[-1].order:
            return series
        series.append(D)

def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


# --- Element filters ---

def centralizer(G: PermGroup, g: Perm) -> PermGroup:
    if not G.contains(g):
        raise GroupDomainError("element is not in the group")
    return subgroup_from_elements(G.degree, [x for x in G.elements if x * g == g * x])

def normalizer(G: PermGroup, U: PermGroup) -> PermGroup:
    _require_subgroup(U, G)
    return subgroup_from_elements(
        G.degree, [x for x in G.elements if all(U.contains(h.conjugate(x)) for h in U.generators)]
    )

def center(G: PermGroup) -> PermGroup:
    return subgroup_from_elements(
        G.degree, [x for x in G.elements if all(x * g == g * x for g in G.generators)]
    )

def are_conjugate(G: PermGroup, U: PermGroup, V: PermGroup):

    """Returns some g in G with U^g = V, or None."""

    if U.order != V.order:
        return None
    for g in G.sorted_elements:
        if all(V.contains(h.conjugate(g)) for h in U.generators):
            return g
    return None


# --- Normal subgroup lattice ---

def normal_subgroups(G: PermGroup) -> list:

    """
    Enumerates every normal subgroup of G.

    Normal closures of single classes are joined breadth-first; every normal
    subgroup is such a join, so the list is complete.

    Args:
        G (PermGroup): Group of order within the configured bound.

    Returns:
        list: Normal subgroups sorted by the fixed subgroup order, from 1 to G.
    """

    key = G.key()
    with _NORMAL_LOCK:
        cached = _NORMAL_CACHE.get(key)
    if cached is not None:
        return cached

    closures = []
    seen_closures = set()
    for cls in G.conjugacy_classes()[1:]:
        N = normal_closure(G, [cls.representative])
        if N.elements not in seen_closures:
            seen_closures.add(N.elements)
            closures.append(N)

    one = trivial_group(G.degree)
    found = {one.elements: one}
    queue = deque([one])

    while queue:
        N = queue.popleft()
        for M in closures:
            if M.is_subgroup_of(N):
                continue
            J = join(N, M)
            if J.elements not in found:
                found[J.elements] = J
                queue.append(J)

    result = sorted(found.values(), key=lambda U: U.sort_key())
    with _NORMAL_LOCK:
        _NORMAL_CACHE[key] = result
    return result

def is_nilpotent(G: PermGroup) -> bool:
    return all(sylow(G, p).is_normal_in(G) for p in primefactors(G.order))

def largest_normal_p_subgroup(G: PermGroup, p: int) -> PermGroup:

    """O_p(G): the largest normal subgroup of p-power order."""

    candidates = [N for N in normal_subgroups(G) if set(primefactors(N.order)) <= {p}]
    return max(candidates, key=lambda N: N.order)

def fitting_subgroup(G: PermGroup) -> PermGroup:
    F = trivial_group(G.degree)
    for p in primefactors(G.order):
        F = join(F, largest_normal_p_subgroup(G, p))
    return F


# --- Sylow and overgroups ---

def sylow(G: PermGroup, p: int) -> PermGroup:

    """
    Builds a Sylow p-subgroup by growing P inside its normalizer.

    Args:
        G (PermGroup): The group.
        p (int): A prime.

    Returns:
        PermGroup: A subgroup of order the full p-part of |G|.
    """

    if not isprime(p):
        raise GroupDomainError(f"{p} is not prime")

    target = p ** multiplicity(p, G.order)
    P = trivial_group(G.degree)

    while P.order < target:
        N = normalizer(G, P)
        x = next(x for x in N.sorted_elements if not P.contains(x) and P.contains(x ** p))
        P = join(P, [x])

    return P

def overgroups(G: PermGroup, H: PermGroup) -> list:

    """All subgroups U with H <= U <= G, by closure under single-element joins."""

    _require_subgroup(H, G)
    found = {H.elements: H}
    queue = deque([H])

    while queue:
        U = queue.popleft()
        for x in G.sorted_elements:
            if U.contains(x):
                continue
            J = join(U, [x])
            if J.elements not in found:
                found[J.elements] = J
                queue.append(J)

    return sorted(found.values(), key=lambda U: U.sort_key())


# --- Complements ---

def complement(G: PermGroup, A: PermGroup, seed: int = None):

    """
    Finds a complement of an abelian normal subgroup.

    Lifts of a minimal generating set of G/A are searched, first at random,
    then exhaustively; the lifts generate a complement exactly when they
    generate a group of order |G:A|.

    Args:
        G (PermGroup): The group.
        A (PermGroup): Abelian normal subgroup of G.
        seed (int): Optional. Seed for the random phase.

    Returns:
        PermGroup | None: A complement, or None when the exhaustive sweep
        proves there is none.
    """

    if not (A.is_normal_in(G) and A.is_abelian()):
        raise GroupDomainError("complement requires an abelian normal subgroup")

    if A.is_trivial():
        return G
    if A.order == G.order:
        return trivial_group(G.degree)

    settings = get_settings()
    target = G.order // A.order
    _, pi = quotient(G, A)

    # Generators of G whose images already generate G/A
    image_chain = StabilizerChain(pi.target.degree)
    tops = [g for g in G.generators if image_chain.add_generator(pi.image(g))]
    shifts = A.sorted_elements

    def attempt(lifts):
        chain = StabilizerChain(G.degree)
        for g in lifts:
            chain.add_generator(g)
            if chain.order() > target:
                return None
        if chain.order() == target:
            return PermGroup(G.degree, lifts, chain=chain)
        return None

    rng = random.Random(settings.random_seed if seed is None else seed)
    for _ in range(settings.complement_attempts):
        C = attempt([g * rng.choice(shifts) for g in tops])
        if C is not None:
            return C

    logger.debug(f"⏳ Random complement search exhausted, sweeping {len(shifts) ** len(tops)} lifts")
    for choice in product(shifts, repeat=len(tops)):
        C = attempt([g * a for g, a in zip(tops, choice)])
        if C is not None:
            return C

    return None
