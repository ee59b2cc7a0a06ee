# Builtin Imports
import threading
from dataclasses import dataclass, field

# Local Imports
from src.errors import GroupDomainError, InternalInconsistencyError
from src.formations.descriptors import FormationDescriptor, is_member
from src.groups.perm_group import PermGroup
from src.groups.group_maps import quotient
from src.groups.subgroups import (
    normal_subgroups, intersection, join, derived_subgroup, normalizer,
    complement, overgroups, are_conjugate,
)
from src.groups.series import minimal_normal_subgroups
from src.settings import get_settings
from src.logger import get_logger




logger = get_logger("formations.projectors")

_PROJECTOR_CACHE = {}
_PROJECTOR_LOCK = threading.Lock()


@dataclass
class ProjectorReport:

    """Outcome of the brute-force projector property checks; None marks a property not checked."""

    group: str
    formation: str
    projector_order: int
    properties: dict = field(default_factory=dict)
    self_normalizing_required: bool = True
    partially_verified: bool = False
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        checked = {k: v for k, v in self.properties.items() if v is not None}
        if not self.self_normalizing_required:
            checked.pop("e", None)
        return all(checked.values())


# --- Residuals ---

def residual(G: PermGroup, F: FormationDescriptor) -> PermGroup:

    """
    The F-residual: intersection of the normal subgroups with quotient in F.

    Args:
        G (PermGroup): A solvable group.
        F (FormationDescriptor): The formation.

    Returns:
        PermGroup: G^F, normal in G with G/G^F in F.
    """

    result = G
    for N in normal_subgroups(G):
        if result.is_subgroup_of(N):
            continue
        Q, _ = quotient(G, N)
        if is_member(Q, F):
            result = intersection(result, N)
    return result


# --- Projectors ---

def projector(G: PermGroup, F: FormationDescriptor, seed: int = None) -> PermGroup:

    """
    An F-projector of a solvable group.

    Recursion on a minimal normal subgroup A chosen first in the fixed
    subgroup order: the preimage U of a projector of G/A either is proper,
    and a projector of U is returned, or equals G, in which case A is the
    residual and its complements are the projectors.

    Args:
        G (PermGroup): A solvable group.
        F (FormationDescriptor): A saturated formation.
        seed (int): Optional. Seed for the complement search.

    Returns:
        PermGroup: An F-projector of G.
    """

    key = (G.key(), F, seed)
    with _PROJECTOR_LOCK:
        cached = _PROJECTOR_CACHE.get(key)
    if cached is not None:
        return cached

    if is_member(G, F):
        H = G
    else:
        A = minimal_normal_subgroups(G)[0]
        Q, pi = quotient(G, A)
        U = pi.preimage(projector(Q, F, seed))

        if U.order < G.order:
            H = projector(U, F, seed)
        else:
            H = complement(G, A, seed)
            if H is None:
                raise InternalInconsistencyError("the residual has no complement although it is abelian minimal normal")

    logger.debug(f"✅ Projector of order {H.order} in a group of order {G.order} for {F.name}")

    with _PROJECTOR_LOCK:
        _PROJECTOR_CACHE[key] = H
    return H

def is_f_maximal(G: PermGroup, U: PermGroup, F: FormationDescriptor) -> bool:

    """True when U is in F and no subgroup strictly between U and G is in F."""

    if not is_member(U, F):
        return False
    return not any(V.order > U.order and is_member(V, F) for V in overgroups(G, U))

def is_projector_of(G: PermGroup, H: PermGroup, F: FormationDescriptor) -> bool:

    """Brute force: HN/N is F-maximal in G/N for every normal subgroup N."""

    if not H.is_subgroup_of(G):
        return False
    for N in normal_subgroups(G):
        Q, pi = quotient(G, N)
        if not is_f_maximal(Q, pi.image_subgroup(H), F):
            return False
    return True

def verify_projector_properties(G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> ProjectorReport:

    """
    Checks the standard properties of an F-projector H of G.

    (a) H is a projector of every U with H <= U <= G; (b) HN/N is a projector
    of G/N for every normal N; (c) HN/N is conjugate in G/N to a projector
    computed directly there; (d) N_G(NH) = N N_G(H) for every normal N;
    (e) H is self-normalizing, required only when F contains the nilpotent
    groups. Above the exhaustive bound (a) is skipped and (b) is reduced to
    membership of HN/N in F.

    Args:
        G (PermGroup): A solvable group.
        F (FormationDescriptor): The formation.
        H (PermGroup): Optional. The projector to check; computed when absent.

    Returns:
        ProjectorReport: One boolean (or None) per property.
    """

    H = H or projector(G, F)
    exhaustive = G.order <= get_settings().exhaustive_order
    report = ProjectorReport(
        group=G.name or f"order {G.order}", formation=F.name, projector_order=H.order,
        self_normalizing_required=F.contains_nilpotent, partially_verified=not exhaustive,
    )

    normals = normal_subgroups(G)
    N_H = normalizer(G, H)

    # (a)
    if exhaustive:
        bad = [U for U in overgroups(G, H) if not is_projector_of(U, H, F)]
        report.properties["a"] = not bad
        report.failures += [f"(a) not a projector of a subgroup of order {U.order}" for U in bad]
    else:
        report.properties["a"] = None

    b_ok = c_ok = d_ok = True
    for N in normals:
        Q, pi = quotient(G, N)
        image = pi.image_subgroup(H)

        # (b)
        ok = is_projector_of(Q, image, F) if exhaustive else is_member(image, F)
        if not ok:
            b_ok = False
            report.failures.append(f"(b) fails for a normal subgroup of order {N.order}")

        # (c)
        if are_conjugate(Q, image, projector(Q, F)) is None:
            c_ok = False
            report.failures.append(f"(c) image not conjugate to a direct projector, normal subgroup of order {N.order}")

        # (d)
        NH = join(N, H)
        if normalizer(G, NH) != join(N, N_H):
            d_ok = False
            report.failures.append(f"(d) fails for a normal subgroup of order {N.order}")

    report.properties["b"] = b_ok
    report.properties["c"] = c_ok
    report.properties["d"] = d_ok

    # (e)
    report.properties["e"] = N_H == H
    if report.self_normalizing_required and not report.properties["e"]:
        report.failures.append("(e) projector is not self-normalizing")

    return report


# --- Navarro condition and the intersection lemma ---

def navarro_condition(G: PermGroup, K: PermGroup, L: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> bool:

    """
    K/L abelian, KH = G and K meets LH exactly in L, for an F-projector H.

    Args:
        G (PermGroup): The group.
        K (PermGroup): Normal subgroup of G.
        L (PermGroup): Normal subgroup of G inside K.
        F (FormationDescriptor): The formation.
        H (PermGroup): Optional. Projector to use; computed when absent.

    Returns:
        bool: Whether the three conditions hold.
    """

    if not (K.is_normal_in(G) and L.is_normal_in(G) and L.is_subgroup_of(K)):
        raise GroupDomainError("expected normal subgroups L <= K of G")

    return navarro_triple_holds(G, K, L, H or projector(G, F))

def navarro_triple_holds(G: PermGroup, K: PermGroup, L: PermGroup, H: PermGroup) -> bool:

    """The three conditions for a given subgroup H, with no projector check."""

    if not derived_subgroup(K).is_subgroup_of(L):
        return False
    if join(K, H) != G:
        return False
    return intersection(K, join(L, H)) == L

def hup_check(G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> list:

    """
    Checks MN meets H in (M meet H)(N meet H) for all normal M, N.

    Returns:
        list: Pairs of subgroup orders (|M|, |N|) where the identity fails; empty on success.
    """

    H = H or projector(G, F)
    normals = normal_subgroups(G)
    failures = []

    for i, M in enumerate(normals):
        for N in normals[i + 1:]:
            left = intersection(join(M, N), H)
            right = join(intersection(M, H), intersection(N, H))
            if left != right:
                failures.append((M.order, N.order))

    return failures
