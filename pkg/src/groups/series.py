# Local Imports
from src.errors import GroupDomainError, UnsupportedGroupError
from src.groups.perm_group import PermGroup, trivial_group
from src.groups.group_maps import quotient
from src.groups.subgroups import (
    normal_subgroups, is_solvable, join, fitting_subgroup, pick,
    maximal_by_inclusion, minimal_by_inclusion,
)




# --- Auxiliar Functions ---

def _require_solvable(G: PermGroup) -> None:
    if not is_solvable(G):
        raise UnsupportedGroupError("only solvable groups are supported")

def _distinct_chain(groups: list) -> list:

    """Sorts by order and drops repeated subgroups."""

    out = []
    for U in sorted(groups, key=lambda U: U.sort_key()):
        if not out or out[-1] != U:
            out.append(U)
    return out


# --- Chief series ---

def minimal_normal_subgroups(G: PermGroup) -> list:
    _require_solvable(G)
    nontrivial = [N for N in normal_subgroups(G) if not N.is_trivial()]
    return sorted(minimal_by_inclusion(nontrivial), key=lambda U: U.sort_key())

def chief_series(G: PermGroup, prefer: str = "first") -> list:

    """
    Chief series 1 = C_0 < ... < C_k = G of a solvable group.

    Built from the top: each term is a maximal normal subgroup of G inside the
    previous one.
    """

    _require_solvable(G)
    normals = normal_subgroups(G)
    current = G
    descending = [G]

    while not current.is_trivial():
        below = [N for N in normals if N.order < current.order and N.is_subgroup_of(current)]
        current = pick(maximal_by_inclusion(below), prefer)
        descending.append(current)

    return descending[::-1]

def h_composition_series(G: PermGroup, H: PermGroup, anchors=(), prefer: str = "first") -> list:

    """
    H-composition series 1 = S_0 < ... < S_r = G through the given anchors.

    Each S_i is H-invariant and normal in S_{i+1}, and S_{i+1}/S_i has no
    proper nontrivial subgroup that is H-invariant and normal in S_{i+1}.
    Gaps between anchors are refined from the top, taking at each step a
    maximal normal subgroup of S_{i+1}H between the lower anchor and S_{i+1}.
    Intersecting a chief series of KH through L with K, for anchors L < K, is
    one such refinement; working in S_{i+1}H instead of KH allows more
    choices but keeps every factor H-simple.

    Args:
        G (PermGroup): The group.
        H (PermGroup): Operator subgroup of G.
        anchors: Optional. H-invariant subgroups forming a subnormal chain.
        prefer (str): Optional. "first" or "last" tie-break between candidates.

    Returns:
        list: The series from 1 up to G.
    """

    if not H.is_subgroup_of(G):
        raise GroupDomainError("operator group is not a subgroup")

    for A in anchors:
        if not A.is_subgroup_of(G) or not A.is_invariant_under(H):
            raise GroupDomainError("anchor is not an H-invariant subgroup")

    chain = _distinct_chain([trivial_group(G.degree), *anchors, G])
    for lower, upper in zip(chain, chain[1:]):
        if not lower.is_normal_in(upper):
            raise GroupDomainError("anchors do not form a subnormal chain")

    series = [chain[0]]
    for lower, upper in zip(chain, chain[1:]):
        segment = [upper]
        S = upper
        while S != lower:
            X = join(S, H)
            candidates = [
                N for N in normal_subgroups(X)
                if N.order < S.order and N.is_subgroup_of(S) and lower.is_subgroup_of(N)
            ]
            S = pick(maximal_by_inclusion(candidates), prefer)
            segment.append(S)
        series.extend(segment[::-1][1:])

    return series


# --- Fitting series ---

def fitting_series(G: PermGroup) -> list:

    """Upper Fitting series 1 = F_0 < F_1 < ... < F_l = G."""

    _require_solvable(G)
    series = [trivial_group(G.degree)]

    while series[-1].order < G.order:
        Q, pi = quotient(G, series[-1])
        series.append(pi.preimage(fitting_subgroup(Q)))

    return series

def nilpotent_length(G: PermGroup) -> int:
    return len(fitting_series(G)) - 1
