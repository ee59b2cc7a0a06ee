# Builtin Imports
from dataclasses import dataclass, field

# Local Imports
from src.errors import CharacterError, GroupDomainError
from src.characters.class_functions import ClassFunction, restrict
from src.characters.clifford import extensions
from src.core.canonical_series import NavarroTriple, canonical_series
from src.core.fprime_characters import unique_invariant_below
from src.formations.descriptors import FormationDescriptor
from src.formations.projectors import projector
from src.groups.perm_group import PermGroup
from src.groups.series import h_composition_series
from src.groups.subgroups import join, intersection, normal_subgroups, maximal_by_inclusion
from src.logger import get_logger




logger = get_logger("core.pair_series")


@dataclass
class PairSeries:

    """
    Pairs (S_i, theta_i) from (1, 1) up to (G, chi).

    strong is True when every theta_i extends to S_i H; extensions holds one
    such extension per level in that case.
    """

    group: PermGroup
    projector: PermGroup
    entries: list = field(default_factory=list)
    strong: bool = False
    extensions: list = field(default_factory=list)
    failure: str = None

    def character_at(self, S: PermGroup):
        for U, theta in self.entries:
            if U == S:
                return theta
        return None


# --- Auxiliar Functions ---

def _step_down(theta: ClassFunction, M: PermGroup, U: PermGroup, H: PermGroup):

    """One factor M/U: restrict when MH = UH, else the unique invariant constituent; None if the restriction is reducible."""

    MH = join(M, H)
    if MH == join(U, H):
        alpha = restrict(theta, U)
        return alpha if alpha.is_irreducible() else None
    return unique_invariant_below(theta, NavarroTriple(MH, M, U, H))

def _extends(theta: ClassFunction, S: PermGroup, H: PermGroup) -> bool:
    return bool(extensions(theta, join(S, H)))


# --- Main Function ---

def strong_series_for(chi: ClassFunction, G: PermGroup, F: FormationDescriptor, series: list, H: PermGroup = None) -> PairSeries:

    """
    Walks an H-composition series downwards from (G, chi).

    When S_i H = S_{i-1} H the character is restricted; otherwise the triple
    (S_i H, S_i, S_{i-1}) is a Navarro triple and the next character is the
    unique H-invariant constituent below. The result is strong when each
    character extends to S_i H.

    Args:
        chi (ClassFunction): An irreducible character of G.
        G (PermGroup): The group.
        F (FormationDescriptor): The formation.
        series (list): An H-composition series of G, bottom first.
        H (PermGroup): Optional. The projector; computed when absent.

    Returns:
        PairSeries: The series of pairs; strong is False with a reason when it fails.
    """

    if chi.group != G:
        raise CharacterError("the character does not belong to G")
    H = H or projector(G, F)
    if not series or not series[0].is_trivial() or series[-1] != G:
        raise GroupDomainError("the series must run from the trivial group to G")

    result = PairSeries(group=G, projector=H)
    descending = [(G, chi)]
    theta = chi

    for i in range(len(series) - 1, 0, -1):
        M, U = series[i], series[i - 1]
        theta = _step_down(theta, M, U, H)
        if theta is None:
            result.failure = f"restriction to the term of order {U.order} is reducible"
            result.entries = descending[::-1]
            return result
        descending.append((U, theta))

    result.entries = descending[::-1]

    for S, theta in result.entries:
        found = extensions(theta, join(S, H))
        if not found:
            result.failure = f"no extension to S H at the term of order {S.order}"
            result.extensions = []
            return result
        result.extensions.append(found[0])

    result.strong = True
    return result

def is_head_character(chi: ClassFunction, G: PermGroup, F: FormationDescriptor, H: PermGroup = None, prefer: str = "first") -> bool:

    """True when chi has a strong pair series along an H-composition series through the canonical series."""

    cs = canonical_series(G, F, H)
    series = h_composition_series(G, cs.projector, cs.anchors(), prefer)
    return strong_series_for(chi, G, F, series, cs.projector).strong

def series_independence_check(chi: ClassFunction, G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> dict:

    """
    Builds strong series along several H-composition series and compares them.

    Uses the anchored series with both tie-breaks and an unanchored one. Every
    variant must give a strong series, and on every subgroup that two of them
    share the characters must agree.

    Returns:
        dict: {"strong": per-series flags, "failures": {variant: reason},
        "shared_terms": count, "agree": bool}.
    """

    cs = canonical_series(G, F, H)
    H = cs.projector

    variants = [
        h_composition_series(G, H, cs.anchors(), "first"),
        h_composition_series(G, H, cs.anchors(), "last"),
        h_composition_series(G, H, (), "last"),
    ]
    pair_series = [strong_series_for(chi, G, F, s, H) for s in variants]

    failures = {i: p.failure for i, p in enumerate(pair_series) if not p.strong}
    for i, reason in failures.items():
        logger.warning(f"❌ Series variant {i} is not strong: {reason}")

    shared = 0
    agree = not failures
    strong = [p for p in pair_series if p.strong]
    for a in range(len(strong)):
        for b in range(a + 1, len(strong)):
            for S, theta in strong[a].entries:
                other = strong[b].character_at(S)
                if other is None:
                    continue
                shared += 1
                if other != theta:
                    agree = False
                    logger.warning(f"❌ Series disagree on the term of order {S.order}")

    return {
        "strong": [p.strong for p in pair_series],
        "failures": failures,
        "shared_terms": shared,
        "agree": agree,
    }

def diamond_check(chi: ClassFunction, G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> dict:

    """
    Checks the two routes around every diamond met by the anchored strong series.

    For a term M of the series with next term U, every other maximal normal
    subgroup V of MH below M gives D = U meet V. Descending M -> U -> D and
    M -> V -> D must reach the same character of D, and when the route
    through U stays strong at D so must the route through V.

    Returns:
        dict: {"diamonds": count, "agree": bool, "strong_transfers": bool}.
    """

    cs = canonical_series(G, F, H)
    H = cs.projector
    series = h_composition_series(G, H, cs.anchors())
    base = strong_series_for(chi, G, F, series, H)
    outcome = {"diamonds": 0, "agree": True, "strong_transfers": True}
    if not base.strong:
        return outcome

    for (U, theta_U), (M, theta_M) in zip(base.entries, base.entries[1:]):
        if U.is_trivial():
            continue
        MH = join(M, H)
        others = maximal_by_inclusion([
            N for N in normal_subgroups(MH)
            if N.order < M.order and N.is_subgroup_of(M)
        ])

        for V in others:
            if V == U:
                continue
            D = intersection(U, V)
            via_U = _step_down(theta_U, U, D, H)
            theta_V = _step_down(theta_M, M, V, H)
            via_V = _step_down(theta_V, V, D, H) if theta_V is not None else None
            outcome["diamonds"] += 1

            if via_U != via_V:
                outcome["agree"] = False
                logger.warning(f"❌ Diamond below the term of order {M.order} gives different characters")
                continue
            if via_U is not None and _extends(via_U, D, H) and not _extends(theta_V, V, H):
                outcome["strong_transfers"] = False

    return outcome
