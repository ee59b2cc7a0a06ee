# Builtin Imports
from dataclasses import dataclass

# Local Imports
from src.errors import UnsupportedGroupError, InternalInconsistencyError, GroupDomainError
from src.formations.descriptors import FormationDescriptor
from src.formations.projectors import projector, residual, navarro_triple_holds
from src.groups.perm_group import PermGroup, trivial_group
from src.groups.subgroups import derived_subgroup, join
from src.logger import get_logger




logger = get_logger("core.canonical_series")


@dataclass(frozen=True)
class NavarroTriple:

    """(group, K, L) with operator projector H: K/L abelian, KH = group, K meets LH in L."""

    group: PermGroup
    K: PermGroup
    L: PermGroup
    H: PermGroup

    def check(self) -> None:
        if not navarro_triple_holds(self.group, self.K, self.L, self.H):
            raise GroupDomainError("the triple does not satisfy the Navarro condition")


@dataclass
class CanonicalSeries:

    """
    G > K_0 > L_0 > K_1 > ... > L_{m-1} > K_m = 1 for a projector H.

    K_0 is the residual of G, L_i the derived subgroup of K_i and K_{i+1} the
    residual of L_i H.
    """

    group: PermGroup
    formation: FormationDescriptor
    projector: PermGroup
    pairs: list

    @property
    def m(self) -> int:
        return len(self.pairs)

    def level_group(self, i: int) -> PermGroup:

        """K_i H; the whole group at level 0."""

        if i == 0:
            return self.group
        return join(self.pairs[i][0], self.projector)

    def triple(self, i: int) -> NavarroTriple:
        K, L = self.pairs[i]
        return NavarroTriple(self.level_group(i), K, L, self.projector)

    def K(self, i: int) -> PermGroup:
        return self.pairs[i][0] if i < self.m else trivial_group(self.group.degree)

    def anchors(self) -> list:

        """K_0, L_0, ..., K_{m-1}, L_{m-1}, the subgroups an H-composition series must pass through."""

        return [U for pair in self.pairs for U in pair]


# --- Main Function ---

def canonical_series(G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> CanonicalSeries:

    """
    Builds and verifies the canonical series of G for F.

    Args:
        G (PermGroup): A solvable group.
        F (FormationDescriptor): A formation containing the nilpotent groups.
        H (PermGroup): Optional. The F-projector to use; computed when absent.

    Returns:
        CanonicalSeries: The verified chain.
    """

    if not F.contains_nilpotent:
        raise UnsupportedGroupError(f"{F.name} does not contain the nilpotent groups")

    H = H or projector(G, F)
    pairs = []
    K = residual(G, F)

    while not K.is_trivial():
        L = derived_subgroup(K)
        pairs.append((K, L))
        K = residual(join(L, H), F)

    series = CanonicalSeries(group=G, formation=F, projector=H, pairs=pairs)

    # K_i H = L_{i-1} H and K_i <= L_{i-1}
    for i in range(1, series.m):
        K_i = pairs[i][0]
        L_prev = pairs[i - 1][1]
        if not K_i.is_subgroup_of(L_prev) or join(K_i, H) != join(L_prev, H):
            raise InternalInconsistencyError(f"canonical series invariant fails at level {i}")

    if series.m and join(pairs[-1][1], H) != H:
        raise InternalInconsistencyError("the last layer does not close at the projector")

    for i in range(series.m):
        if not navarro_triple_holds(*_triple_args(series, i)):
            raise InternalInconsistencyError(f"level {i} of the canonical series is not a Navarro triple")

    logger.debug(f"✅ Canonical series of length {series.m} for {F.name}")
    return series

def _triple_args(series: CanonicalSeries, i: int) -> tuple:
    t = series.triple(i)
    return (t.group, t.K, t.L, t.H)
