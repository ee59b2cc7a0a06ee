# Builtin Imports
from collections import deque

# Local Imports
from src.errors import GroupDomainError
from src.groups.perms import Perm
from src.groups.perm_group import PermGroup, subgroup_from_elements




class GroupMap:

    """
    Homomorphism between permutation groups given by generator images.

    The element table is filled by walking the Cayley graph of the source from
    the identity; every edge is checked for consistency, which certifies that
    the generator images define a homomorphism.
    """

    def __init__(self, source: PermGroup, target: PermGroup, gen_images):
        gen_images = tuple(gen_images)
        if len(gen_images) != len(source.generators):
            raise GroupDomainError("one image per source generator is required")

        self.source = source
        self.target = target
        self.gen_images = gen_images
        self._table = self._build_table()

    def _build_table(self) -> dict:
        source = self.source
        table = {source.identity: self.target.identity}
        queue = deque([source.identity])

        while queue:
            x = queue.popleft()
            fx = table[x]
            for g, fg in zip(source.generators, self.gen_images):
                y = x * g
                fy = fx * fg
                known = table.get(y)
                if known is None:
                    table[y] = fy
                    queue.append(y)
                elif known != fy:
                    raise GroupDomainError("generator images do not define a homomorphism")

        return table

    # --- Element and subgroup images ---

    def image(self, g: Perm) -> Perm:
        try:
            return self._table[g]
        except KeyError:
            raise GroupDomainError(f"{g} is not in the source group")

    def image_subgroup(self, sub: PermGroup) -> PermGroup:
        return subgroup_from_elements(self.target.degree, {self.image(g) for g in sub.generators} or [self.target.identity])

    def preimage(self, sub: PermGroup) -> PermGroup:

        """Full preimage of a subgroup of the target."""

        return subgroup_from_elements(self.source.degree, [x for x, fx in self._table.items() if sub.contains(fx)])

    def kernel(self) -> PermGroup:
        return subgroup_from_elements(
            self.source.degree, [x for x, fx in self._table.items() if fx.is_identity()]
        )

    def lift(self, y: Perm) -> Perm:

        """The least source element mapping to y."""

        candidates = [x for x, fx in self._table.items() if fx == y]
        if not candidates:
            raise GroupDomainError(f"{y} is not in the image")
        return min(candidates)


# --- Main Function ---

def quotient(G: PermGroup, N: PermGroup) -> tuple:

    """
    Realizes G/N as the action of G on the right cosets of N.

    Args:
        G (PermGroup): The group.
        N (PermGroup): A normal subgroup of G.

    Returns:
        tuple: (quotient group, GroupMap from G onto it with kernel N).
    """

    if not N.is_normal_in(G):
        raise GroupDomainError("quotient requires a normal subgroup")

    # Cosets Nx indexed by their least element; coset 0 is N itself
    coset_of = {}
    representatives = []
    for x in G.sorted_elements:
        if x in coset_of:
            continue
        index = len(representatives)
        representatives.append(x)
        for n in N.elements:
            coset_of[n * x] = index

    degree = len(representatives)
    gen_images = [
        Perm(tuple(coset_of[r * g] for r in representatives)) for g in G.generators
    ]

    Q = PermGroup(degree, gen_images, name=f"{G.name}/N" if G.name else None)
    return Q, GroupMap(G, Q, gen_images)
