# Builtin Imports
from math import prod

# Local Imports
from src.groups.perms import Perm




class StabilizerChain:

    """
    Deterministic Schreier-Sims stabilizer chain.

    Each level stores a base point, the strong generators that move it, an
    explicit transversal (orbit point -> element sending the base point there)
    and the chain of the point stabilizer below it.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.base_point = None
        self.gens = []
        self.transversal = {}
        self.stab = None

    # --- Auxiliar Functions ---

    def strong_generators(self) -> list:
        if self.stab is None:
            return list(self.gens)
        return self.stab.strong_generators() + self.gens

    def _rebuild_orbit(self):

        """Recomputes the transversal of the base point under every strong generator of this level."""

        identity = Perm.identity(self.degree)
        transversal = {self.base_point: identity}
        queue = [self.base_point]
        generators = self.strong_generators()

        while queue:
            point = queue.pop(0)
            u = transversal[point]
            for s in generators:
                image = s(point)
                if image not in transversal:
                    transversal[image] = u * s
                    queue.append(image)

        self.transversal = transversal

    def _add_nonmember(self, g: Perm):

        """Adds a generator known to lie outside the group of this level."""

        if self.base_point is None:
            self.base_point = g.first_moved_point()
            if self.base_point is None:
                return
            self.stab = StabilizerChain(self.degree)

        if g(self.base_point) == self.base_point:
            # g lies in the point stabilizer
            self.stab._add_nonmember(g)
        else:
            self.gens.append(g)

        self._rebuild_orbit()

        for s in self.strong_generators():
            for point in sorted(self.transversal):
                u = self.transversal[point]
                schreier = u * s * ~self.transversal[s(point)]
                self.stab.add_generator(schreier)

    # --- Main Functions ---

    def sift(self, g: Perm) -> Perm:

        """
        Strips g through the chain.

        Args:
            g (Perm): Element to sift.

        Returns:
            Perm: The residue; the identity exactly when g is a member.
        """

        level = self
        while level.base_point is not None:
            image = g(level.base_point)
            u = level.transversal.get(image)
            if u is None:
                return g
            g = g * ~u
            level = level.stab
        return g

    def contains(self, g: Perm) -> bool:
        return g.degree == self.degree and self.sift(g).is_identity()

    def add_generator(self, g: Perm) -> bool:

        """Extends the chain by g, returning True when g was not already a member."""

        residue = self.sift(g)
        if residue.is_identity():
            return False
        self._add_nonmember(residue)
        return True

    def base(self) -> list:
        out = []
        level = self
        while level.base_point is not None:
            out.append(level.base_point)
            level = level.stab
        return out

    def orbit_lengths(self) -> list:
        out = []
        level = self
        while level.base_point is not None:
            out.append(len(level.transversal))
            level = level.stab
        return out

    def order(self) -> int:
        return prod(self.orbit_lengths())

    def elements(self) -> list:

        """Enumerates the group as products s * u over the stabilizer and the transversal."""

        if self.base_point is None:
            return [Perm.identity(self.degree)]
        lower = self.stab.elements()
        return [s * u for s in lower for u in self.transversal.values()]
