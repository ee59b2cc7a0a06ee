# Builtin Imports
import threading
from dataclasses import dataclass
from functools import reduce
from math import gcd

# Local Imports
from src.errors import CapacityError, GroupDomainError
from src.groups.perms import Perm, parse_cycles, format_cycles
from src.groups.stabilizer_chain import StabilizerChain
from src.settings import get_settings




# Single lock for every lazily filled cache; values never change once written
_CACHE_LOCK = threading.RLock()


@dataclass(frozen=True)
class ConjClass:

    """A conjugacy class: minimal element as representative plus the full element set."""

    representative: Perm
    elements: frozenset

    @property
    def size(self) -> int:
        return len(self.elements)


class PermGroup:

    """
    Finitely generated permutation group on {0, ..., degree-1}.

    Generators are kept exactly as given. Order and membership come from a
    lazily built stabilizer chain; element lists, conjugacy classes and the
    fixed sort key are cached on first use.
    """

    def __init__(self, degree: int, generators=(), name: str = None, chain: StabilizerChain = None):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise GroupDomainError(f"generator {g} has degree {g.degree}, expected {degree}")

        self.degree = degree
        self.generators = generators
        self.name = name
        self._chain = chain
        self._elements = None
        self._sorted = None
        self._classes = None
        self._class_index = None
        self._orbits = None

    # --- Stabilizer chain ---

    @property
    def chain(self) -> StabilizerChain:
        with _CACHE_LOCK:
            if self._chain is None:
                chain = StabilizerChain(self.degree)
                for g in self.generators:
                    chain.add_generator(g)
                self._chain = chain
            return self._chain

    @property
    def order(self) -> int:
        return self.chain.order()

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def contains(self, g: Perm) -> bool:
        return self.chain.contains(g)

    def __contains__(self, g: Perm) -> bool:
        return self.contains(g)

    # --- Element enumeration ---

    def check_capacity(self, bound: int = None) -> None:
        bound = bound or get_settings().max_order
        if self.order > bound:
            raise CapacityError(f"group of order {self.order} exceeds the configured bound {bound}")

    @property
    def elements(self) -> frozenset:
        with _CACHE_LOCK:
            if self._elements is None:
                self.check_capacity()
                self._elements = frozenset(self.chain.elements())
            return self._elements

    @property
    def sorted_elements(self) -> tuple:
        with _CACHE_LOCK:
            if self._sorted is None:
                self._sorted = tuple(sorted(self.elements))
            return self._sorted

    def sort_key(self) -> tuple:

        """Fixed total order on subgroups of a common parent: order first, then sorted elements."""

        return (self.order, tuple(p.images for p in self.sorted_elements))

    def orbits(self) -> tuple:

        """Orbits on points as sorted tuples, ordered by least point."""

        with _CACHE_LOCK:
            if self._orbits is None:
                seen = set()
                orbits = []
                for start in range(self.degree):
                    if start in seen:
                        continue
                    orbit = {start}
                    frontier = [start]
                    while frontier:
                        point = frontier.pop()
                        for g in self.generators:
                            image = g.images[point]
                            if image not in orbit:
                                orbit.add(image)
                                frontier.append(image)
                    seen |= orbit
                    orbits.append(tuple(sorted(orbit)))
                self._orbits = tuple(orbits)
            return self._orbits

    def key(self) -> tuple:
        return (self.degree, self.sort_key())

    # --- Structure predicates ---

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def is_normal_in(self, other: "PermGroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(self.contains(h.conjugate(g)) for g in other.generators for h in self.generators)

    def is_invariant_under(self, other: "PermGroup") -> bool:

        """True when every generator of other normalizes self."""

        return all(self.contains(h.conjugate(g)) for g in other.generators for h in self.generators)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all((a * b) == (b * a) for i, a in enumerate(gens) for b in gens[i + 1:])

    def exponent(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), (g.order() for g in self.elements), 1)

    # --- Conjugacy classes ---

    def conjugacy_classes(self) -> list:

        """
        Computes the conjugacy classes by orbit search under conjugation.

        Returns:
            list: ConjClass values sorted by size, then by representative; the
            identity class comes first.
        """

        with _CACHE_LOCK:
            if self._classes is None:
                self.check_capacity()
                seen = set()
                classes = []

                for x in self.sorted_elements:
                    if x in seen:
                        continue
                    orbit = {x}
                    frontier = [x]
                    while frontier:
                        y = frontier.pop()
                        for g in self.generators:
                            z = y.conjugate(g)
                            if z not in orbit:
                                orbit.add(z)
                                frontier.append(z)
                    seen |= orbit
                    classes.append(ConjClass(representative=min(orbit), elements=frozenset(orbit)))

                classes.sort(key=lambda c: (c.size, c.representative))
                self._class_index = {x: i for i, c in enumerate(classes) for x in c.elements}
                self._classes = classes
            return self._classes

    def class_index(self, g: Perm) -> int:

        """Index of the conjugacy class containing g."""

        self.conjugacy_classes()
        try:
            return self._class_index[g]
        except KeyError:
            raise GroupDomainError(f"{format_cycles(g)} is not an element of the group")

    # --- Dunder and display ---

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        if self.degree != other.degree or self.order != other.order:
            return False
        return all(self.contains(g) for g in other.generators)

    def __hash__(self) -> int:
        # Orbits depend only on the group, not on the chosen generators
        return hash((self.degree, self.order, self.orbits()))

    def __le__(self, other: "PermGroup") -> bool:
        return self.is_subgroup_of(other)

    def __lt__(self, other: "PermGroup") -> bool:
        return self.is_subgroup_of(other) and self.order < other.order

    def generator_words(self) -> list:
        return [format_cycles(g) for g in self.generators]

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} order={self.order} gens={self.generator_words()}>"


# --- Constructors ---

def generate(degree: int, generator_words: list, name: str = None) -> PermGroup:

    """
    Builds a permutation group from cycle words and certifies its order.

    Args:
        degree (int): Number of points.
        generator_words (list): Generators in cycle notation, e.g. ["(0 1)", "(0 1 2 3)"].
        name (str): Optional. Display name.

    Returns:
        PermGroup: The generated group with its stabilizer chain built.
    """

    generators = [parse_cycles(word, degree) for word in generator_words]
    group = PermGroup(degree, generators, name=name)
    group.chain
    return group

def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, (), chain=StabilizerChain(degree))

def subgroup_from_elements(degree: int, elements, name: str = None) -> PermGroup:

    """Subgroup generated by the given elements, keeping only generators that enlarge it."""

    chain = StabilizerChain(degree)
    generators = [g for g in sorted(elements) if chain.add_generator(g)]
    return PermGroup(degree, generators, name=name, chain=chain)
