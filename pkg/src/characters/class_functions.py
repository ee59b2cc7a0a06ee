# Builtin Imports
from fractions import Fraction

# Local Imports
from src.errors import CharacterError, GroupDomainError
from src.characters.cyclotomic import Cyclotomic
from src.groups.perms import Perm
from src.groups.perm_group import PermGroup, subgroup_from_elements
from src.groups.group_maps import GroupMap




class ClassFunction:

    """
    A function constant on conjugacy classes, one Cyclotomic per class.

    The class order is the one fixed by PermGroup.conjugacy_classes, so two
    class functions on equal groups compare value by value.
    """

    __slots__ = ("group", "values")

    def __init__(self, group: PermGroup, values):
        values = tuple(Cyclotomic.coerce(v) for v in values)
        if len(values) != len(group.conjugacy_classes()):
            raise CharacterError("one value per conjugacy class is required")
        self.group = group
        self.values = values

    def __call__(self, g: Perm) -> Cyclotomic:
        return self.values[self.group.class_index(g)]

    @property
    def degree(self) -> int:
        return int(self.values[0].to_rational())

    def _check_same_group(self, other: "ClassFunction") -> None:
        if self.group is not other.group and self.group != other.group:
            raise CharacterError("class functions live on different groups")

    # --- Pointwise algebra ---

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_same_group(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_same_group(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._check_same_group(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, [v.conjugate() for v in self.values])

    def norm(self) -> Cyclotomic:
        return inner_product(self, self)

    def is_irreducible(self) -> bool:

        """True for a character of norm one and positive degree."""

        return self.norm() == 1 and self.values[0].is_rational() and self.values[0].to_rational() > 0

    def is_linear(self) -> bool:
        return self.values[0] == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        if self.group is not other.group and self.group != other.group:
            return False
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return "ClassFunction(" + ", ".join(str(v) for v in self.values) + ")"


# --- Standard class functions ---

def trivial_character(G: PermGroup) -> ClassFunction:
    return ClassFunction(G, [1] * len(G.conjugacy_classes()))

def regular_character(G: PermGroup) -> ClassFunction:
    return ClassFunction(G, [G.order] + [0] * (len(G.conjugacy_classes()) - 1))


# --- Inner products, restriction and induction ---

def inner_product(a: ClassFunction, b: ClassFunction) -> Cyclotomic:

    """
    Standard inner product (1/|G|) sum over classes of size * a * conj(b).

    Args:
        a (ClassFunction): First class function.
        b (ClassFunction): Second class function on the same group.

    Returns:
        Cyclotomic: The exact inner product.
    """

    a._check_same_group(b)
    classes = a.group.conjugacy_classes()
    total = Cyclotomic.rational(0)
    for cls, x, y in zip(classes, a.values, b.values):
        if x.is_zero() or y.is_zero():
            continue
        total = total + (x * y.conjugate()) * cls.size
    return total / a.group.order

def restrict(chi: ClassFunction, U: PermGroup) -> ClassFunction:
    if not U.is_subgroup_of(chi.group):
        raise CharacterError("restriction target is not a subgroup")
    return ClassFunction(U, [chi(cls.representative) for cls in U.conjugacy_classes()])

def induce(theta: ClassFunction, G: PermGroup) -> ClassFunction:

    """Induced class function: theta^G(g) = |G| / (|U| |C|) * sum over U-classes D inside C of |D| theta(D)."""

    U = theta.group
    if not U.is_subgroup_of(G):
        raise CharacterError("induction source is not a subgroup")

    classes = G.conjugacy_classes()
    sums = [Cyclotomic.rational(0) for _ in classes]
    for cls, value in zip(U.conjugacy_classes(), theta.values):
        k = G.class_index(cls.representative)
        sums[k] = sums[k] + value * cls.size

    values = [s * Fraction(G.order, U.order * cls.size) for s, cls in zip(sums, classes)]
    return ClassFunction(G, values)

def kernel(chi: ClassFunction) -> PermGroup:

    """{g : chi(g) = chi(1)}, always a normal subgroup."""

    G = chi.group
    top = chi.values[0]
    elements = [x for cls, v in zip(G.conjugacy_classes(), chi.values) if v == top for x in cls.elements]
    return subgroup_from_elements(G.degree, elements)


# --- Conjugation action ---

def conjugate_character(theta: ClassFunction, g: Perm) -> ClassFunction:

    """theta^g(x) = theta(g x g^-1); g must normalize the group of theta."""

    N = theta.group
    if not all(N.contains(h.conjugate(g)) for h in N.generators):
        raise GroupDomainError("element does not normalize the subgroup")
    return ClassFunction(N, [theta(cls.representative.conjugate(~g)) for cls in N.conjugacy_classes()])

def is_invariant(theta: ClassFunction, H: PermGroup) -> bool:
    if not theta.group.is_invariant_under(H):
        raise GroupDomainError("operator group does not normalize the subgroup")
    return all(conjugate_character(theta, h) == theta for h in H.generators)


# --- Quotients ---

def inflate(f: ClassFunction, group_map: GroupMap) -> ClassFunction:

    """Pulls a class function on the image of group_map back to its source."""

    G = group_map.source
    return ClassFunction(G, [f(group_map.image(cls.representative)) for cls in G.conjugacy_classes()])

def deflate(chi: ClassFunction, group_map: GroupMap) -> ClassFunction:

    """Pushes chi down to the target of group_map; the map's kernel must lie in ker chi."""

    if not group_map.kernel().is_subgroup_of(kernel(chi)):
        raise CharacterError("character is not constant on the fibres of the map")
    Q = group_map.target
    return ClassFunction(Q, [chi(group_map.lift(cls.representative)) for cls in Q.conjugacy_classes()])
