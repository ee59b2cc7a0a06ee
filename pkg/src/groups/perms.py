# Builtin Imports
import re
import math
from dataclasses import dataclass
from functools import reduce

# Local Imports
from src.errors import GroupParseError




# Cycle notation: "(0 1 2)(3 4)", commas allowed as separators, "()" is the identity
ELEMENT_SEP_RE = r" *[, ] *"
CYCLE_RE = rf"\(( *\d+({ELEMENT_SEP_RE}\d+)* *)?\) *"


@dataclass(frozen=True, order=True)
class Perm:

    """
    A permutation of {0, ..., degree-1} stored as its image array.

    Products read left to right: (p * q)(i) = q(p(i)), i.e. p is applied first.
    Ordering is lexicographic on the image arrays; the identity is the least
    permutation of its degree.
    """

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise GroupParseError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: list) -> "Perm":

        """Builds a permutation from disjoint cycles, rejecting repeated or out-of-range points."""

        images = list(range(degree))
        seen = set()

        for cycle in cycles:
            for point in cycle:
                if point >= degree or point < 0:
                    raise GroupParseError(f"point {point} out of range for degree {degree}")
                if point in seen:
                    raise GroupParseError(f"point {point} repeated in cycle notation")
                seen.add(point)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b

        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        q = other.images
        return Perm(tuple(q[i] for i in self.images))

    def __invert__(self) -> "Perm":
        inverse = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inverse[j] = i
        return Perm(tuple(inverse))

    def __pow__(self, exponent: int) -> "Perm":
        if exponent < 0:
            return (~self) ** (-exponent)
        result = Perm.identity(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def first_moved_point(self):
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def conjugate(self, g: "Perm") -> "Perm":

        """Returns g^-1 * self * g."""

        return ~g * self * g

    def commutator(self, other: "Perm") -> "Perm":

        """Returns [self, other] = self^-1 other^-1 self other."""

        return ~self * ~other * self * other

    def cycles(self) -> list:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(cycle)
        return out

    def order(self) -> int:
        return reduce(lambda a, b: a * b // math.gcd(a, b), (len(c) for c in self.cycles()), 1)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Perm({format_cycles(self)}, degree={self.degree})"


# --- Cycle notation ---

def format_cycles(p: Perm) -> str:

    """Displays a permutation as a product of disjoint cycles, "()" for the identity."""

    out = ["(" + " ".join(map(str, cycle)) + ")" for cycle in p.cycles()]
    return "".join(out) if out else "()"

def parse_cycles(text: str, degree: int) -> Perm:

    """
    Parses a product of disjoint cycles such as "(0 1)(2 3)".

    Args:
        text (str): Cycle notation; points are 0-based.
        degree (int): Number of points the permutation acts on.

    Returns:
        Perm: The parsed permutation.
    """

    cycles = []
    stripped = re.subn(r"\s", " ", text)[0].strip()

    if not stripped:
        raise GroupParseError("empty cycle word")

    for match in re.finditer(CYCLE_RE + r"|.", stripped):
        token = match.group().strip()
        if len(token) <= 1 and token != "":
            raise GroupParseError(f"could not parse cycle word {text!r}")
        body = token[1:-1].strip()
        if not body:
            continue
        cycles.append([int(x) for x in re.split(ELEMENT_SEP_RE, body)])

    return Perm.from_cycles(degree, cycles)
