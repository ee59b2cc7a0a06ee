# Builtin Imports
import threading
from dataclasses import dataclass, field
from math import isqrt

# Third-party imports
import numpy as np
from sympy import nextprime, primitive_root, primerange

# Local Imports
from src.errors import CharacterError, InternalInconsistencyError
from src.characters.cyclotomic import Cyclotomic
from src.characters.class_functions import ClassFunction
from src.characters.modular import nullspace_mod
from src.groups.perm_group import PermGroup
from src.groups.perms import format_cycles
from src.settings import get_settings
from src.logger import get_logger




logger = get_logger("characters.table")

_TABLE_CACHE = {}
_TABLE_LOCK = threading.Lock()


class _SplitFailure(Exception):
    """Raised when a prime does not separate the irreducibles; the caller retries."""


@dataclass
class CharacterTable:

    """Irreducible characters of a group with its class data and power maps."""

    group: PermGroup
    classes: list
    irreducibles: list
    exponent: int
    power_maps: dict = field(default_factory=dict)
    prime: int = 0

    def __len__(self) -> int:
        return len(self.irreducibles)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.irreducibles[i]

    def __iter__(self):
        return iter(self.irreducibles)

    def degrees(self) -> list:
        return [chi.degree for chi in self.irreducibles]

    def index_of(self, chi: ClassFunction) -> int:
        for i, psi in enumerate(self.irreducibles):
            if psi == chi:
                return i
        raise CharacterError("not an irreducible character of this table")

    def centralizer_orders(self) -> list:
        return [self.group.order // cls.size for cls in self.classes]

    def trivial(self) -> ClassFunction:
        return self.irreducibles[0]

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "order": self.group.order,
            "exponent": self.exponent,
            "classes": [
                {"rep_cycles": format_cycles(c.representative), "size": c.size, "order": c.representative.order()}
                for c in self.classes
            ],
            "irreducibles": [
                {"degree": chi.degree, "values": [v.to_json() for v in chi.values]}
                for chi in self.irreducibles
            ],
        }


# --- Auxiliar Functions ---

def dixon_prime(order: int, exponent: int, above: int = None) -> int:

    """Smallest prime q = 1 (mod exponent) with q > 2*sqrt(order), or the next one after `above`."""

    q = above if above is not None else 2 * isqrt(order)
    while True:
        q = nextprime(q)
        if q % exponent == 1 % exponent and q * q > 4 * order:
            return q

def class_matrices(G: PermGroup, q: int) -> list:

    """
    Class multiplication matrices modulo q.

    M_j[l][k] counts x in C_j with x^-1 z_k in C_l (z_k the representative of
    C_k), so the central character vector of each irreducible is a common
    right eigenvector.
    """

    classes = G.conjugacy_classes()
    r = len(classes)
    matrices = []

    for cls in classes:
        M = np.zeros((r, r), dtype=np.int64)
        inverses = [~x for x in cls.elements]
        for k, target in enumerate(classes):
            z = target.representative
            for xi in inverses:
                M[G.class_index(xi * z), k] += 1
        matrices.append(M % q)

    return matrices

def split_space(B: np.ndarray, M: np.ndarray, q: int) -> list:

    """Splits the row span of B into eigenspaces of M acting on column vectors."""

    d = B.shape[0]
    BT = B.T % q
    MBT = (M @ BT) % q
    pieces = []
    found = 0

    for lam in range(q):
        basis = nullspace_mod((MBT - lam * BT) % q, q)
        if basis.shape[0]:
            pieces.append((basis @ B) % q)
            found += basis.shape[0]
            if found == d:
                return pieces

    raise _SplitFailure(f"eigenspaces of a class matrix do not fill the space mod {q}")

def _power_table(G: PermGroup, exponent: int) -> list:
    out = []
    for cls in G.conjugacy_classes():
        g = cls.representative
        x = G.identity
        row = []
        for _ in range(exponent):
            row.append(G.class_index(x))
            x = x * g
        out.append(row)
    return out


# --- Dixon-Schneider rows ---

def _dixon_rows(G: PermGroup, q: int, exponent: int, powers: list) -> list:
    classes = G.conjugacy_classes()
    r = len(classes)
    order = G.order
    sizes = [cls.size for cls in classes]
    inverse_class = [G.class_index(~cls.representative) for cls in classes]

    # Common eigenvectors of all class matrices
    spaces = [np.eye(r, dtype=np.int64)]
    for M in class_matrices(G, q)[1:]:
        if len(spaces) == r:
            break
        refined = []
        for B in spaces:
            refined.extend([B] if B.shape[0] == 1 else split_space(B, M, q))
        spaces = refined

    if len(spaces) != r:
        raise _SplitFailure(f"only {len(spaces)} of {r} eigenspaces separated mod {q}")

    # Fourier inversion over the powers of each class representative
    z = pow(int(primitive_root(q)), (q - 1) // exponent, q)
    inv_e = pow(exponent, -1, q)
    Z = np.array([[pow(z, (-i * j) % exponent, q) for j in range(exponent)] for i in range(exponent)], dtype=np.int64)
    memo = {}
    rows = []

    for B in spaces:
        w = [int(x) for x in B[0]]
        if w[0] == 0:
            raise _SplitFailure("central character vanishes at the identity")
        scale = pow(w[0], -1, q)
        w = [(x * scale) % q for x in w]

        s = sum(w[k] * w[inverse_class[k]] * pow(sizes[k], -1, q) for k in range(r)) % q
        if s == 0:
            raise _SplitFailure("degenerate norm for a central character")
        target = (order * pow(s, -1, q)) % q
        degree = next((x for x in range(1, isqrt(order) + 1) if (x * x) % q == target), None)
        if degree is None:
            raise _SplitFailure("no admissible degree for a central character")

        values_mod = [(w[k] * degree * pow(sizes[k], -1, q)) % q for k in range(r)]

        values = []
        for k in range(r):
            along = np.array([values_mod[c] for c in powers[k]], dtype=np.int64)
            mults = [int(m) for m in ((along @ Z) % q * inv_e) % q]
            if any(m > degree for m in mults) or sum(mults) != degree:
                raise _SplitFailure("eigenvalue multiplicities do not lift")
            key = tuple(mults)
            if key not in memo:
                memo[key] = Cyclotomic.from_power_coeffs(exponent, mults)
            values.append(memo[key])

        rows.append(values)

    return rows

def _row_key(values: list) -> tuple:
    trivial = all(v == 1 for v in values)
    return (values[0].to_rational(), 0 if trivial else 1, tuple(v.sort_key() for v in values))


# --- Main Function ---

def character_table(G: PermGroup) -> CharacterTable:

    """
    Computes the irreducible characters of G by Dixon-Schneider.

    Class matrices are diagonalized simultaneously over GF(q) for the least
    prime q = 1 (mod exp G) above 2*sqrt|G|; each row is lifted to exact
    cyclotomic values from its values on the powers of every class
    representative. Other admissible primes are tried if one fails.

    Args:
        G (PermGroup): Group within the configured order bound.

    Returns:
        CharacterTable: Rows ordered by degree, trivial character first, then
        by value vectors.
    """

    key = G.key()
    with _TABLE_LOCK:
        cached = _TABLE_CACHE.get(key)
    if cached is not None and cached.group == G:
        return cached

    G.check_capacity()
    settings = get_settings()
    classes = G.conjugacy_classes()
    exponent = G.exponent()
    powers = _power_table(G, exponent)

    q = dixon_prime(G.order, exponent)
    while True:
        if q > settings.dixon_prime_limit:
            raise InternalInconsistencyError(f"no prime up to {settings.dixon_prime_limit} separates the irreducibles")
        try:
            rows = _dixon_rows(G, q, exponent, powers)
            break
        except _SplitFailure as e:
            logger.debug(f"⏳ Prime {q} rejected: {e}")
            q = dixon_prime(G.order, exponent, above=q)

    rows.sort(key=_row_key)
    irreducibles = [ClassFunction(G, values) for values in rows]

    power_maps = {
        p: [G.class_index(cls.representative ** p) for cls in classes]
        for p in primerange(2, exponent + 1)
    }

    table = CharacterTable(
        group=G, classes=classes, irreducibles=irreducibles,
        exponent=exponent, power_maps=power_maps, prime=q,
    )

    logger.info(f"✅ Character table for order {G.order}: {len(irreducibles)} irreducibles (q = {q})")

    with _TABLE_LOCK:
        _TABLE_CACHE[key] = table
    return table
