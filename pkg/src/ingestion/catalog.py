# Builtin Imports
import os
import json
import itertools
import threading
from dataclasses import dataclass
from functools import lru_cache

# Third-party imports
import numpy as np

# Local Imports
from src.errors import CatalogIntegrityError, UnknownNameError, GroupParseError
from src.formations.descriptors import SUPERSOLVABLE
from src.formations.projectors import residual
from src.groups.perm_group import PermGroup, generate
from src.groups.perms import Perm
from src.groups.subgroups import derived_subgroup, is_solvable
from src.ingestion.group_files import looks_like_group_file, read_group_file
from src.logger import get_logger




logger = get_logger("ingestion.catalog")

# Constants setting
CATALOG_PATH = os.path.join(os.path.dirname(__file__), "../../config/group_catalog.json")

_CATALOG = None
_CATALOG_LOCK = threading.Lock()


@dataclass
class CatalogEntry:

    """A built-in group: its construction record, the expected invariants and the built group."""

    name: str
    construction: dict
    expected: dict
    group: PermGroup


# --- Auxiliar Functions ---

def load_catalog_file(path: str = CATALOG_PATH) -> dict:

    """Loads 'group_catalog.json' with one record per built-in group."""

    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)["group_catalog"]

def _vectors(p: int, d: int) -> list:

    """All vectors of GF(p)^d in base-p order: index of v is sum v_j p^(d-1-j)."""

    return [np.array(v, dtype=np.int64) for v in itertools.product(range(p), repeat=d)]

def _index(v: np.ndarray, p: int) -> int:
    out = 0
    for x in v:
        out = out * p + int(x)
    return out

def _matrix_perm(A: np.ndarray, points: list, p: int, offset: int) -> Perm:

    """Right action v -> vA on the given vectors; offset shifts indices so the listed points start at 0."""

    return Perm(tuple(_index(v @ A % p, p) - offset for v in points))

def build_cyclic(n: int) -> tuple:
    if n == 1:
        return 1, []
    return n, [Perm(tuple(list(range(1, n)) + [0]))]

def build_matrix(p: int, d: int, matrices: list) -> tuple:

    """Linear action of the matrices on the nonzero vectors of GF(p)^d."""

    points = _vectors(p, d)[1:]
    gens = [_matrix_perm(np.array(A, dtype=np.int64) % p, points, p, 1) for A in matrices]
    return len(points), gens

def build_affine(p: int, d: int, matrices: list) -> tuple:

    """Translations by the standard basis together with the matrices, acting on all of GF(p)^d."""

    points = _vectors(p, d)
    gens = []
    for j in range(d):
        e = np.zeros(d, dtype=np.int64)
        e[j] = 1
        gens.append(Perm(tuple(_index((v + e) % p, p) for v in points)))
    gens += [_matrix_perm(np.array(A, dtype=np.int64) % p, points, p, 0) for A in matrices]
    return len(points), gens

def build_group(name: str, construction: dict) -> PermGroup:

    """
    Builds a catalog group from its construction record.

    Args:
        name (str): Catalog name.
        construction (dict): {"type": "cycles" | "cyclic" | "matrix" | "affine", ...}.

    Returns:
        PermGroup: The group on its permutation points.
    """

    kind = construction.get("type")

    if kind == "cycles":
        return generate(construction["degree"], construction["generators"], name=name)
    if kind == "cyclic":
        degree, gens = build_cyclic(construction["n"])
    elif kind == "matrix":
        degree, gens = build_matrix(construction["p"], construction["d"], construction["matrices"])
    elif kind == "affine":
        degree, gens = build_affine(construction["p"], construction["d"], construction["matrices"])
    else:
        raise CatalogIntegrityError(f"{name}: unknown construction type {kind!r}")

    group = PermGroup(degree, gens, name=name)
    group.chain
    return group

def _involutions(G: PermGroup) -> int:
    return sum(1 for g in G.elements if g.order() == 2)

def check_entry(entry: CatalogEntry) -> None:

    """Raises CatalogIntegrityError when the built group differs from its recorded invariants."""

    G, expected, name = entry.group, entry.expected, entry.name

    def require(condition: bool, message: str) -> None:
        if not condition:
            logger.error(f"❌ Catalog entry {name}: {message}")
            raise CatalogIntegrityError(f"{name}: {message}")

    require(G.order == expected["order"], f"order {G.order}, expected {expected['order']}")
    require(len(G.conjugacy_classes()) == expected["classes"],
            f"{len(G.conjugacy_classes())} classes, expected {expected['classes']}")
    require(is_solvable(G) == expected.get("solvable", True), "solvability flag differs")

    if "derived_order" in expected:
        require(derived_subgroup(G).order == expected["derived_order"], "derived subgroup order differs")

    if "unique_involution" in expected:
        require((_involutions(G) == 1) == expected["unique_involution"], "involution count does not match")

    if "supersolvable_residual" in expected:
        want = expected["supersolvable_residual"]
        K = residual(G, SUPERSOLVABLE)
        require(K.order == want["order"], f"supersolvable residual of order {K.order}")
        require(derived_subgroup(K).order == want["derived_order"], "residual has the wrong derived subgroup")
        require(max(g.order() for g in K.elements) <= want["max_element_order"], "residual has elements of large order")
        require((_involutions(K) == 1) == want["unique_involution"], "residual involution count does not match")


# --- Main Function ---

def load_catalog(path: str = CATALOG_PATH) -> list:

    """
    Builds and checks every catalog group.

    Args:
        path (str): Optional. Catalog JSON file.

    Returns:
        list: CatalogEntry records in file order.
    """

    global _CATALOG
    with _CATALOG_LOCK:
        if _CATALOG is not None and path == CATALOG_PATH:
            return _CATALOG

        entries = []
        for name, record in load_catalog_file(path).items():
            entry = CatalogEntry(name=name, construction=record["construction"], expected=record["expected"],
                                 group=build_group(name, record["construction"]))
            check_entry(entry)
            entries.append(entry)

        logger.info(f"✅ Catalog built: {len(entries)} groups")
        if path == CATALOG_PATH:
            _CATALOG = entries
        return entries

def catalog_names(path: str = CATALOG_PATH) -> list:
    return list(load_catalog_file(path).keys())

@lru_cache(maxsize=None)
def get_group(name: str) -> PermGroup:

    """A single catalog group by name, built and checked on its own."""

    records = load_catalog_file()
    if name not in records:
        raise UnknownNameError(f"unknown catalog group {name!r}")

    record = records[name]
    entry = CatalogEntry(name=name, construction=record["construction"], expected=record["expected"],
                         group=build_group(name, record["construction"]))
    check_entry(entry)
    return entry.group

def resolve_group(name_or_path: str) -> PermGroup:

    """A catalog name or a path to a group file."""

    if name_or_path in load_catalog_file():
        return get_group(name_or_path)
    if looks_like_group_file(name_or_path):
        if not os.path.isfile(name_or_path):
            raise GroupParseError(f"group file not found: {name_or_path}")
        return read_group_file(name_or_path)
    raise UnknownNameError(f"unknown catalog group {name_or_path!r}")
