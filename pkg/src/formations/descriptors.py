# Builtin Imports
import threading
from dataclasses import dataclass

# Third-party imports
from sympy import isprime, multiplicity, primefactors

# Local Imports
from src.errors import UnknownNameError, UnsupportedGroupError
from src.groups.perm_group import PermGroup
from src.groups.subgroups import is_solvable, is_nilpotent, normal_subgroups
from src.groups.series import chief_series, nilpotent_length




KINDS = (
    "nilpotent", "supersolvable", "p_groups", "pi_groups",
    "p_nilpotent", "metanilpotent", "nilpotent_length",
)

_MEMBER_CACHE = {}
_MEMBER_LOCK = threading.Lock()


@dataclass(frozen=True)
class FormationDescriptor:

    """
    A named saturated formation.

    kind is one of KINDS; primes holds p (p_groups, p_nilpotent) or the prime
    set (pi_groups); length is l for nilpotent_length.
    """

    kind: str
    primes: tuple = ()
    length: int = 0

    @property
    def contains_nilpotent(self) -> bool:
        if self.kind in ("nilpotent", "supersolvable", "p_nilpotent", "metanilpotent"):
            return True
        return self.kind == "nilpotent_length" and self.length >= 1

    @property
    def name(self) -> str:
        if self.kind in ("p_groups", "p_nilpotent"):
            return f"{self.kind.replace('_', '-')}:{self.primes[0]}"
        if self.kind == "pi_groups":
            return "pi-groups:" + ",".join(str(p) for p in self.primes)
        if self.kind == "nilpotent_length":
            return f"nilpotent-length:{self.length}"
        return self.kind

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "FormationDescriptor":

        """
        Reads the command-line formation syntax.

        Args:
            text (str): e.g. "nilpotent", "p-groups:3", "pi-groups:2,3",
                "nilpotent-length:2".

        Returns:
            FormationDescriptor: The parsed formation.
        """

        head, _, arg = text.strip().partition(":")
        kind = head.strip().lower().replace("-", "_")

        try:
            if kind in ("nilpotent", "supersolvable", "metanilpotent") and not arg:
                return cls(kind)
            if kind in ("p_groups", "p_nilpotent"):
                p = int(arg)
                if not isprime(p):
                    raise ValueError(p)
                return cls(kind, (p,))
            if kind == "pi_groups":
                primes = tuple(sorted({int(x) for x in arg.split(",") if x.strip()}))
                if not primes or not all(isprime(p) for p in primes):
                    raise ValueError(arg)
                return cls(kind, primes)
            if kind == "nilpotent_length":
                length = int(arg)
                if length < 0:
                    raise ValueError(length)
                return cls(kind, (), length)
        except ValueError:
            raise UnknownNameError(f"bad formation parameter in {text!r}")

        raise UnknownNameError(f"unknown formation {text!r}")


# Common descriptors
NILPOTENT = FormationDescriptor("nilpotent")
SUPERSOLVABLE = FormationDescriptor("supersolvable")
METANILPOTENT = FormationDescriptor("metanilpotent")


# --- Auxiliar Functions ---

def _has_normal_p_complement(G: PermGroup, p: int) -> bool:
    complement_order = G.order // p ** multiplicity(p, G.order)
    return any(N.order == complement_order for N in normal_subgroups(G))

def _chief_factors_prime(G: PermGroup) -> bool:
    series = chief_series(G)
    return all(isprime(B.order // A.order) for A, B in zip(series, series[1:]))


# --- Main Function ---

def is_member(G: PermGroup, F: FormationDescriptor) -> bool:

    """
    Membership of a solvable group in a formation.

    Args:
        G (PermGroup): A solvable group.
        F (FormationDescriptor): The formation.

    Returns:
        bool: True when G lies in F.
    """

    key = (G.key(), F)
    with _MEMBER_LOCK:
        if key in _MEMBER_CACHE:
            return _MEMBER_CACHE[key]

    if not is_solvable(G):
        raise UnsupportedGroupError("formation membership is only defined here for solvable groups")

    divisors = set(primefactors(G.order))

    if F.kind == "nilpotent":
        result = is_nilpotent(G)
    elif F.kind == "supersolvable":
        result = _chief_factors_prime(G)
    elif F.kind in ("p_groups", "pi_groups"):
        result = divisors <= set(F.primes)
    elif F.kind == "p_nilpotent":
        result = _has_normal_p_complement(G, F.primes[0])
    elif F.kind == "metanilpotent":
        result = nilpotent_length(G) <= 2
    elif F.kind == "nilpotent_length":
        result = nilpotent_length(G) <= F.length
    else:
        raise UnknownNameError(f"unknown formation kind {F.kind!r}")

    with _MEMBER_LOCK:
        _MEMBER_CACHE[key] = result
    return result
