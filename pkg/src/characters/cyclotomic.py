# Builtin Imports
from fractions import Fraction
from functools import lru_cache
from math import gcd

# Third-party imports
from sympy import Matrix, Poly, Symbol, cyclotomic_poly, divisors, mobius, totient

# Local Imports
from src.errors import CharacterError




X = Symbol("x")


# --- Auxiliar Functions ---

@lru_cache(maxsize=None)
def phi_coeffs(n: int) -> tuple:

    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""

    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(n, X), X).all_coeffs()))

@lru_cache(maxsize=None)
def phi(n: int) -> int:
    return int(totient(n))

@lru_cache(maxsize=None)
def normalized_trace(n: int, k: int) -> Fraction:

    """Trace of zeta_n^k over the rationals divided by the field degree."""

    m = n // gcd(n, k % n)
    return Fraction(int(mobius(m)), phi(m))

def reduce_mod_phi(n: int, coeffs: list) -> tuple:

    """Remainder of a polynomial in zeta_n modulo the n-th cyclotomic polynomial."""

    poly = phi_coeffs(n)
    d = len(poly) - 1
    a = [Fraction(c) for c in coeffs]

    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            for j in range(d + 1):
                a[i - d + j] -= c * poly[j]

    a = a[:d] + [Fraction(0)] * max(0, d - len(a))
    return tuple(a)

def _as_fraction(value):
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return None


class Cyclotomic:

    """
    Exact element of the cyclotomic field Q(zeta_n).

    Stored as the remainder modulo the n-th cyclotomic polynomial in the power
    basis 1, zeta_n, ..., zeta_n^(phi(n)-1). Values with different conductors
    are compared after lifting both to the least common multiple.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        self.conductor = conductor
        self.coeffs = reduce_mod_phi(conductor, coeffs)

    # --- Constructors ---

    @classmethod
    def rational(cls, value) -> "Cyclotomic":
        return cls(1, [Fraction(value)])

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "Cyclotomic":
        coeffs = [0] * n
        coeffs[k % n] = 1
        return cls(n, coeffs)

    @classmethod
    def from_power_coeffs(cls, n: int, powers: list) -> "Cyclotomic":

        """Builds sum_k powers[k] * zeta_n^k from a full length-n vector."""

        return cls(n, powers)

    @classmethod
    def coerce(cls, value) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        as_fraction = _as_fraction(value)
        if as_fraction is None:
            raise CharacterError(f"cannot coerce {value!r} to a cyclotomic number")
        return cls.rational(as_fraction)

    # --- Conductor handling ---

    def lift(self, m: int) -> "Cyclotomic":

        """Same value written with conductor m, a multiple of the current one."""

        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise CharacterError(f"conductor {m} is not a multiple of {n}")
        step = m // n
        powers = [Fraction(0)] * m
        for k, c in enumerate(self.coeffs):
            powers[k * step] += c
        return Cyclotomic(m, powers)

    def _common(self, other: "Cyclotomic") -> tuple:
        if self.conductor == other.conductor:
            return self, other
        m = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.lift(m), other.lift(m)

    def galois(self, k: int) -> "Cyclotomic":

        """Image under zeta_n -> zeta_n^k, k coprime to the conductor."""

        n = self.conductor
        if gcd(k, n) != 1:
            raise CharacterError(f"{k} is not a unit modulo {n}")
        powers = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            powers[(i * k) % n] += c
        return Cyclotomic(n, powers)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1 % self.conductor if self.conductor > 1 else 1)

    def is_fixed_by(self, k: int) -> bool:
        return self.galois(k) == self

    def reduced_conductor(self) -> int:

        """Smallest d such that the value lies in Q(zeta_d)."""

        n = self.conductor
        units = [k for k in range(1, n + 1) if gcd(k, n) == 1]
        for d in divisors(n):
            if all(self.is_fixed_by(k) for k in units if (k - 1) % d == 0):
                return d
        return n

    def reduced(self) -> "Cyclotomic":

        """Same value written over its smallest cyclotomic field."""

        d = self.reduced_conductor()
        if d == self.conductor:
            return self

        # Solve sum_i c_i * lift(zeta_d^i) = self for rational c_i
        basis = [Cyclotomic.root_of_unity(d, i).lift(self.conductor).coeffs for i in range(phi(d))]
        A = Matrix([[basis[i][r] for i in range(len(basis))] for r in range(len(self.coeffs))])
        b = Matrix(list(self.coeffs))
        solution, params = A.gauss_jordan_solve(b)
        values = [Fraction(int(v.p), int(v.q)) for v in solution]
        return Cyclotomic(d, values)

    # --- Predicates ---

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise CharacterError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_integer(self) -> bool:
        return self.is_rational() and self.to_rational().denominator == 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # --- Arithmetic ---

    def __add__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except CharacterError:
            return NotImplemented
        a, b = self._common(other)
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except CharacterError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        scalar = _as_fraction(other)
        if scalar is not None:
            return Cyclotomic(self.conductor, [c * scalar for c in self.coeffs])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.conductor == 1:
            return self * other.coeffs[0]
        if self.conductor == 1:
            return other * self.coeffs[0]

        a, b = self._common(other)
        product = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        product[i + j] += x * y
        return Cyclotomic(a.conductor, product)

    __rmul__ = __mul__

    def norm(self) -> Fraction:

        """Field norm from Q(zeta_n) to Q."""

        n = self.conductor
        result = Cyclotomic.rational(1)
        for k in range(1, n + 1):
            if gcd(k, n) == 1:
                result = result * self.galois(k % n if n > 1 else 1)
        return result.to_rational()

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.to_rational())
        n = self.conductor
        others = Cyclotomic.rational(1)
        for k in range(2, n):
            if gcd(k, n) == 1:
                others = others * self.galois(k)
        return others * (1 / self.norm())

    def __truediv__(self, other):
        scalar = _as_fraction(other)
        if scalar is not None:
            return self * (1 / scalar)
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.rational(1)
        for _ in range(exponent):
            result = result * self
        return result

    # --- Comparison and hashing ---

    def __eq__(self, other):
        if not isinstance(other, Cyclotomic):
            as_fraction = _as_fraction(other)
            if as_fraction is None:
                return NotImplemented
            return self.is_rational() and self.to_rational() == as_fraction
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        n = self.conductor
        trace = sum((c * normalized_trace(n, k) for k, c in enumerate(self.coeffs) if c), Fraction(0))
        return hash(trace)

    def sort_key(self) -> tuple:
        return (self.conductor, self.coeffs)

    # --- Display and serialization ---

    def __str__(self) -> str:
        value = self.reduced()
        if value.is_rational():
            return str(value.to_rational())

        n = value.conductor
        terms = []
        for k, c in enumerate(value.coeffs):
            if not c:
                continue
            root = "1" if k == 0 else (f"E({n})" if k == 1 else f"E({n})^{k}")
            if k == 0:
                term = str(c)
            elif c == 1:
                term = root
            elif c == -1:
                term = f"-{root}"
            else:
                term = f"{c}*{root}"
            terms.append(term)
        return "+".join(terms).replace("+-", "-")

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    def to_json(self) -> dict:
        value = self.reduced()
        return {"conductor": value.conductor, "coeffs": [f"{c.numerator}/{c.denominator}" for c in value.coeffs]}
