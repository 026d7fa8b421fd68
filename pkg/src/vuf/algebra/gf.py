"""Small finite fields F_{p^k} with exact integer arithmetic.

Elements are encoded as integers in [0, q): the base-p digits are the
coefficients of the residue polynomial, low degree first.  Extensions are
built from a fixed table of irreducibles (Conway polynomials) for
p in {2, 3, 5} and k <= 4, which covers every brute-force run in this
package; the table entries are re-verified irreducible by the test suite.

Fields small enough get dense addition/multiplication tables, making the
point-counting loops pure table lookups.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import InvalidInputError
from ..parabolic import is_prime

__all__ = ["FiniteField", "FieldElement", "finite_field", "IRREDUCIBLES"]

# Monic irreducibles over F_p, coefficients low to high including the
# leading 1.
IRREDUCIBLES: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
}

_TABLE_LIMIT = 128


class FiniteField:
    """Arithmetic on integer-encoded elements of F_{p^k}."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise InvalidInputError(f"characteristic {p} is not prime")
        if k < 1:
            raise InvalidInputError("extension degree must be >= 1")
        if k > 1 and (p, k) not in IRREDUCIBLES:
            raise InvalidInputError(
                f"no irreducible on file for p={p}, k={k}; "
                f"available: {sorted(IRREDUCIBLES)}"
            )
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = IRREDUCIBLES[(p, k)] if k > 1 else (0, 1)
        self._mul_table = None
        self._add_table = None
        if self.q <= _TABLE_LIMIT:
            universe = range(self.q)
            self._add_table = [
                [self._add_raw(a, b) for b in universe] for a in universe
            ]
            self._mul_table = [
                [self._mul_raw(a, b) for b in universe] for a in universe
            ]

    # -- digit helpers ------------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _encode(self, digits) -> int:
        code = 0
        for d in reversed(list(digits)):
            code = code * self.p + (d % self.p)
        return code

    # -- raw arithmetic ------------------------------------------------------

    def _add_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self._encode(x + y for x, y in zip(self._digits(a), self._digits(b)))

    def _mul_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce modulo the monic irreducible
        for deg in range(len(prod) - 1, self.k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for j in range(self.k):
                    prod[deg - self.k + j] = (
                        prod[deg - self.k + j] - c * self.modulus[j]
                    ) % self.p
        return self._encode(prod[: self.k])

    # -- public arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._encode(-d for d in self._digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return self.pow(a, self.q - 2)

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def embed_int(self, n: int) -> int:
        """The image of an integer under Z -> F_q (lands in the prime field)."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code % self.q if self.k == 1 else code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def finite_field(p: int, k: int = 1) -> FiniteField:
    return FiniteField(p, k)


@dataclass(frozen=True)
class FieldElement:
    """Value-type wrapper over the integer encoding, with operators."""

    field: FiniteField
    code: int

    def _check(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise InvalidInputError("elements of different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field._digits(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __repr__(self) -> str:
        return f"{self.field!r}[{self.code}]"
