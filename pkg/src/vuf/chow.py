"""Integral Chow-group bookkeeping for the quotient by a thickened parabolic.

The Schubert classes of the thickened and the reduced flag variety match up
one to one; what changes is the transfer: pushing a class forward multiplies
it by ``p**d(w)`` and pulling back multiplies by ``p**(d(top) - d(w))``,
where ``d(w)`` adds the exponents of the thickening directions that ``w``
carries into the unipotent radical.  Everything here stores exponents, never
expanded powers, so large exponents cost nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidInputError
from .parabolic import ParabolicDatum
from .weyl import LeviSubset, WeylElement, minimal_coset_reps

__all__ = [
    "IntPolynomial",
    "PrimePower",
    "SchubertBasis",
    "TransferMatrix",
    "schubert_basis",
    "d_exponent",
    "pushforward_matrix",
    "pullback_matrix",
    "cokernel_order",
    "poincare_polynomial",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in one variable, dense coefficient tuple."""

    coeffs: tuple[int, ...]

    def __call__(self, q: int) -> int:
        return sum(c * q**k for k, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            base = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
            terms.append(base if c == 1 and k > 0 else (f"{c}" if k == 0 else f"{c}{base}"))
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class PrimePower:
    """A power of p kept in factored form."""

    p: int
    exponent: int

    def __int__(self) -> int:
        return self.p**self.exponent

    def __str__(self) -> str:
        return f"{self.p}^{self.exponent}"


@dataclass(frozen=True)
class SchubertBasis:
    """Minimal coset representatives, graded by length."""

    levi: LeviSubset
    reps: tuple[WeylElement, ...]

    def __len__(self) -> int:
        return len(self.reps)

    @property
    def top(self) -> WeylElement:
        """Representative of the unique top-dimensional class."""
        return self.reps[-1]


def schubert_basis(levi: LeviSubset) -> SchubertBasis:
    return SchubertBasis(levi, minimal_coset_reps(levi))


def _check_minimal_rep(datum: ParabolicDatum, w: WeylElement) -> None:
    if not all(
        w.act(datum.system.simple(i)).is_positive for i in datum.levi.indices
    ):
        raise InvalidInputError(f"{w} is not a minimal coset representative")


def d_exponent(datum: ParabolicDatum, w: WeylElement) -> int:
    """Sum of exponents over thickening directions sent into the radical by w."""
    _check_minimal_rep(datum, w)
    radical = datum.levi.radical_roots
    return sum(n for root, n in datum.orders if w.act(root) in radical)


@dataclass(frozen=True)
class TransferMatrix:
    """Diagonal transfer matrix over the Schubert basis, as p-exponents."""

    basis: SchubertBasis
    direction: str  # "pushforward" or "pullback"
    p: int
    exponents: tuple[int, ...]

    def entry(self, k: int) -> int:
        return self.p ** self.exponents[k]

    @cached_property
    def entries(self) -> tuple[int, ...]:
        return tuple(self.entry(k) for k in range(len(self.exponents)))


def _exponent_vector(datum: ParabolicDatum, basis: SchubertBasis) -> tuple[int, ...]:
    return tuple(d_exponent(datum, w) for w in basis.reps)


def pushforward_matrix(datum: ParabolicDatum) -> TransferMatrix:
    basis = schubert_basis(datum.levi)
    return TransferMatrix(basis, "pushforward", datum.p, _exponent_vector(datum, basis))


def pullback_matrix(datum: ParabolicDatum) -> TransferMatrix:
    basis = schubert_basis(datum.levi)
    d = _exponent_vector(datum, basis)
    top = max(d, default=0)
    tops = d[-1] if d else 0
    if top != tops:
        # The top class must dominate every exponent; anything else means the
        # grading or the exponent rule broke.
        raise InvalidInputError("top-class exponent is not maximal")
    return TransferMatrix(basis, "pullback", datum.p, tuple(tops - dk for dk in d))


def cokernel_order(datum: ParabolicDatum) -> PrimePower:
    """Order of the pullback cokernel: the product of the diagonal cokernels."""
    pull = pullback_matrix(datum)
    return PrimePower(datum.p, sum(pull.exponents))


def poincare_polynomial(levi: LeviSubset) -> IntPolynomial:
    """Cell-count polynomial: the coefficient of q^k counts length-k classes."""
    basis = schubert_basis(levi)
    coeffs = [0] * (basis.reps[-1].length + 1 if basis.reps else 1)
    for w in basis.reps:
        coeffs[w.length] += 1
    return IntPolynomial(tuple(coeffs))
