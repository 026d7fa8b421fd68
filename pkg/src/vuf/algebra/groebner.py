"""Buchberger's algorithm, normal forms, and staircase dimension.

The ideals in this package are tiny (a handful of generators in at most a
dozen variables), so the plain algorithm with the coprimality criterion is
plenty; the output is always the reduced monic basis, which is unique for
the fixed grevlex order and hence independent of generator order.
"""
from __future__ import annotations

import itertools

from ..errors import InvalidInputError
from .poly import Monomial, Poly

__all__ = [
    "normal_form",
    "s_polynomial",
    "groebner_basis",
    "ideal_membership",
    "ideal_dimension",
]


def _divides(m: Monomial, n: Monomial) -> bool:
    return all(a <= b for a, b in zip(m, n))


def _quotient(n: Monomial, m: Monomial) -> Monomial:
    return tuple(b - a for a, b in zip(m, n))


def _lcm(m: Monomial, n: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m, n))


def normal_form(f: Poly, basis: list[Poly]) -> Poly:
    """Remainder of multivariate division by the basis (full reduction)."""
    F = f.field
    remainder = Poly.zero(F, f.vars)
    work = f
    divisors = [(g.leading_monomial(), g.leading_coefficient(), g) for g in basis if not g.is_zero]
    while not work.is_zero:
        m, c = work.terms[0]
        for lm, lc, g in divisors:
            if _divides(lm, m):
                factor = F.mul(c, F.inv(lc))
                work = work - g.monomial_times(_quotient(m, lm), factor)
                break
        else:
            head = Poly(F, f.vars, ((m, c),))
            remainder = remainder + head
            work = work - head
    return remainder


def s_polynomial(f: Poly, g: Poly) -> Poly:
    F = f.field
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = _lcm(lf, lg)
    a = f.monomial_times(_quotient(lcm, lf), F.inv(f.leading_coefficient()))
    b = g.monomial_times(_quotient(lcm, lg), F.inv(g.leading_coefficient()))
    return a - b


def groebner_basis(generators: list[Poly]) -> list[Poly]:
    """Reduced monic grevlex basis of the ideal the generators span."""
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        raise InvalidInputError("empty generator list")
    vars0, field0 = gens[0].vars, gens[0].field
    if any(g.vars != vars0 or g.field != field0 for g in gens):
        raise InvalidInputError("generators live in different rings")

    basis = list(gens)
    pairs = list(itertools.combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop()
        fi, fj = basis[i], basis[j]
        li, lj = fi.leading_monomial(), fj.leading_monomial()
        if _lcm(li, lj) == tuple(a + b for a, b in zip(li, lj)):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        s = normal_form(s_polynomial(fi, fj), basis)
        if not s.is_zero:
            basis.append(s)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))

    # Minimalize: drop members whose leading monomial another one divides.
    minimal: list[Poly] = []
    for g in sorted(basis, key=lambda h: sum(h.leading_monomial())):
        lm = g.leading_monomial()
        if not any(_divides(h.leading_monomial(), lm) for h in minimal):
            minimal.append(g)
    # Reduce each member against the others and normalize to monic.
    reduced = []
    for k, g in enumerate(minimal):
        rest = minimal[:k] + minimal[k + 1 :]
        r = normal_form(g, rest)
        if not r.is_zero:
            reduced.append(r.scale(r.field.inv(r.leading_coefficient())))
    reduced.sort(key=lambda h: h.terms, reverse=True)
    return reduced


def ideal_membership(f: Poly, basis: list[Poly]) -> bool:
    return normal_form(f, basis).is_zero


def ideal_dimension(generators: list[Poly]) -> int:
    """Krull dimension of the affine quotient ring, -1 for the unit ideal.

    Computed from the staircase: the dimension is the largest size of a
    variable subset not containing the support of any leading monomial.
    """
    basis = groebner_basis(generators)
    leads = [g.leading_monomial() for g in basis]
    if any(not any(m) for m in leads):
        return -1
    nvars = len(basis[0].vars)
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]
    for size in range(nvars, 0, -1):
        for subset in itertools.combinations(range(nvars), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0
