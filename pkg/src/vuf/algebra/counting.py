"""Brute-force rational point counts, affine and multi-projective.

Projective factors are enumerated by normalized representatives, chart by
chart: the first nonzero coordinate is pinned to 1, so each point of
projective space appears exactly once.  Every counting call estimates its
evaluation work first and refuses to start past the budget.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from ..errors import BudgetExceededError, InvalidInputError
from .gf import FiniteField
from .poly import Poly

__all__ = [
    "DEFAULT_BUDGET",
    "affine_point_count",
    "projective_block_points",
    "projective_point_count",
]

DEFAULT_BUDGET = 10**8


def _check_ring(polys: Sequence[Poly], field: FiniteField) -> tuple[str, ...]:
    if not polys:
        raise InvalidInputError("no polynomials to evaluate")
    vars0 = polys[0].vars
    for f in polys:
        if f.vars != vars0:
            raise InvalidInputError("polynomials live in different rings")
        if f.field != field:
            raise InvalidInputError(
                f"polynomial field {f.field!r} does not match requested {field!r}"
            )
    return vars0


def _compiled(f: Poly, vars: tuple[str, ...]):
    index = {v: i for i, v in enumerate(vars)}
    return [
        (c, [(index[v], e) for v, e in zip(f.vars, m) if e])
        for m, c in f.terms
    ]


def _evaluate_compiled(field: FiniteField, compiled, point) -> int:
    total = 0
    for c, factors in compiled:
        val = c
        for i, e in factors:
            x = point[i]
            if x == 0:
                val = 0
                break
            val = field.mul(val, x if e == 1 else field.pow(x, e))
        if val:
            total = field.add(total, val)
    return total


def _vanishes_at(field, compiled_polys, point) -> bool:
    return all(
        _evaluate_compiled(field, comp, point) == 0 for comp in compiled_polys
    )


def affine_point_count(
    polys: Sequence[Poly],
    field: FiniteField,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Number of common zeros in affine space over the field."""
    vars0 = _check_ring(polys, field)
    space = field.q ** len(vars0)
    if space * len(polys) > budget:
        raise BudgetExceededError(
            f"{space} points x {len(polys)} generators exceeds budget {budget}"
        )
    compiled = [_compiled(f, vars0) for f in polys]
    return sum(
        1
        for point in itertools.product(field.elements(), repeat=len(vars0))
        if _vanishes_at(field, compiled, point)
    )


def projective_block_points(field: FiniteField, size: int) -> Iterable[tuple[int, ...]]:
    """Normalized representatives of projective space on ``size`` coordinates:
    leading zeros, then a pinned 1, then free coordinates."""
    for pivot in range(size):
        free = size - pivot - 1
        for tail in itertools.product(field.elements(), repeat=free):
            yield (0,) * pivot + (1,) + tail


def _block_count(q: int, size: int) -> int:
    return sum(q**k for k in range(size))


def projective_point_count(
    blocks: Sequence[Sequence[str]],
    polys: Sequence[Poly],
    field: FiniteField,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Points of a multi-projective zero locus, one block per factor.

    ``blocks`` partitions the ring variables into the homogeneous blocks of
    the projective factors, in ring order.
    """
    vars0 = _check_ring(polys, field)
    flat = tuple(v for block in blocks for v in block)
    if flat != vars0:
        raise InvalidInputError(
            f"blocks {blocks} do not partition the ring variables {vars0} in order"
        )
    total_points = 1
    for block in blocks:
        total_points *= _block_count(field.q, len(block))
    if total_points * len(polys) > budget:
        raise BudgetExceededError(
            f"{total_points} candidate points x {len(polys)} generators "
            f"exceeds budget {budget}"
        )
    compiled = [_compiled(f, vars0) for f in polys]
    reps = [list(projective_block_points(field, len(block))) for block in blocks]
    return sum(
        1
        for combo in itertools.product(*reps)
        if _vanishes_at(field, compiled, tuple(itertools.chain.from_iterable(combo)))
    )
