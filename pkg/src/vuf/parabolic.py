"""Data of a possibly nonreduced parabolic subgroup containing the Borel.

A parabolic P with reduced part P_I is recorded by its Levi subset together
with the infinitesimal part of P inside the opposite unipotent: a set of
negative roots, each carrying a nilpotency exponent ``n`` (the direction is
fattened to order ``p**n``).  The reduced case is the empty direction set.

Two constructors are provided.  ``from_profile`` starts from exponents on
the negative simple roots and propagates them to every negative root whose
coroot pairs positively with a constrained simple root, taking the minimum
over those constraints; its output always satisfies the propagation law.
``from_explicit`` stores a direction set verbatim; the propagation law is
then enforced (strict mode) or only reported as a warning (permissive mode,
the default), because the worked examples this package reproduces use
direction sets that are not propagation-closed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Optional

from .errors import InvalidInputError
from .rootsys import Root, RootSystem
from .weyl import LeviSubset

__all__ = [
    "ParabolicDatum",
    "from_profile",
    "from_explicit",
    "thickening_length",
    "is_prime",
]

PERMISSIVE = "permissive"
STRICT = "strict"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ParabolicDatum:
    """Levi subset, thickening directions with exponents, and characteristic."""

    system: RootSystem
    levi: LeviSubset
    orders: tuple[tuple[Root, int], ...]
    p: int
    mode: str = PERMISSIVE
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def roots(self) -> tuple[Root, ...]:
        """The thickening directions (the negative roots carrying exponents)."""
        return tuple(r for r, _ in self.orders)

    @cached_property
    def exponents(self) -> dict[Root, int]:
        return dict(self.orders)

    @property
    def is_reduced(self) -> bool:
        return not self.orders

    def exponent(self, root: Root) -> Optional[int]:
        return self.exponents.get(root)

    def __str__(self) -> str:
        inner = ", ".join(f"{r}:{n}" for r, n in self.orders)
        levi = "".join(self.system.simple_names[i] for i in sorted(self.levi.indices))
        return f"P({self.system.name}, levi=[{levi}], {{{inner}}}, p={self.p})"


def _constraining_simples(system: RootSystem, theta_pos: Root) -> list[int]:
    """Simple indices whose root pairs positively with the coroot of theta."""
    return [j for j in range(system.rank) if system.pairing(theta_pos, j) > 0]


def _check_common(system: RootSystem, p: int) -> None:
    if not is_prime(p):
        raise InvalidInputError(f"characteristic {p} is not prime")


def _sorted_orders(system: RootSystem, orders: Mapping[Root, int]):
    return tuple(
        sorted(orders.items(), key=lambda item: system.index((-item[0]).coeffs))
    )


def from_profile(
    system: RootSystem,
    profile: Mapping[Root, Optional[int]],
    p: int,
    levi: Optional[LeviSubset] = None,
) -> ParabolicDatum:
    """Build the propagation closure of exponents on negative simple roots.

    ``profile`` maps negative simple roots to exponents; ``None`` means no
    thickening in that direction.  Only the Borel case is supported here:
    pass ``from_explicit`` data for a general Levi.
    """
    _check_common(system, p)
    levi = levi if levi is not None else LeviSubset.of(system)
    if not levi.is_borel:
        raise InvalidInputError("profiles are only defined over the Borel case")

    finite: dict[int, int] = {}
    for root, exponent in profile.items():
        minus = -root
        if not (root.system == system and minus.is_positive and minus.height == 1):
            raise InvalidInputError(f"profile key {root} is not a negative simple root")
        if exponent is None:
            continue
        if exponent < 1:
            raise InvalidInputError(f"exponent {exponent} for {root} must be >= 1")
        finite[next(iter(minus.support))] = exponent

    orders: dict[Root, int] = {}
    for theta in system.positive_roots:
        constraints = [
            finite[j] for j in _constraining_simples(system, theta) if j in finite
        ]
        if constraints:
            orders[-theta] = min(constraints)
    return ParabolicDatum(system, levi, _sorted_orders(system, orders), p, STRICT, ())


def from_explicit(
    system: RootSystem,
    levi: LeviSubset,
    orders: Mapping[Root, int],
    p: int,
    mode: str = PERMISSIVE,
) -> ParabolicDatum:
    """Store a direction set verbatim, validating it against the Levi."""
    _check_common(system, p)
    if mode not in (PERMISSIVE, STRICT):
        raise InvalidInputError(f"unknown validation mode {mode!r}")
    radical = levi.radical_roots
    for root, exponent in orders.items():
        if root.system != system:
            raise InvalidInputError("direction root belongs to a different system")
        if root.is_positive or -root not in radical:
            raise InvalidInputError(
                f"direction {root} is not a negative root of the unipotent radical"
            )
        if exponent < 1:
            raise InvalidInputError(f"exponent {exponent} for {root} must be >= 1")
    datum = ParabolicDatum(system, levi, _sorted_orders(system, orders), p, mode, ())
    violations = propagation_violations(datum)
    if violations:
        if mode == STRICT:
            raise InvalidInputError("; ".join(violations))
        datum = ParabolicDatum(
            system, levi, datum.orders, p, mode, tuple(violations)
        )
    return datum


def propagation_violations(datum: ParabolicDatum) -> list[str]:
    """Mismatches against the exponent propagation law, as messages.

    For each direction with positive form theta, the constraining set is the
    simple roots that are themselves directions of the datum and pair
    positively with the coroot of theta; when nonempty, the exponent must be
    the minimum of theirs.
    """
    system = datum.system
    exponents = datum.exponents
    messages = []
    for root, n in datum.orders:
        theta = -root
        constraining = [
            exponents[-system.simple(j)]
            for j in _constraining_simples(system, theta)
            if -system.simple(j) in exponents
        ]
        if constraining and n != min(constraining):
            messages.append(
                f"direction {root} has exponent {n}, propagation expects {min(constraining)}"
            )
    return messages


def thickening_length(datum: ParabolicDatum) -> int:
    """Total infinitesimal length; the quotient map has degree p to this power."""
    return sum(n for _, n in datum.orders)
